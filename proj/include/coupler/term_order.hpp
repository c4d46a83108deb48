#pragma once
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "coupler/monomial.hpp"
#include "coupler/varset.hpp"

namespace coupler {

enum class OrderKind { lex, revlex, deglex, degrevlex };

OrderKind order_kind_from_name(std::string_view name);  // throws on unknown
std::string_view order_kind_name(OrderKind kind);

// Monomial comparison over a fixed varset with an explicit variable
// precedence (front of the permutation = greatest variable; default is the
// varset's own order). revlex is included for study but is not admissible —
// 1 is not its minimum — so algorithms requiring a well-order reject it.
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::shared_ptr<const VarSet> vars);
  TermOrder(OrderKind kind, std::shared_ptr<const VarSet> vars,
            const std::vector<std::string>& precedence);  // greatest first

  // Block order: the precedence is split into consecutive blocks (sizes must
  // sum to the variable count) and monomials are compared block by block with
  // `kind` inside each block. Every variable of an earlier block dominates
  // every later variable, so a ⟨drop, keep⟩ split is an elimination order.
  static TermOrder block(OrderKind kind, std::shared_ptr<const VarSet> vars,
                         const std::vector<std::string>& precedence,
                         std::vector<std::size_t> block_sizes);

  OrderKind kind() const { return kind_; }
  const VarSet& vars() const { return *vars_; }
  const std::shared_ptr<const VarSet>& vars_ptr() const { return vars_; }
  const std::vector<std::size_t>& precedence() const { return prec_; }
  bool admissible() const { return kind_ != OrderKind::revlex; }

  // <0, 0, >0 as a is below, equal to, above b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

 private:
  OrderKind kind_;
  std::shared_ptr<const VarSet> vars_;
  std::vector<std::size_t> prec_;  // prec_[0] = index of the greatest variable
  std::vector<std::size_t> blocks_;  // block sizes; empty = one block
};

}  // namespace coupler
