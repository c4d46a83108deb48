#include "coupler/term_order.hpp"

#include <algorithm>
#include <numeric>

#include "coupler/error.hpp"

namespace coupler {

OrderKind order_kind_from_name(std::string_view name) {
  if (name == "lex") return OrderKind::lex;
  if (name == "revlex") return OrderKind::revlex;
  if (name == "deglex") return OrderKind::deglex;
  if (name == "degrevlex") return OrderKind::degrevlex;
  throw Error("unknown term order '" + std::string(name) + "'");
}

std::string_view order_kind_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::lex: return "lex";
    case OrderKind::revlex: return "revlex";
    case OrderKind::deglex: return "deglex";
    case OrderKind::degrevlex: return "degrevlex";
  }
  throw Error("bad order kind");
}

TermOrder::TermOrder(OrderKind kind, std::shared_ptr<const VarSet> vars)
    : kind_(kind), vars_(std::move(vars)), prec_(vars_->size()) {
  std::iota(prec_.begin(), prec_.end(), std::size_t{0});
}

TermOrder::TermOrder(OrderKind kind, std::shared_ptr<const VarSet> vars,
                     const std::vector<std::string>& precedence)
    : kind_(kind), vars_(std::move(vars)) {
  if (precedence.size() != vars_->size())
    throw Error("precedence must list every variable exactly once");
  std::vector<bool> seen(vars_->size(), false);
  prec_.reserve(precedence.size());
  for (const auto& name : precedence) {
    std::size_t i = vars_->index_of(name);
    if (seen[i]) throw Error("duplicate variable '" + name + "' in precedence");
    seen[i] = true;
    prec_.push_back(i);
  }
}

TermOrder TermOrder::block(OrderKind kind, std::shared_ptr<const VarSet> vars,
                           const std::vector<std::string>& precedence,
                           std::vector<std::size_t> block_sizes) {
  TermOrder ord(kind, std::move(vars), precedence);
  std::size_t total = 0;
  for (std::size_t s : block_sizes) {
    if (s == 0) throw Error("block order with an empty block");
    total += s;
  }
  if (total != ord.prec_.size())
    throw Error("block sizes must sum to the variable count");
  ord.blocks_ = std::move(block_sizes);
  return ord;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != vars_->size() || b.nvars() != vars_->size())
    throw Error("monomial arity does not match the order's varset");
  auto lex_scan = [&](std::size_t lo, std::size_t hi) -> int {
    for (std::size_t k = lo; k < hi; ++k) {
      int d = a.exp(prec_[k]) - b.exp(prec_[k]);
      if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
  };
  // Reversed scan: first difference from the least-significant side; the
  // *smaller* exponent there wins.
  auto revlex_scan = [&](std::size_t lo, std::size_t hi) -> int {
    for (std::size_t k = hi; k-- > lo;) {
      int d = a.exp(prec_[k]) - b.exp(prec_[k]);
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  };
  auto degree_delta = [&](std::size_t lo, std::size_t hi) -> int {
    int d = 0;
    for (std::size_t k = lo; k < hi; ++k)
      d += a.exp(prec_[k]) - b.exp(prec_[k]);
    return d;
  };
  auto cmp_range = [&](std::size_t lo, std::size_t hi) -> int {
    switch (kind_) {
      case OrderKind::lex:
        return lex_scan(lo, hi);
      case OrderKind::revlex:
        return revlex_scan(lo, hi);
      case OrderKind::deglex: {
        int d = degree_delta(lo, hi);
        if (d != 0) return d > 0 ? 1 : -1;
        return lex_scan(lo, hi);
      }
      case OrderKind::degrevlex: {
        int d = degree_delta(lo, hi);
        if (d != 0) return d > 0 ? 1 : -1;
        return revlex_scan(lo, hi);
      }
    }
    throw Error("bad order kind");
  };
  if (blocks_.empty()) return cmp_range(0, prec_.size());
  std::size_t lo = 0;
  for (std::size_t s : blocks_) {
    int d = cmp_range(lo, lo + s);
    if (d != 0) return d;
    lo += s;
  }
  return 0;
}

}  // namespace coupler
