#pragma once
#include <cstddef>
#include <vector>

namespace coupler {

// Exponent vector over a fixed number of variables (power product).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  // The power product var^exp; throws on bad index or negative exponent.
  static Monomial unit(std::size_t nvars, std::size_t var, int exp = 1);

  std::size_t nvars() const { return e_.size(); }
  int exp(std::size_t i) const { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }
  int total_degree() const;
  bool is_one() const;

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;       // this | o
  Monomial quotient(const Monomial& o) const;  // this / o; throws unless o | this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;  // no shared variable

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  // Container ordering only (raw exponent-vector comparison) — NOT a term
  // order; use TermOrder::compare for those.
  struct VecLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return a.e_ < b.e_;
    }
  };

 private:
  std::vector<int> e_;
};

}  // namespace coupler
