#include "coupler/monomial.hpp"

#include <algorithm>

#include "coupler/error.hpp"

namespace coupler {

Monomial Monomial::unit(std::size_t nvars, std::size_t var, int exp) {
  if (var >= nvars) throw Error("variable index out of range");
  if (exp < 0) throw Error("negative exponent");
  Monomial m(nvars);
  m.e_[var] = exp;
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& o) const {
  if (e_.size() != o.e_.size()) throw Error("monomial arity mismatch");
  Monomial m(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (e_.size() != o.e_.size()) throw Error("monomial arity mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > o.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  if (!o.divides(*this)) throw Error("monomial quotient is not a monomial");
  Monomial m(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.e_.size() != b.e_.size()) throw Error("monomial arity mismatch");
  Monomial m(a);
  for (std::size_t i = 0; i < m.e_.size(); ++i)
    m.e_[i] = std::max(m.e_[i], b.e_[i]);
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  if (e_.size() != o.e_.size()) throw Error("monomial arity mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  }
  return true;
}

}  // namespace coupler
