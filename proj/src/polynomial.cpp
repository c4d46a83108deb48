#include "coupler/polynomial.hpp"

#include <algorithm>

#include "coupler/error.hpp"

namespace coupler {

namespace {
const std::shared_ptr<const VarSet>& empty_vars() {
  static const std::shared_ptr<const VarSet> vs = VarSet::make({});
  return vs;
}
}  // namespace

Polynomial::Polynomial() : vars_(empty_vars()) {}

Polynomial::Polynomial(std::shared_ptr<const VarSet> vars)
    : vars_(std::move(vars)) {
  if (!vars_) throw Error("polynomial needs a varset");
}

Polynomial Polynomial::constant(std::shared_ptr<const VarSet> vars,
                                Rational c) {
  Polynomial p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.vars_->size()), std::move(c));
  return p;
}

Polynomial Polynomial::variable(std::shared_ptr<const VarSet> vars,
                                std::string_view name) {
  Polynomial p(std::move(vars));
  std::size_t i = p.vars_->index_of(name);
  p.terms_.emplace(Monomial::unit(p.vars_->size(), i), Rational(1));
  return p;
}

Polynomial Polynomial::from_terms(std::shared_ptr<const VarSet> vars,
                                  const std::vector<Term>& terms) {
  Polynomial p(std::move(vars));
  for (const auto& t : terms) {
    if (t.mono.nvars() != p.vars_->size())
      throw Error("term arity does not match varset");
    p.add_term(t.mono, t.coeff);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_coeff() const {
  return coeff(Monomial(vars_->size()));
}

int Polynomial::degree() const {
  if (is_zero()) throw Error("degree of the zero polynomial");
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  if (var >= vars_->size()) throw Error("variable index out of range");
  if (is_zero()) throw Error("degree of the zero polynomial");
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return d;
}

Term Polynomial::leading_term(const TermOrder& ord) const {
  if (is_zero()) throw Error("leading term of the zero polynomial");
  if (!(ord.vars() == *vars_)) throw Error("order varset mismatch");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (ord.greater(it->first, best->first)) best = it;
  }
  return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const TermOrder& ord) const {
  return leading_term(ord).mono;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same_vars(const Polynomial& o) const {
  if (!(*vars_ == *o.vars_)) throw Error("varset mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial p(vars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_vars(o);
  Polynomial p(vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      p.add_term(ma.times(mb), ca * cb);
    }
  }
  return p;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  if (m.nvars() != vars_->size()) throw Error("term arity mismatch");
  Polynomial p(vars_);
  if (c.is_zero()) return p;
  for (const auto& [mm, cc] : terms_) p.terms_.emplace(mm.times(m), cc * c);
  return p;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw Error("negative power");
  Polynomial r = constant(vars_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_->size())
    throw Error("evaluation point arity mismatch");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < m.exp(i); ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Rational Polynomial::evaluate_at(
    const std::map<std::string, Rational>& point) const {
  std::vector<Rational> v(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = point.find(vars_->name(i));
    if (it == point.end())
      throw Error("evaluation point misses variable '" + vars_->name(i) + "'");
    v[i] = it->second;
  }
  return evaluate(v);
}

Polynomial Polynomial::substitute(std::string_view var,
                                  const Polynomial& repl) const {
  check_same_vars(repl);
  std::size_t vi = vars_->index_of(var);
  Polynomial out(vars_);
  // Cache powers of the replacement as needed.
  std::vector<Polynomial> powers{constant(vars_, Rational(1))};
  for (const auto& [m, c] : terms_) {
    int e = m.exp(vi);
    while (static_cast<int>(powers.size()) <= e)
      powers.push_back(powers.back() * repl);
    Monomial rest(m);
    rest = rest.quotient(Monomial::unit(vars_->size(), vi, e));
    out += powers[e].times_term(c, rest);
  }
  return out;
}

Polynomial Polynomial::rename_vars(
    std::shared_ptr<const VarSet> target) const {
  Polynomial out(target);
  std::vector<int> map(vars_->size(), -1);
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (auto j = target->find(vars_->name(i))) map[i] = static_cast<int>(*j);
  }
  for (const auto& [m, c] : terms_) {
    Monomial mm(target->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      int e = m.exp(i);
      if (e == 0) continue;
      if (map[i] < 0)
        throw Error("variable '" + vars_->name(i) +
                    "' is used but missing from the target varset");
      mm = mm.times(Monomial::unit(target->size(), map[i], e));
    }
    out.add_term(mm, c);
  }
  return out;
}

Polynomial Polynomial::primitive(const TermOrder& ord) const {
  if (is_zero()) return *this;
  // lcm of denominators, then gcd of numerators.
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& [m, c] : terms_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  for (const auto& [m, c] : terms_) {
    mpz_class scaled = c.num() * (den_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(mpq_class(den_lcm, num_gcd));
  Polynomial out = *this;
  out *= scale;
  if (out.leading_term(ord).coeff.sign() < 0) out *= Rational(-1);
  return out;
}

bool Polynomial::equals_up_to_scalar(const Polynomial& o) const {
  if (!(*vars_ == *o.vars_)) return false;
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  Rational ratio = a->second / b->second;
  for (; a != terms_.end(); ++a, ++b) {
    if (!(a->first == b->first)) return false;
    if (!(a->second == b->second * ratio)) return false;
  }
  return true;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return *vars_ == *o.vars_ && terms_ == o.terms_;
}

}  // namespace coupler
