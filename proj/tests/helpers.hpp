#pragma once
#include <random>
#include <string>
#include <vector>

#include "coupler/polynomial.hpp"

namespace coupler::testing {

inline Polynomial P(std::string_view text,
                    const std::shared_ptr<const VarSet>& vars) {
  return parse_polynomial(text, vars);
}

inline Rational random_rational(std::mt19937& rng, int num_span = 20,
                                int den_span = 10) {
  std::uniform_int_distribution<int> num(-num_span, num_span);
  std::uniform_int_distribution<int> den(1, den_span);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int num_span = 20,
                                        int den_span = 10) {
  for (;;) {
    Rational r = random_rational(rng, num_span, den_span);
    if (!r.is_zero()) return r;
  }
}

inline Polynomial random_polynomial(std::mt19937& rng,
                                    const std::shared_ptr<const VarSet>& vars,
                                    int max_terms = 5, int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  Polynomial p(vars);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m(vars->size());
    for (std::size_t i = 0; i < vars->size(); ++i) {
      int e = exp(rng);
      if (e > 0) m = m.times(Monomial::unit(vars->size(), i, e));
    }
    p += Polynomial::from_terms(vars, {{m, random_rational(rng)}});
  }
  return p;
}

inline Polynomial random_nonzero_polynomial(
    std::mt19937& rng, const std::shared_ptr<const VarSet>& vars,
    int max_terms = 5, int max_exp = 3) {
  for (;;) {
    Polynomial p = random_polynomial(rng, vars, max_terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t n,
                                          int num_span = 10,
                                          int den_span = 6) {
  std::vector<Rational> pt;
  pt.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pt.push_back(random_rational(rng, num_span, den_span));
  return pt;
}

}  // namespace coupler::testing
