#pragma once
// Internal sorted-term working form shared by division and basis search.
#include <utility>
#include <vector>

#include "coupler/polynomial.hpp"
#include "coupler/term_order.hpp"

namespace coupler::detail {

// Terms strictly descending under the active order.
struct QPoly {
  std::vector<Term> t;
  bool empty() const { return t.empty(); }
};

inline QPoly to_sorted(const Polynomial& p, const TermOrder& ord) {
  QPoly q;
  q.t.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) q.t.push_back({m, c});
  std::sort(q.t.begin(), q.t.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  return q;
}

inline Polynomial from_sorted(const QPoly& q,
                              const std::shared_ptr<const VarSet>& vars) {
  return Polynomial::from_terms(vars, q.t);
}

// p -= c * X^m * d, keeping the descending invariant.
inline void submul(QPoly& p, const Rational& c, const Monomial& m,
                   const QPoly& d, const TermOrder& ord) {
  std::vector<Term> out;
  out.reserve(p.t.size() + d.t.size());
  std::size_t i = 0, j = 0;
  while (i < p.t.size() || j < d.t.size()) {
    if (j == d.t.size()) {
      out.push_back(std::move(p.t[i++]));
      continue;
    }
    Monomial dm = d.t[j].mono.times(m);
    if (i == p.t.size()) {
      out.push_back({std::move(dm), -(c * d.t[j].coeff)});
      ++j;
      continue;
    }
    int cmp = ord.compare(p.t[i].mono, dm);
    if (cmp > 0) {
      out.push_back(std::move(p.t[i++]));
    } else if (cmp < 0) {
      out.push_back({std::move(dm), -(c * d.t[j].coeff)});
      ++j;
    } else {
      Rational nc = p.t[i].coeff - c * d.t[j].coeff;
      if (!nc.is_zero()) out.push_back({p.t[i].mono, std::move(nc)});
      ++i;
      ++j;
    }
  }
  p.t = std::move(out);
}

}  // namespace coupler::detail
