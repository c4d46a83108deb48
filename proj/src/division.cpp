#include "coupler/division.hpp"

#include "coupler/error.hpp"
#include "opoly.hpp"

namespace coupler {

using detail::QPoly;

namespace {

struct Prepared {
  std::vector<QPoly> divisors;
  std::vector<Term> lts;
};

Prepared prepare(const Polynomial& p, const std::vector<Polynomial>& divisors,
                 const TermOrder& ord) {
  if (!ord.admissible())
    throw Error("division requires an admissible term order");
  if (!(ord.vars() == p.vars())) throw Error("order varset mismatch");
  Prepared out;
  out.divisors.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (!(d.vars() == p.vars())) throw Error("varset mismatch");
    if (d.is_zero()) throw Error("cannot divide by the zero polynomial");
    out.divisors.push_back(detail::to_sorted(d, ord));
    out.lts.push_back(d.leading_term(ord));
  }
  return out;
}

// Index of the first divisor whose leading monomial divides m, or -1.
int first_divisor(const Prepared& prep, const Monomial& m) {
  for (std::size_t i = 0; i < prep.lts.size(); ++i) {
    if (prep.lts[i].mono.divides(m)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

DivisionResult divide(const Polynomial& p,
                      const std::vector<Polynomial>& divisors,
                      const TermOrder& ord) {
  Prepared prep = prepare(p, divisors, ord);
  QPoly work = detail::to_sorted(p, ord);
  QPoly rem;
  std::vector<QPoly> quot(divisors.size());
  while (!work.empty()) {
    const Term lt = work.t.front();
    int i = first_divisor(prep, lt.mono);
    if (i < 0) {
      rem.t.push_back(lt);
      work.t.erase(work.t.begin());
      continue;
    }
    Rational c = lt.coeff / prep.lts[i].coeff;
    Monomial m = lt.mono.quotient(prep.lts[i].mono);
    // Successive quotient monomials for one divisor strictly decrease, so
    // plain appends keep the sorted invariant.
    quot[i].t.push_back({m, c});
    detail::submul(work, c, m, prep.divisors[i], ord);
  }
  DivisionResult res;
  res.quotients.reserve(divisors.size());
  for (const auto& q : quot)
    res.quotients.push_back(detail::from_sorted(q, p.vars_ptr()));
  res.remainder = detail::from_sorted(rem, p.vars_ptr());
  return res;
}

ReduceResult reduce_fully(const Polynomial& p,
                          const std::vector<Polynomial>& basis,
                          const TermOrder& ord, const TraceSink& trace) {
  Prepared prep = prepare(p, basis, ord);
  if (p.is_zero()) return {p, p};
  QPoly work = detail::to_sorted(p, ord);
  QPoly rem;
  if (trace) {
    TraceEvent ev;
    ev.kind = TraceEvent::Kind::begin;
    ev.poly = p;
    trace(ev);
  }
  auto current_value = [&]() {
    QPoly all = rem;
    all.t.insert(all.t.end(), work.t.begin(), work.t.end());
    return detail::from_sorted(all, p.vars_ptr());
  };
  while (!work.empty()) {
    const Term lt = work.t.front();
    int i = first_divisor(prep, lt.mono);
    if (i < 0) {
      rem.t.push_back(lt);
      work.t.erase(work.t.begin());
      continue;
    }
    Rational c = lt.coeff / prep.lts[i].coeff;
    Monomial m = lt.mono.quotient(prep.lts[i].mono);
    detail::submul(work, c, m, prep.divisors[i], ord);
    if (trace) {
      TraceEvent ev;
      ev.kind = TraceEvent::Kind::step;
      ev.j = i + 1;
      ev.poly = current_value();
      trace(ev);
    }
  }
  ReduceResult res;
  res.remainder = detail::from_sorted(rem, p.vars_ptr());
  res.normalized = res.remainder.primitive(ord);
  if (trace && !res.remainder.is_zero()) {
    TraceEvent ev;
    ev.kind = TraceEvent::Kind::normalize;
    ev.poly = res.normalized;
    trace(ev);
  }
  return res;
}

}  // namespace coupler
