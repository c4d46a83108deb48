#include "coupler/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "coupler/error.hpp"
#include "opoly.hpp"

namespace coupler {

using detail::QPoly;

namespace {

// ---------------------------------------------------------------------------
// Fraction-free integer kernel. Generators are primitive (integer, coprime,
// positive lead), working polynomials are integer multiples of the rational
// value; content is stripped periodically and at the end.
// ---------------------------------------------------------------------------

struct ZTerm {
  Monomial mono;
  mpz_class coeff;
};

struct ZPoly {
  std::vector<ZTerm> t;  // strictly descending under the active order
  bool empty() const { return t.empty(); }
};

ZPoly zpoly_from(const Polynomial& primitive_poly, const TermOrder& ord) {
  ZPoly z;
  z.t.reserve(primitive_poly.term_count());
  for (const auto& [m, c] : primitive_poly.terms()) {
    if (!c.is_integer()) throw Error("integer kernel needs primitive input");
    z.t.push_back({m, c.num()});
  }
  std::sort(z.t.begin(), z.t.end(), [&](const ZTerm& a, const ZTerm& b) {
    return ord.greater(a.mono, b.mono);
  });
  return z;
}

Polynomial zpoly_to(const ZPoly& z, const std::shared_ptr<const VarSet>& vars) {
  std::vector<Term> ts;
  ts.reserve(z.t.size());
  for (const auto& zt : z.t) ts.push_back({zt.mono, Rational(zt.coeff)});
  return Polynomial::from_terms(vars, ts);
}

void strip_content(ZPoly& w) {
  if (w.t.empty()) return;
  mpz_class g(0);
  for (const auto& zt : w.t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zt.coeff.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& zt : w.t) zt.coeff /= g;
}

// w := a*w - b * X^m * d; terms of w before `from` only pick up the factor a.
// The a == 1 case moves coefficients instead of multiplying them.
void zcombine(ZPoly& w, const mpz_class& a, const mpz_class& b,
              const Monomial& m, const ZPoly& d, const TermOrder& ord,
              std::size_t from) {
  const bool unit = a == 1;
  auto scaled = [&](std::size_t k) {
    return unit ? std::move(w.t[k].coeff) : mpz_class(w.t[k].coeff * a);
  };
  std::vector<ZTerm> out;
  out.reserve(w.t.size() + d.t.size());
  for (std::size_t k = 0; k < from; ++k) {
    out.push_back({std::move(w.t[k].mono), scaled(k)});
  }
  std::size_t i = from, j = 0;
  while (i < w.t.size() || j < d.t.size()) {
    if (j == d.t.size()) {
      out.push_back({std::move(w.t[i].mono), scaled(i)});
      ++i;
      continue;
    }
    Monomial dm = d.t[j].mono.times(m);
    if (i == w.t.size()) {
      out.push_back({std::move(dm), -(b * d.t[j].coeff)});
      ++j;
      continue;
    }
    int cmp = ord.compare(w.t[i].mono, dm);
    if (cmp > 0) {
      out.push_back({std::move(w.t[i].mono), scaled(i)});
      ++i;
    } else if (cmp < 0) {
      out.push_back({std::move(dm), -(b * d.t[j].coeff)});
      ++j;
    } else {
      mpz_class nc = unit ? mpz_class(w.t[i].coeff - b * d.t[j].coeff)
                          : mpz_class(w.t[i].coeff * a - b * d.t[j].coeff);
      if (nc != 0) out.push_back({std::move(w.t[i].mono), std::move(nc)});
      ++i;
      ++j;
    }
  }
  w.t = std::move(out);
}

struct ZBasis {
  std::vector<const ZPoly*> gens;
  std::vector<Monomial> lms;
  std::vector<const mpz_class*> lcs;
  std::vector<std::size_t> lc_bits;
  std::vector<std::size_t> sizes;
  std::vector<char> alive;
  std::size_t skip = static_cast<std::size_t>(-1);

  void add(const ZPoly& g) {
    gens.push_back(&g);
    lms.push_back(g.t.front().mono);
    lcs.push_back(&g.t.front().coeff);
    lc_bits.push_back(mpz_sizeinbase(g.t.front().coeff.get_mpz_t(), 2));
    sizes.push_back(g.t.size());
    alive.push_back(1);
  }

  // Re-read entry i after the underlying polynomial changed in place.
  void refresh(std::size_t i) {
    const ZPoly& g = *gens[i];
    if (g.t.empty()) {
      alive[i] = 0;
      return;
    }
    lms[i] = g.t.front().mono;
    lcs[i] = &g.t.front().coeff;
    lc_bits[i] = mpz_sizeinbase(g.t.front().coeff.get_mpz_t(), 2);
    sizes[i] = g.t.size();
    alive[i] = 1;
  }
};

// Full normal form of w against the basis. Among the divisors of a term the
// one with the smallest leading coefficient (then the fewest terms, then the
// lowest index) wins: small multipliers keep the working coefficients from
// snowballing. Result is the remainder up to a positive integer factor.
ZPoly znormal_form(ZPoly w, const ZBasis& basis, const TermOrder& ord) {
  strip_content(w);
  std::size_t done = 0;
  int steps = 0;
  while (done < w.t.size()) {
    const Monomial& m = w.t[done].mono;
    int idx = -1;
    for (std::size_t i = 0; i < basis.lms.size(); ++i) {
      if (!basis.alive[i] || i == basis.skip) continue;
      if (!basis.lms[i].divides(m)) continue;
      if (idx < 0 || basis.lc_bits[i] < basis.lc_bits[idx] ||
          (basis.lc_bits[i] == basis.lc_bits[idx] &&
           basis.sizes[i] < basis.sizes[idx])) {
        idx = static_cast<int>(i);
      }
    }
    if (idx < 0) {
      ++done;
      continue;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), w.t[done].coeff.get_mpz_t(),
            basis.lcs[idx]->get_mpz_t());
    mpz_class a = *basis.lcs[idx] / g;
    mpz_class b = w.t[done].coeff / g;
    zcombine(w, a, b, m.quotient(basis.lms[idx]), *basis.gens[idx], ord, done);
    if (++steps % 8 == 0) strip_content(w);
  }
  strip_content(w);
  return w;
}

// Positive-lead primitive polynomial from a content-stripped remainder.
Polynomial zfinalize(ZPoly w, const std::shared_ptr<const VarSet>& vars) {
  if (!w.t.empty() && w.t.front().coeff < 0) {
    for (auto& zt : w.t) zt.coeff = -zt.coeff;
  }
  return zpoly_to(w, vars);
}

// ---------------------------------------------------------------------------
// Pair queue with the classic pruning rules.
// ---------------------------------------------------------------------------

struct Pair {
  int deg;
  Monomial lcm;
  int i, j;  // i < j, 0-based generator indices
};

struct PairLess {
  const TermOrder* ord;
  bool operator()(const Pair& x, const Pair& y) const {
    if (x.deg != y.deg) return x.deg < y.deg;
    int c = ord->compare(x.lcm, y.lcm);
    if (c != 0) return c < 0;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
  }
};

class PairQueue {
 public:
  PairQueue(const TermOrder& ord, const BuchbergerOptions& opts)
      : ord_(&ord), opts_(&opts), pairs_(PairLess{&ord}) {}

  // Register generator k; lms[0..k] are the leading monomials of all
  // generators so far, live[] flags the usable ones.
  void add_generator(int k, const std::vector<Monomial>& lms,
                     const std::vector<char>& live) {
    const Monomial& mk = lms[k];
    if (opts_->chain_criteria) {
      // Drop old pairs whose lcm is a proper multiple through the newcomer.
      for (auto it = pairs_.begin(); it != pairs_.end();) {
        if (mk.divides(it->lcm) &&
            Monomial::lcm(lms[it->i], mk) != it->lcm &&
            Monomial::lcm(lms[it->j], mk) != it->lcm) {
          it = pairs_.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::vector<Pair> fresh;
    for (int i = 0; i < k; ++i) {
      if (!live[i]) continue;
      Monomial l = Monomial::lcm(lms[i], mk);
      fresh.push_back({l.total_degree(), std::move(l), i, k});
    }
    if (opts_->chain_criteria) {
      std::sort(fresh.begin(), fresh.end(), PairLess{ord_});
      std::vector<Pair> kept;
      for (auto& f : fresh) {
        bool redundant = false;
        for (const auto& kpt : kept) {
          if (kpt.lcm.divides(f.lcm)) {
            redundant = true;
            break;
          }
        }
        if (!redundant) kept.push_back(std::move(f));
      }
      fresh = std::move(kept);
    }
    for (auto& f : fresh) {
      if (opts_->coprime_skip && lms[f.i].coprime(mk)) continue;
      pairs_.insert(std::move(f));
    }
  }

  bool empty() const { return pairs_.empty(); }

  Pair pop() {
    Pair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    return p;
  }

 private:
  const TermOrder* ord_;
  const BuchbergerOptions* opts_;
  std::set<Pair, PairLess> pairs_;
};

// ---------------------------------------------------------------------------
// Traced rational reduction of one pair, reproducing the derivation chains.
// ---------------------------------------------------------------------------

struct TracedBasis {
  std::vector<QPoly> sorted;
  std::vector<Term> lts;
  std::vector<char> live;
};

Polynomial traced_pair_reduction(int pi, int pj, const Monomial& lcm,
                                 const std::vector<Polynomial>& display,
                                 const TracedBasis& basis,
                                 const TermOrder& ord,
                                 const TraceSink& trace) {
  const auto& vars = ord.vars_ptr();
  // Chain head: equation (i) lifted to the pair's lcm.
  Monomial mi = lcm.quotient(basis.lts[pi].mono);
  Polynomial head = display[pi].times_term(Rational(1), mi);
  {
    TraceEvent ev;
    ev.kind = TraceEvent::Kind::cancel;
    ev.i = pi + 1;
    ev.j = pj + 1;
    ev.poly = head;
    trace(ev);
  }
  QPoly work = detail::to_sorted(head, ord);
  QPoly rem;
  auto emit_step = [&](int divisor_index) {
    QPoly all = rem;
    all.t.insert(all.t.end(), work.t.begin(), work.t.end());
    TraceEvent ev;
    ev.kind = TraceEvent::Kind::step;
    ev.j = divisor_index + 1;
    ev.poly = detail::from_sorted(all, vars);
    trace(ev);
  };
  // Forced first cancellation by the pair's other equation.
  {
    const Term lt = work.t.front();
    Rational c = lt.coeff / basis.lts[pj].coeff;
    Monomial m = lt.mono.quotient(basis.lts[pj].mono);
    detail::submul(work, c, m, basis.sorted[pj], ord);
    emit_step(pj);
  }
  while (!work.empty()) {
    const Term lt = work.t.front();
    int idx = -1;
    for (std::size_t i = 0; i < basis.lts.size(); ++i) {
      if (basis.live[i] && basis.lts[i].mono.divides(lt.mono)) {
        idx = static_cast<int>(i);
        break;
      }
    }
    if (idx < 0) {
      rem.t.push_back(lt);
      work.t.erase(work.t.begin());
      continue;
    }
    Rational c = lt.coeff / basis.lts[idx].coeff;
    Monomial m = lt.mono.quotient(basis.lts[idx].mono);
    detail::submul(work, c, m, basis.sorted[idx], ord);
    emit_step(idx);
  }
  Polynomial remainder = detail::from_sorted(rem, vars);
  if (remainder.is_zero()) return remainder;
  Polynomial normalized = remainder.primitive(ord);
  TraceEvent ev;
  ev.kind = TraceEvent::Kind::normalize;
  ev.poly = normalized;
  trace(ev);
  return normalized;
}

// ---------------------------------------------------------------------------
// Reduced-basis post-processing: minimalize, interreduce, sort.
// ---------------------------------------------------------------------------

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis,
                                     const TermOrder& ord) {
  const auto& vars = ord.vars_ptr();
  // Minimal generators: drop anything whose leading monomial another kept
  // generator's leading monomial divides. Scanning in ascending leading
  // monomial order makes the survivors exactly the minimal ones.
  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
            });
  std::vector<Polynomial> minimal;
  for (const auto& p : basis) {
    Monomial m = p.leading_monomial(ord);
    bool covered = false;
    for (const auto& q : minimal) {
      if (q.leading_monomial(ord).divides(m)) {
        covered = true;
        break;
      }
    }
    if (!covered) minimal.push_back(p);
  }
  // Interreduce tails until stable.
  for (int pass = 0; pass < 50; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      ZBasis zb;
      std::vector<ZPoly> zstore;
      zstore.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) zstore.push_back(zpoly_from(minimal[j], ord));
      }
      for (const auto& z : zstore) zb.add(z);
      ZPoly r = znormal_form(zpoly_from(minimal[i], ord), zb, ord);
      Polynomial rp = zfinalize(std::move(r), vars);
      if (rp != minimal[i]) {
        changed = true;
        if (rp.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
          --i;
        } else {
          minimal[i] = std::move(rp);
        }
      }
    }
    if (!changed) break;
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              int da = a.degree(), db = b.degree();
              if (da != db) return da < db;
              int c = ord.compare(a.leading_monomial(ord),
                                  b.leading_monomial(ord));
              if (c != 0) return c > 0;
              return to_text(a, ord) < to_text(b, ord);
            });
  return minimal;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q,
                        const TermOrder& ord) {
  if (!ord.admissible())
    throw Error("s-polynomials need an admissible term order");
  if (p.is_zero() || q.is_zero())
    throw Error("s-polynomial of the zero polynomial");
  Term lp = p.leading_term(ord);
  Term lq = q.leading_term(ord);
  Monomial l = Monomial::lcm(lp.mono, lq.mono);
  Polynomial a = p.times_term(lp.coeff.inverse(), l.quotient(lp.mono));
  Polynomial b = q.times_term(lq.coeff.inverse(), l.quotient(lq.mono));
  return a - b;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const TermOrder& ord,
                                   const TraceSink& trace,
                                   const BuchbergerOptions& opts) {
  if (!ord.admissible())
    throw Error("basis search needs an admissible term order");
  const auto& vars = ord.vars_ptr();
  for (const auto& g : gens) {
    if (!(g.vars() == *vars)) throw Error("varset mismatch");
  }

  std::vector<Polynomial> display = gens;  // numbered as given
  std::vector<ZPoly> zgens;
  std::vector<Monomial> lms;
  std::vector<char> live;
  TracedBasis traced;
  auto adopt = [&](const Polynomial& raw, const Polynomial& prim) {
    zgens.push_back(prim.is_zero() ? ZPoly{} : zpoly_from(prim, ord));
    lms.push_back(prim.is_zero() ? Monomial(vars->size())
                                 : zgens.back().t.front().mono);
    live.push_back(!prim.is_zero());
    if (trace) {
      traced.sorted.push_back(detail::to_sorted(raw, ord));
      traced.lts.push_back(raw.is_zero() ? Term{Monomial(vars->size()),
                                                Rational(0)}
                                         : raw.leading_term(ord));
      traced.live.push_back(!raw.is_zero());
    }
  };
  for (const auto& g : gens) adopt(g, g.is_zero() ? g : g.primitive(ord));

  if (trace) {
    TraceEvent ev;
    ev.kind = TraceEvent::Kind::system;
    for (std::size_t k = 0; k < display.size(); ++k)
      ev.equations.emplace_back(static_cast<int>(k) + 1, display[k]);
    trace(ev);
  }

  PairQueue queue(ord, opts);
  for (std::size_t k = 0; k < zgens.size(); ++k) {
    if (live[k]) queue.add_generator(static_cast<int>(k), lms, live);
  }

  static const bool progress = std::getenv("COUPLER_GB_PROGRESS") != nullptr;
  const auto started = std::chrono::steady_clock::now();
  std::size_t pairs_done = 0;

  std::size_t additions = 0;
  while (!queue.empty()) {
    Pair pr = queue.pop();
    ++pairs_done;
    Polynomial candidate(vars);
    if (trace) {
      candidate = traced_pair_reduction(pr.i, pr.j, pr.lcm, display, traced,
                                        ord, trace);
    } else {
      // S-polynomial, fraction-free: (lc_j/g) X^(l/lm_i) p_i
      //                            - (lc_i/g) X^(l/lm_j) p_j.
      const ZPoly& pi = zgens[pr.i];
      const ZPoly& pj = zgens[pr.j];
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), pi.t.front().coeff.get_mpz_t(),
              pj.t.front().coeff.get_mpz_t());
      mpz_class ci = pj.t.front().coeff / g;
      mpz_class cj = pi.t.front().coeff / g;
      Monomial mi = pr.lcm.quotient(lms[pr.i]);
      ZPoly w;
      w.t.reserve(pi.t.size());
      for (const auto& zt : pi.t) w.t.push_back({zt.mono.times(mi), zt.coeff * ci});
      zcombine(w, mpz_class(1), cj, pr.lcm.quotient(lms[pr.j]), pj, ord, 0);
      ZBasis zb;
      for (std::size_t i = 0; i < zgens.size(); ++i) {
        if (live[i]) zb.add(zgens[i]);
      }
      // Map basis positions back to generator indices implicitly by keeping
      // every live generator in index order (first-divisor rule).
      candidate = zfinalize(znormal_form(std::move(w), zb, ord), vars);
    }
    if (candidate.is_zero()) continue;
    if (++additions > opts.max_additions)
      throw Error("basis search exceeded the generator cap");
    int k = static_cast<int>(display.size());
    display.push_back(candidate);
    adopt(candidate, candidate);
    if (progress) {
      std::size_t bits = 0;
      for (const auto& zt : zgens.back().t) {
        std::size_t b = mpz_sizeinbase(zt.coeff.get_mpz_t(), 2);
        if (b > bits) bits = b;
      }
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - started)
                    .count();
      std::fprintf(stderr,
                   "[gb %6lldms] gen %3d  pairs %5zu  deg %2d  terms %4zu  "
                   "bits %5zu\n",
                   static_cast<long long>(ms), k + 1, pairs_done,
                   candidate.degree(), candidate.terms().size(), bits);
    }
    if (trace) {
      TraceEvent ev;
      ev.kind = TraceEvent::Kind::added;
      ev.i = k + 1;
      ev.poly = candidate;
      trace(ev);
    }
    queue.add_generator(k, lms, live);
  }

  std::vector<Polynomial> basis;
  for (std::size_t i = 0; i < zgens.size(); ++i) {
    if (live[i]) basis.push_back(zpoly_to(zgens[i], vars));
  }
  return reduce_basis(std::move(basis), ord);
}

bool is_groebner_basis(const std::vector<Polynomial>& basis,
                       const TermOrder& ord) {
  std::vector<Polynomial> live;
  for (const auto& p : basis) {
    if (!p.is_zero()) live.push_back(p.primitive(ord));
  }
  std::vector<ZPoly> zs;
  zs.reserve(live.size());
  for (const auto& p : live) zs.push_back(zpoly_from(p, ord));
  ZBasis zb;
  for (const auto& z : zs) zb.add(z);
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      Polynomial s = s_polynomial(live[i], live[j], ord);
      if (s.is_zero()) continue;
      ZPoly r = znormal_form(zpoly_from(s.primitive(ord), ord), zb, ord);
      if (!r.empty()) return false;
    }
  }
  return true;
}

namespace {

void require_subset(const std::vector<std::string>& names, const VarSet& vars,
                    const char* what) {
  for (const auto& n : names) {
    if (!vars.contains(n))
      throw Error(std::string(what) + " lists unknown variable '" + n + "'");
  }
}

std::vector<std::string> fresh_names(const VarSet& vars, std::size_t count) {
  std::vector<std::string> out;
  auto taken = [&](const std::string& n) {
    if (vars.contains(n)) return true;
    return std::find(out.begin(), out.end(), n) != out.end();
  };
  const char* preferred[] = {"t", "u", "v", "w"};
  std::size_t pi = 0;
  int suffix = 2;
  while (out.size() < count) {
    std::string name;
    if (pi < 4) {
      name = preferred[pi++];
    } else {
      name = "t" + std::to_string(suffix++);
    }
    if (!taken(name)) out.push_back(name);
  }
  return out;
}

// Substitute away dropped variables that some generator pins linearly: a
// generator α·v + r with constant α ≠ 0 and r free of v lets every other
// generator replace v by -r/α. Removing v and that generator is an exact
// change of coordinates, so the ideal's restriction to the surviving
// variables — in particular to the kept ones — is untouched, and the basis
// search below runs over fewer variables and equations.
void presolve_linear(std::vector<Polynomial>& eqs,
                     std::shared_ptr<const VarSet>& vars,
                     std::vector<std::string>& drop) {
  std::vector<std::string> gone;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t gi = 0; gi < eqs.size() && !again; ++gi) {
      const Polynomial& g = eqs[gi];
      for (const auto& v : drop) {
        std::size_t vi = vars->index_of(v);
        int hits = 0;
        bool lone_linear = true;
        Rational alpha;
        for (const auto& [m, c] : g.terms()) {
          if (m.exp(vi) == 0) continue;
          ++hits;
          if (hits > 1 || m.exp(vi) != 1 || m.total_degree() != 1) {
            lone_linear = false;
            break;
          }
          alpha = c;
        }
        if (!lone_linear || hits != 1) continue;
        std::string vname = v;
        Polynomial repl = (g - Polynomial::variable(vars, vname) * alpha) *
                          (Rational(-1) * alpha.inverse());
        std::vector<Polynomial> next;
        next.reserve(eqs.size() - 1);
        for (std::size_t k = 0; k < eqs.size(); ++k) {
          if (k == gi) continue;
          Polynomial s = eqs[k].substitute(vname, repl);
          if (!s.is_zero()) next.push_back(std::move(s));
        }
        eqs = std::move(next);
        drop.erase(std::find(drop.begin(), drop.end(), vname));
        gone.push_back(std::move(vname));
        again = true;
        break;
      }
    }
  }
  if (gone.empty()) return;
  std::vector<std::string> left;
  for (const auto& n : vars->names()) {
    if (std::find(gone.begin(), gone.end(), n) == gone.end())
      left.push_back(n);
  }
  auto shrunk = VarSet::make(left);
  for (auto& e : eqs) e = e.rename_vars(shrunk);
  vars = shrunk;
}

}  // namespace

PolySystem eliminate(const EliminateRequest& req, const TraceSink& trace) {
  const auto& sys = req.system;
  if (!sys.vars) throw Error("eliminate needs a system with a varset");
  if (req.keep.empty()) throw Error("eliminate needs at least one kept variable");
  require_subset(req.keep, *sys.vars, "keep");
  for (std::size_t i = 0; i < req.keep.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (req.keep[i] == req.keep[j])
        throw Error("keep lists variable '" + req.keep[i] + "' twice");
    }
  }
  auto kept = [&](const std::string& n) {
    return std::find(req.keep.begin(), req.keep.end(), n) != req.keep.end();
  };
  std::vector<std::string> drop;
  if (req.drop) {
    drop = *req.drop;
    require_subset(drop, *sys.vars, "drop");
    for (const auto& n : drop) {
      if (kept(n))
        throw Error("variable '" + n + "' is listed both kept and dropped");
    }
    if (drop.size() + req.keep.size() != sys.vars->size())
      throw Error("keep and drop together must cover every variable");
  } else {
    for (const auto& n : sys.vars->names()) {
      if (!kept(n)) drop.push_back(n);
    }
  }

  // Elimination order: every dropped variable above every kept one, each
  // block in varset order. A traced run uses plain lex so the transcript
  // shows variable-by-variable cancellation. A quiet run first substitutes
  // away linearly pinned dropped variables, then works on the homogenized
  // system; the final pass below recomputes the restriction in lex form
  // either way, so both routes return the same canonical basis.
  std::shared_ptr<const VarSet> work_vars = sys.vars;
  std::vector<Polynomial> input = sys.equations;
  std::vector<std::string> work_drop = drop;
  if (!trace && !drop.empty()) {
    presolve_linear(input, work_vars, work_drop);
  }
  std::vector<Polynomial> basis;
  if (trace || drop.empty()) {
    std::vector<std::string> prec = drop;
    for (const auto& n : sys.vars->names()) {
      if (kept(n)) prec.push_back(n);
    }
    TermOrder elim_order(OrderKind::lex, sys.vars, prec);
    basis = buchberger(input, elim_order, trace);
  } else if (work_drop.empty()) {
    // The substitutions consumed every dropped variable; the recompute at
    // the end does the remaining work.
    basis = std::move(input);
  } else {
    // Scale each generator's terms up to its total degree with a fresh
    // variable of weight one. Buchberger over homogeneous inputs only ever
    // combines terms of equal total degree, which keeps coefficients near
    // the size of the answer instead of compounding across degrees — the
    // difference between finishing in seconds and drowning in thousand-digit
    // integers on the larger linkage systems. Setting that variable back to
    // one turns a basis of the homogenized ideal into a basis of the
    // original ideal for the matching order: homogeneous polynomials
    // dehomogenize term-for-term (no two terms collide, since equal total
    // degree plus an equal original part forces an equal scaling power), so
    // leading terms descend, and any original-ideal member reappears in the
    // homogenized ideal after scaling by a power of the fresh variable.
    // Both orders below compare graded companions: on monomials of equal
    // total degree — the only comparisons a homogeneous run makes — they
    // rank exactly like plain degrevlex, respectively the drop/keep
    // two-block order, on the original variables.
    std::string hvar = fresh_names(*work_vars, 1).front();
    std::vector<std::string> hnames = work_vars->names();
    hnames.push_back(hvar);
    auto hvars = VarSet::make(std::move(hnames));
    const std::size_t hidx = hvars->size() - 1;
    std::vector<Polynomial> hin;
    hin.reserve(input.size());
    for (const auto& e : input) {
      if (e.is_zero()) continue;
      const Polynomial lifted = e.rename_vars(hvars);
      const int d = lifted.degree();
      std::vector<Term> ht;
      ht.reserve(lifted.term_count());
      for (const auto& [m, c] : lifted.terms()) {
        ht.push_back(
            {m.times(Monomial::unit(hvars->size(), hidx,
                                    d - m.total_degree())),
             c});
      }
      hin.push_back(Polynomial::from_terms(hvars, ht));
    }
    TermOrder hpre(OrderKind::degrevlex, hvars);
    std::vector<Polynomial> hbasis = buchberger(hin, hpre);
    std::vector<std::string> prec = work_drop;
    for (const auto& n : work_vars->names()) {
      if (std::find(work_drop.begin(), work_drop.end(), n) == work_drop.end())
        prec.push_back(n);
    }
    prec.push_back(hvar);
    TermOrder helim = TermOrder::block(
        OrderKind::degrevlex, hvars, prec,
        {work_drop.size(), hvars->size() - work_drop.size()});
    hbasis = buchberger(hbasis, helim);
    const Polynomial one = Polynomial::constant(hvars, Rational(1));
    basis.reserve(hbasis.size());
    for (const auto& g : hbasis)
      basis.push_back(g.substitute(hvar, one).rename_vars(work_vars));
  }

  // Keep the generators that avoid every dropped variable.
  std::vector<std::string> keep_names;
  for (const auto& n : sys.vars->names()) {
    if (kept(n)) keep_names.push_back(n);
  }
  auto keep_vars = VarSet::make(keep_names);
  std::vector<std::size_t> drop_idx;
  for (const auto& n : work_drop) drop_idx.push_back(work_vars->index_of(n));
  std::vector<Polynomial> restricted;
  for (const auto& p : basis) {
    bool pure = true;
    for (const auto& [m, c] : p.terms()) {
      for (std::size_t di : drop_idx) {
        if (m.exp(di) != 0) {
          pure = false;
          break;
        }
      }
      if (!pure) break;
    }
    if (pure) restricted.push_back(p.rename_vars(keep_vars));
  }

  PolySystem out;
  out.vars = keep_vars;
  if (!restricted.empty()) {
    // The survivors generate (indeed form a basis of) the restricted ideal;
    // recomputing over the kept variables in lex makes the output canonical
    // regardless of which elimination order found them.
    TermOrder keep_order(OrderKind::lex, keep_vars);
    out.equations = buchberger(restricted, keep_order);
  }
  return out;
}

namespace {

PolySystem saturate_with(const PolySystem& sys,
                         const std::vector<Polynomial>& nonzero,
                         const std::vector<std::string>& names) {
  if (!sys.vars) throw Error("saturate needs a system with a varset");
  if (names.size() != nonzero.size())
    throw Error("saturate needs one fresh name per polynomial");
  std::vector<std::string> all = sys.vars->names();
  for (const auto& n : names) all.push_back(n);
  auto vars = VarSet::make(std::move(all));  // rejects collisions/duplicates
  PolySystem out;
  out.vars = vars;
  out.aux = sys.aux;
  for (const auto& e : sys.equations) out.equations.push_back(e.rename_vars(vars));
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    const Polynomial& g = nonzero[i];
    if (!(g.vars() == *sys.vars)) throw Error("varset mismatch");
    if (g.is_zero()) throw Error("cannot force the zero polynomial nonzero");
    Polynomial t = Polynomial::variable(vars, names[i]);
    out.equations.push_back(t * g.rename_vars(vars) -
                            Polynomial::constant(vars, Rational(1)));
    out.aux.push_back(names[i]);
  }
  return out;
}

}  // namespace

PolySystem saturate(const PolySystem& sys,
                    const std::vector<Polynomial>& nonzero) {
  return saturate_with(sys, nonzero, fresh_names(*sys.vars, nonzero.size()));
}

PolySystem saturate(const PolySystem& sys,
                    const std::vector<Polynomial>& nonzero,
                    const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (sys.vars->contains(n))
      throw Error("fresh variable '" + n + "' collides with the system");
  }
  return saturate_with(sys, nonzero, names);
}

}  // namespace coupler
