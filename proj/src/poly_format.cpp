#include <algorithm>
#include <sstream>

#include "coupler/polynomial.hpp"

namespace coupler {

namespace {

std::vector<Term> sorted_terms(const Polynomial& p, const TermOrder& ord) {
  std::vector<Term> ts;
  ts.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) ts.push_back({m, c});
  std::stable_sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  return ts;
}

std::string plain_coeff(const Rational& c) { return c.abs().str(); }

std::string latex_coeff(const Rational& c) {
  Rational a = c.abs();
  if (a.is_integer()) return a.str();
  return "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
}

std::string render(const Polynomial& p, const TermOrder& ord, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : sorted_terms(p, ord)) {
    if (t.coeff.sign() < 0)
      os << '-';
    else if (!first)
      os << '+';
    bool unit = t.coeff.abs().is_one();
    if (t.mono.is_one() || !unit)
      os << (latex ? latex_coeff(t.coeff) : plain_coeff(t.coeff));
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      int e = t.mono.exp(i);
      if (e == 0) continue;
      os << p.vars().name(i);
      if (e > 1) {
        if (latex)
          os << "^{" << e << '}';
        else
          os << '^' << e;
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_text(const Polynomial& p, const TermOrder& ord) {
  return render(p, ord, false);
}

std::string to_text(const Polynomial& p) {
  return render(p, TermOrder(OrderKind::lex, p.vars_ptr()), false);
}

std::string to_latex(const Polynomial& p, const TermOrder& ord) {
  return render(p, ord, true);
}

std::string to_latex(const Polynomial& p) {
  return render(p, TermOrder(OrderKind::lex, p.vars_ptr()), true);
}

}  // namespace coupler
