#include "coupler/conic.hpp"

#include "coupler/error.hpp"

namespace coupler {

std::string_view conic_class_name(ConicClass c) {
  switch (c) {
    case ConicClass::parabola: return "parabola";
    case ConicClass::circle: return "circle";
    case ConicClass::ellipse: return "ellipse";
    case ConicClass::hyperbola: return "hyperbola";
    case ConicClass::two_lines: return "two_lines";
    case ConicClass::point: return "point";
    case ConicClass::empty_set: return "empty_set";
  }
  throw Error("bad conic class");
}

std::string_view two_lines_kind_name(TwoLinesKind k) {
  switch (k) {
    case TwoLinesKind::intersecting: return "intersecting";
    case TwoLinesKind::parallel: return "parallel";
    case TwoLinesKind::coincident: return "coincident";
  }
  throw Error("bad line-pair kind");
}

ConicReport classify_quadratic(const Polynomial& p) {
  const VarSet& vars = p.vars();
  int xi = -1, yi = -1;
  if (vars.contains("x")) xi = static_cast<int>(vars.index_of("x"));
  if (vars.contains("y")) yi = static_cast<int>(vars.index_of("y"));
  for (const auto& [m, coeff] : p.terms()) {
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (m.exp(v) != 0 && static_cast<int>(v) != xi &&
          static_cast<int>(v) != yi) {
        throw Error("classification needs a curve in x and y only; found '" +
                    vars.name(v) + "'");
      }
    }
  }
  if (p.is_zero() || p.degree() != 2)
    throw Error("classification needs a curve of degree exactly 2");

  auto coeff_at = [&](int ex, int ey) {
    if ((ex != 0 && xi < 0) || (ey != 0 && yi < 0)) return Rational(0);
    Monomial m(vars.size());
    if (ex != 0) m = m.times(Monomial::unit(vars.size(), xi, ex));
    if (ey != 0) m = m.times(Monomial::unit(vars.size(), yi, ey));
    return p.coeff(m);
  };
  Rational a = coeff_at(2, 0), b = coeff_at(0, 2), c = coeff_at(1, 1);
  Rational d = coeff_at(1, 0), e = coeff_at(0, 1), f = coeff_at(0, 0);

  Rational delta = Rational(4) * a * b - c * c;
  // Δ = det [[a, c/2, d/2], [c/2, b, e/2], [d/2, e/2, f]], cleared of the
  // halves by the factor 8: big = 8Δ.
  Rational big = Rational(8) * a * b * f + Rational(2) * c * d * e -
                 Rational(2) * a * e * e - Rational(2) * b * d * d -
                 Rational(2) * c * c * f;

  if (delta.sign() > 0) {
    if (big.is_zero()) return {ConicClass::point, std::nullopt};
    // a and b share a sign here; the curve is real exactly when Δ opposes it.
    if ((big * (a + b)).sign() < 0) {
      bool round = (a == b) && c.is_zero();
      return {round ? ConicClass::circle : ConicClass::ellipse, std::nullopt};
    }
    return {ConicClass::empty_set, std::nullopt};
  }
  if (delta.sign() < 0) {
    if (big.is_zero())
      return {ConicClass::two_lines, TwoLinesKind::intersecting};
    return {ConicClass::hyperbola, std::nullopt};
  }
  // δ = 0: the quadratic part is a perfect square s·u².
  if (!big.is_zero()) return {ConicClass::parabola, std::nullopt};
  // Degenerate parabola: s·u² + (linear in u) + constant; the count of real
  // roots in u decides the shape. With u scaled so the square's coefficient
  // matches, the root discriminant is d²−4af (or e²−4bf when a = 0).
  Rational disc = a.is_zero() ? e * e - Rational(4) * b * f
                              : d * d - Rational(4) * a * f;
  if (disc.sign() > 0) return {ConicClass::two_lines, TwoLinesKind::parallel};
  if (disc.is_zero()) return {ConicClass::two_lines, TwoLinesKind::coincident};
  return {ConicClass::empty_set, std::nullopt};
}

}  // namespace coupler
