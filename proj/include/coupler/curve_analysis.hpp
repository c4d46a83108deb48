#pragma once
#include <utility>
#include <vector>

#include "coupler/point.hpp"
#include "coupler/polynomial.hpp"

namespace coupler {

// The line ax+by+c = 0, stored in canonical primitive form: coprime integer
// coefficients, (a,b) ≠ (0,0), and the first nonzero of (a,b) positive.
class Line {
 public:
  Line(const Rational& a, const Rational& b, const Rational& c);
  // Extract a line from a polynomial of total degree 1 in x and y.
  static Line from_polynomial(const Polynomial& p);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  Polynomial as_polynomial(std::shared_ptr<const VarSet> vars) const;

  bool operator==(const Line& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
  }
  bool operator!=(const Line& o) const { return !(*this == o); }

 private:
  Rational a_, b_, c_;
};

// Reference circle of an inversion: center O and the squared radius (the
// radius itself need not be rational).
class InversionCircle {
 public:
  InversionCircle(Point2 center, const Rational& radius_squared);

  const Point2& center() const { return center_; }
  const Rational& radius_squared() const { return r2_; }

 private:
  Point2 center_;
  Rational r2_;
};

// p·q in canonical primitive form — the curve whose zero set is the union.
Polynomial curve_union(const Polynomial& p, const Polynomial& q);

// True iff every point of the line lies on the curve: substituting the
// line's parametrization into p must collapse it to the zero polynomial.
bool contains_line(const Polynomial& p, const Line& line);

// True iff dividing p by the line's polynomial leaves remainder zero. Agrees
// with contains_line on every input; the caller normally passes lex.
bool linear_factor_test(const Polynomial& p, const Line& line,
                        const TermOrder& ord);

// Every line with coprime integer coefficients of absolute value at most
// height_bound that divides p, with multiplicities, by trial division —
// exhaustive within the bound. A fast modular point test screens the
// candidate grid; survivors are confirmed by exact division.
std::vector<std::pair<Line, int>> find_linear_factors(const Polynomial& p,
                                                      int height_bound);

// Image of P ≠ O under inversion in the circle: O + R²(P−O)/|P−O|².
Point2 invert_point(const Point2& p, const InversionCircle& circle);

// Image of the curve p under inversion: substitute the inversion formulas,
// clear denominators with ρ^(2·deg p) where ρ² = (x−Ox)²+(y−Oy)², then strip
// every ρ² factor (stripped_out reports how many). Errors when nothing of
// positive degree survives — p was a power of ρ².
Polynomial invert_curve(const Polynomial& p, const InversionCircle& circle,
                        int* stripped_out = nullptr);

}  // namespace coupler
