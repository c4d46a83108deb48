#pragma once
#include <optional>
#include <string_view>

#include "coupler/polynomial.hpp"

namespace coupler {

// Taxonomy of real plane curves of degree two.
enum class ConicClass {
  parabola,
  circle,
  ellipse,
  hyperbola,
  two_lines,
  point,
  empty_set,
};

// Split of the two_lines class: a crossing pair, a parallel pair, or one
// doubled line.
enum class TwoLinesKind { intersecting, parallel, coincident };

std::string_view conic_class_name(ConicClass c);
std::string_view two_lines_kind_name(TwoLinesKind k);

struct ConicReport {
  ConicClass kind;
  std::optional<TwoLinesKind> lines;  // present exactly when kind == two_lines
};

// Classify ax²+by²+cxy+dx+ey+f = 0 by the exact rational invariants
// δ = 4ab−c² and Δ = det of the symmetric 3×3 coefficient matrix; a circle is
// an ellipse with a = b and c = 0. The input must have total degree 2 and may
// involve no variables besides x and y.
ConicReport classify_quadratic(const Polynomial& p);

}  // namespace coupler
