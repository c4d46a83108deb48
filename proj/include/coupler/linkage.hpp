#pragma once
#include <string>
#include <utility>
#include <vector>

#include "coupler/groebner.hpp"
#include "coupler/point.hpp"
#include "coupler/polynomial.hpp"

namespace coupler {

// Rigid bar: |P - Q| = length.
struct BarConstraint {
  std::string p, q;
  Rational length;
};

// The joint stays on the line a*X + b*Y + c = 0.
struct LineConstraint {
  std::string p;
  Rational a, b, c;
};

// A planar linkage: fixed anchor points, free joints, bar and line
// constraints, a traced point given as an affine combination of declared
// points (coefficients sum to 1), and pairs of points required to stay
// distinct.
struct Linkage {
  std::vector<std::pair<std::string, Point2>> anchors;
  std::vector<std::string> joints;
  std::vector<BarConstraint> bars;
  std::vector<LineConstraint> on_line;
  std::vector<std::pair<std::string, Rational>> tracer;
  std::vector<std::pair<std::string, std::string>> distinct;
};

// JSON form:
//   {"anchors": {"A": ["0","0"], ...},
//    "joints":  ["J1", ...],
//    "bars":    [["A","J1","10"], ...],
//    "on_line": [["F", ["0","1","0"]], ...],
//    "tracer":  {"J1": "1/2", "J2": "1/2"},
//    "distinct": [["P","Q"], ...]}
// with every number written as a rational string.
Linkage parse_linkage(const std::string& text);

// Polynomial system of the linkage. Free joints get coordinate variables
// from the letter stream a, b, c, ... (skipping t, u, x, y); a joint on a
// line is parametrized by a single letter; when the tracer is one joint
// with coefficient 1, that joint's coordinates are named x, y directly.
// Equations: one distance polynomial per bar in declaration order, then
// (unless the tracer is a single joint) the two tracer bindings
// x - sum(lambda_i * X_i) and y - sum(lambda_i * Y_i), then one
// Rabinowitsch closure equation per distinct pair. Variables are ordered
// joint letters first, then x, y, then the closure variables (as aux).
PolySystem compile(const Linkage& l);

// Lowest-degree generator of the compiled system's elimination ideal in
// {x, y}, in canonical primitive form. Errors when the ideal is zero —
// degenerate configurations (coincident joints) sweep the whole plane and
// no curve equation survives; distinct-pair constraints cut them away.
Polynomial coupler_curve(const Linkage& l);

// Built-in scenario library. Unknown names raise an error that lists the
// available scenarios. scenario_text returns the shipped JSON document.
const std::vector<std::string>& scenario_names();
Linkage scenario(const std::string& name);
std::string scenario_text(const std::string& name);

// Numeric forward simulation: sweeps one driving parameter (the first
// line-bound joint's coordinate, else the first anchored joint's angle),
// solving the remaining constraints by Newton continuation from the
// previous sample. Returned tracer positions are exact rationals that
// satisfy every compiled equation to better than 1e-9; samples whose solve
// fails are skipped and counted. Fewer than 3 valid samples is an error,
// as is a mechanism without exactly one degree of freedom.
struct Simulation {
  std::vector<Point2> points;
  int requested = 0;
  int skipped = 0;
};
Simulation simulate(const Linkage& l, int samples);

}  // namespace coupler
