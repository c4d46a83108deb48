#pragma once
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coupler/linkage.hpp"

namespace coupler::detail {

// How one joint's coordinates enter the compiled system.
struct JointCoords {
  enum class Kind {
    free_pair,  // two fresh letters
    on_line,    // one parameter s along the line: pos = base + s * dir
    traced,     // the unit-coefficient traced joint: named (x, y) directly
  };
  Kind kind = Kind::free_pair;
  std::vector<std::string> vars;  // the 2 (free/traced) or 1 (on_line) names
  Point2 base, dir;               // on_line only
};

struct CoordModel {
  std::shared_ptr<const VarSet> vars;  // joint letters, then x, y
  std::vector<JointCoords> joints;     // parallel to Linkage::joints
  // Every declared point's exact coordinates over `vars`.
  std::map<std::string, std::pair<Polynomial, Polynomial>> coords;
  bool unit_tracer = false;
  std::string traced_joint;  // set when unit_tracer
};

// Validates the linkage (names, lengths, line coefficients, tracer weights)
// and assigns coordinate variables. Shared by compile() and simulate().
CoordModel build_coords(const Linkage& l);

}  // namespace coupler::detail
