#pragma once
#include "coupler/rational.hpp"

namespace coupler {

// Exact point in the plane.
struct Point2 {
  Rational x, y;

  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point2& o) const { return !(*this == o); }
};

}  // namespace coupler
