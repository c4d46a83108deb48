#pragma once
#include <functional>
#include <utility>
#include <vector>

#include "coupler/polynomial.hpp"

namespace coupler {

// One step of a human-readable derivation log. The library only emits these;
// rendering to text/LaTeX lives in the CLI layer.
struct TraceEvent {
  enum class Kind {
    system,     // the numbered input equations
    begin,      // head of a standalone reduction chain
    cancel,     // start of a pair reduction: leading term of (i) cancelled by (j)
    step,       // one cancellation: divisor number j, running value poly
    normalize,  // final primitive rescale of a nonzero chain value
    added,      // a new numbered equation joined the system
  };
  Kind kind{};
  int i = 0;        // cancel: first equation; added: new equation number
  int j = 0;        // cancel/step: divisor equation number
  Polynomial poly;  // begin/cancel head, step value, normalize/added payload
  std::vector<std::pair<int, Polynomial>> equations;  // kind == system
};

using TraceSink = std::function<void(const TraceEvent&)>;

}  // namespace coupler
