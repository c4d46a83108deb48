#pragma once
#include <vector>

#include "coupler/polynomial.hpp"
#include "coupler/trace.hpp"

namespace coupler {

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per divisor
  Polynomial remainder;
};

// Multivariate division: repeatedly cancels the leading term of the working
// polynomial by the first divisor (lowest index) whose leading monomial
// divides it; leading terms no divisor reaches move to the remainder.
// Guarantees p == sum(quotients[i]*divisors[i]) + remainder, and no remainder
// monomial is divisible by any divisor's leading monomial. Requires an
// admissible order and nonzero divisors.
DivisionResult divide(const Polynomial& p,
                      const std::vector<Polynomial>& divisors,
                      const TermOrder& ord);

struct ReduceResult {
  Polynomial remainder;   // exact normal form
  Polynomial normalized;  // its canonical primitive rescale
};

// Remainder-only form of divide with an optional derivation log. Divisor
// numbers in the log are 1-based positions in `basis`. Events: begin (the
// starting value), one step per cancellation (running value = remainder so
// far + rest), and a final normalize for a nonzero remainder.
ReduceResult reduce_fully(const Polynomial& p,
                          const std::vector<Polynomial>& basis,
                          const TermOrder& ord, const TraceSink& trace = {});

}  // namespace coupler
