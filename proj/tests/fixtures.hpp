#pragma once

// Frozen curve polynomials shared across suites. Each string is an oracle:
// the four-bar coupler sextics and the triple-circle union, all in canonical
// primitive text form (lex, x before y).
namespace coupler::testing {

// Coupler curve of the 10/10/4 four-bar with anchors (0,0) and (8,0),
// midpoint tracer.
inline constexpr const char* kFourBarSextic =
    "x^6-24x^5+3x^4y^2+16x^4-48x^3y^2+2304x^3+3x^2y^4-96x^2y^2-5120x^2"
    "-24xy^4+2304xy^2-49152x+y^6-112y^4+768y^2+147456";

// Coupler curve of the 10/6/10 four-bar with anchors (0,0) and (14,0),
// midpoint tracer; its near-straight lobe crosses the line x = 7.
inline constexpr const char* kWattSextic =
    "x^6-42x^5+3x^4y^2+455x^4-84x^3y^2+980x^3+3x^2y^4+518x^2y^2-26705x^2"
    "-42xy^4+980xy^2+8918x+y^6+63y^4-10633y^2+405769";

// Coupler curve of the 5/8/5 four-bar with anchors (0,0) and (8,0), midpoint
// tracer: a circle times an irreducible quartic.
inline constexpr const char* kParallelogramSextic =
    "x^6-24x^5+3x^4y^2+190x^4-48x^3y^2-480x^3+3x^2y^4+252x^2y^2-335x^2"
    "-24xy^4-480xy^2+1656x+y^6+62y^4-783y^2+1296";
inline constexpr const char* kParallelogramCircle = "x^2+y^2-8x-9";
inline constexpr const char* kParallelogramQuartic =
    "x^4-16x^3+2x^2y^2+71x^2-16xy^2-56x+y^4+71y^2-144";

// Union of the circles radius 2 at (0,0), radius 2 at (4,0), radius 4 at
// (2,0) — the rhombus linkage's three-branch locus.
inline constexpr const char* kThreeCircleSextic =
    "x^6+y^6+3x^2y^4+3x^4y^2-12x^5-12xy^4-24x^3y^2+28x^4-4y^4+24x^2y^2"
    "+96x^3+96xy^2-272x^2-144y^2-192x+576";

}  // namespace coupler::testing
