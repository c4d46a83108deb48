#pragma once
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coupler/division.hpp"
#include "coupler/polynomial.hpp"
#include "coupler/trace.hpp"

namespace coupler {

// Equation system F = {f_i = 0} over one varset. `aux` names helper
// variables (saturation multipliers) that elimination drops by default.
// Equation numbers in traces are 1-based positions in `equations`.
struct PolySystem {
  std::shared_ptr<const VarSet> vars;
  std::vector<Polynomial> equations;
  std::vector<std::string> aux;
};

// (lcm/lt(p))*p - (lcm/lt(q))*q over the lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q,
                        const TermOrder& ord);

struct BuchbergerOptions {
  std::size_t max_additions = 100000;  // cap on adopted generators
  bool coprime_skip = true;   // drop pairs with coprime leading monomials
  bool chain_criteria = true;  // lcm-chain pruning of redundant pairs
};

// Reduced basis of the ideal generated by `gens` under an admissible order:
// minimal, fully interreduced, primitive, sorted by (total degree, leading
// monomial). Zero generators keep their equation numbers but are otherwise
// ignored. With a trace attached, emits the numbered system, every pair
// reduction chain, and each adopted equation.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const TermOrder& ord,
                                   const TraceSink& trace = {},
                                   const BuchbergerOptions& opts = {});

// True when every S-polynomial of the list reduces to zero against it.
// No pair is skipped; this is the honest certificate.
bool is_groebner_basis(const std::vector<Polynomial>& basis,
                       const TermOrder& ord);

struct EliminateRequest {
  PolySystem system;
  std::vector<std::string> keep;                 // nonempty
  std::optional<std::vector<std::string>> drop;  // default: all others + aux
};

// Generators of the ideal's restriction to the kept variables: a reduced lex
// basis over the kept varset (possibly empty). Traced runs use lex with the
// dropped variables above the kept ones so reduction chains read naturally;
// untraced runs reach the same basis through a faster block order.
PolySystem eliminate(const EliminateRequest& req, const TraceSink& trace = {});

// Rabinowitsch closure: appends fresh_var*g - 1 for each g over an extended
// varset, marking the fresh variables as aux. Fresh names come from
// t, u, v, w, t2, t3, ... skipping collisions; the explicit-names overload
// throws on collision instead.
PolySystem saturate(const PolySystem& sys,
                    const std::vector<Polynomial>& nonzero);
PolySystem saturate(const PolySystem& sys,
                    const std::vector<Polynomial>& nonzero,
                    const std::vector<std::string>& names);

PolySystem system_from_json(const std::string& text);
std::string system_to_json(const PolySystem& sys);

}  // namespace coupler
