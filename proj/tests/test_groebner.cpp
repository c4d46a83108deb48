#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "coupler/error.hpp"
#include "coupler/groebner.hpp"
#include "helpers.hpp"

using namespace coupler;
using namespace coupler::testing;

namespace {

PolySystem make_system(const std::shared_ptr<const VarSet>& vars,
                       const std::vector<const char*>& eqs,
                       std::vector<std::string> aux = {}) {
  PolySystem sys;
  sys.vars = vars;
  for (const char* e : eqs) sys.equations.push_back(P(e, vars));
  sys.aux = std::move(aux);
  return sys;
}

// Equality of generator lists as sets of exact polynomials.
bool same_generators(const std::vector<Polynomial>& a,
                     const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    if (std::find(b.begin(), b.end(), p) == b.end()) return false;
  }
  return true;
}

PolySystem peaucellier_system(bool saturated) {
  auto vs = VarSet::make({"a", "b", "c", "d", "e", "f", "x", "y"});
  PolySystem sys = make_system(
      vs, {"e^2-8e+16+f^2-16", "e^2-2ec+c^2+f^2-2fd+d^2-25",
           "c^2-2cx+x^2+d^2-2dy+y^2-25", "x^2-2xa+a^2+y^2-2yb+b^2-25",
           "a^2-2ae+e^2+b^2-2bf+f^2-25", "a^2+b^2-100", "c^2+d^2-100"});
  if (!saturated) return sys;
  return saturate(sys, {P("e^2-2ex+x^2+f^2-2fy+y^2", vs),
                        P("a^2-2ac+c^2+b^2-2bd+d^2", vs)});
}

}  // namespace

TEST_CASE("s-polynomial of a polynomial with itself vanishes") {
  auto vs = VarSet::make({"x", "y"});
  TermOrder lex(OrderKind::lex, vs);
  Polynomial p = P("x^2y-3y^2+x", vs);
  CHECK(s_polynomial(p, p, lex).is_zero());
}

TEST_CASE("s-polynomial of basis members reduces to zero") {
  auto vs = VarSet::make({"x", "y"});
  TermOrder lex(OrderKind::lex, vs);
  Polynomial p = P("x-y^2", vs);
  Polynomial q = P("y^4-y", vs);
  Polynomial s = s_polynomial(p, q, lex);
  CHECK(reduce_fully(s, {p, q}, lex).remainder.is_zero());
  CHECK(is_groebner_basis({p, q}, lex));
}

TEST_CASE("s-polynomial validates inputs") {
  auto vs = VarSet::make({"x", "y"});
  TermOrder lex(OrderKind::lex, vs);
  TermOrder revlex(OrderKind::revlex, vs);
  Polynomial p = P("x", vs);
  CHECK_THROWS_AS(s_polynomial(p, P("0", vs), lex), Error);
  CHECK_THROWS_AS(s_polynomial(p, p, revlex), Error);
}

TEST_CASE("textbook basis computation") {
  auto vs = VarSet::make({"x", "y"});
  TermOrder lex(OrderKind::lex, vs);
  auto basis = buchberger({P("x^2-y", vs), P("y^2-x", vs)}, lex);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == P("x-y^2", vs));
  CHECK(basis[1] == P("y^4-y", vs));
  CHECK(is_groebner_basis(basis, lex));
  // The original pair is *not* already a basis.
  CHECK(!is_groebner_basis({P("x^2-y", vs), P("y^2-x", vs)}, lex));
}

TEST_CASE("single generator is its own basis") {
  auto vs = VarSet::make({"x", "y"});
  TermOrder lex(OrderKind::lex, vs);
  auto basis = buchberger({P("x", vs)}, lex);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == P("x", vs));
}

TEST_CASE("zero generators are ignored") {
  auto vs = VarSet::make({"x", "y"});
  TermOrder lex(OrderKind::lex, vs);
  auto basis = buchberger({P("0", vs), P("x", vs), P("0", vs)}, lex);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == P("x", vs));
  CHECK(buchberger({P("0", vs)}, lex).empty());
  CHECK(buchberger({}, lex).empty());
}

TEST_CASE("ladder system basis adds the ellipse") {
  auto vs = VarSet::make({"a", "b", "x", "y"});
  TermOrder lex(OrderKind::lex, vs);
  std::vector<Polynomial> gens = {P("a^2+b^2-1", vs), P("x-1/3a", vs),
                                  P("y-2/3b", vs)};
  std::vector<TraceEvent> events;
  auto basis = buchberger(gens, lex, [&](const TraceEvent& ev) {
    events.push_back(ev);
  });
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == P("a-3x", vs));
  CHECK(basis[1] == P("2b-3y", vs));
  CHECK(basis[2] == P("36x^2+9y^2-4", vs));
  CHECK(is_groebner_basis(basis, lex));

  // Exactly one pair survives the coprime filter; its chain adopts the
  // ellipse as equation (4).
  std::size_t cancels = 0;
  for (const auto& ev : events) {
    if (ev.kind == TraceEvent::Kind::cancel) ++cancels;
  }
  CHECK(cancels == 1);
  auto added = std::find_if(events.begin(), events.end(),
                            [](const TraceEvent& ev) {
                              return ev.kind == TraceEvent::Kind::added;
                            });
  REQUIRE(added != events.end());
  CHECK(added->i == 4);
  CHECK(added->poly == P("36x^2+9y^2-4", vs));
  CHECK(added->poly.equals_up_to_scalar(P("x^2+1/4y^2-1/9", vs)));
}

TEST_CASE("trace and plain runs adopt the same basis") {
  auto vs = VarSet::make({"x", "y", "z"});
  std::mt19937 rng(41);
  for (int i = 0; i < 15; ++i) {
    TermOrder ord(i % 2 == 0 ? OrderKind::lex : OrderKind::degrevlex, vs);
    std::vector<Polynomial> gens;
    int n = 2 + static_cast<int>(rng() % 2);
    for (int k = 0; k < n; ++k)
      gens.push_back(random_nonzero_polynomial(rng, vs, 3, 2));
    auto quiet = buchberger(gens, ord);
    auto traced = buchberger(gens, ord, [](const TraceEvent&) {});
    CHECK(same_generators(quiet, traced));
  }
}

TEST_CASE("pair pruning does not change the reduced basis") {
  auto vs = VarSet::make({"x", "y", "z"});
  std::mt19937 rng(43);
  BuchbergerOptions naive;
  naive.coprime_skip = false;
  naive.chain_criteria = false;
  for (int i = 0; i < 25; ++i) {
    TermOrder ord(i % 2 == 0 ? OrderKind::degrevlex : OrderKind::lex, vs);
    std::vector<Polynomial> gens;
    int n = 2 + static_cast<int>(rng() % 2);
    for (int k = 0; k < n; ++k)
      gens.push_back(random_nonzero_polynomial(rng, vs, 3, 2));
    auto fast = buchberger(gens, ord);
    auto slow = buchberger(gens, ord, {}, naive);
    CHECK(same_generators(fast, slow));
    CHECK(is_groebner_basis(fast, ord));
    // Every input generator reduces to zero against the basis.
    for (const auto& g : gens)
      CHECK(reduce_fully(g, fast, ord).remainder.is_zero());
  }
}

TEST_CASE("generator order does not change the reduced basis") {
  auto vs = VarSet::make({"x", "y", "z"});
  std::mt19937 rng(47);
  for (int i = 0; i < 15; ++i) {
    TermOrder ord(OrderKind::degrevlex, vs);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(random_nonzero_polynomial(rng, vs, 3, 2));
    auto base = buchberger(gens, ord);
    std::vector<Polynomial> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(same_generators(base, buchberger(shuffled, ord)));
  }
}

TEST_CASE("basis search refuses bad inputs") {
  auto vs = VarSet::make({"x", "y"});
  TermOrder revlex(OrderKind::revlex, vs);
  CHECK_THROWS_AS(buchberger({P("x", vs)}, revlex), Error);
  TermOrder lex(OrderKind::lex, vs);
  BuchbergerOptions tiny;
  tiny.max_additions = 0;
  CHECK_THROWS_AS(buchberger({P("x^2-y", vs), P("y^2-x", vs)}, lex, {}, tiny),
                  Error);
}

TEST_CASE("ladder elimination keeps only the ellipse") {
  auto vs = VarSet::make({"a", "b", "x", "y"});
  EliminateRequest req;
  req.system = make_system(vs, {"a^2+b^2-1", "x-1/3a", "y-2/3b"});
  req.keep = {"x", "y"};
  PolySystem out = eliminate(req);
  CHECK(out.vars->names() == std::vector<std::string>{"x", "y"});
  REQUIRE(out.equations.size() == 1);
  auto xy = out.vars;
  CHECK(out.equations[0] == P("36x^2+9y^2-4", xy));
  CHECK(out.equations[0].equals_up_to_scalar(P("x^2+1/4y^2-1/9", xy)));
}

TEST_CASE("four-bar elimination reproduces the coupler sextic") {
  auto vs = VarSet::make({"a", "b", "c", "d", "x", "y"});
  EliminateRequest req;
  req.system = make_system(
      vs, {"a^2+b^2-100", "c^2-16c+64+d^2-100", "a^2-2ac+c^2+b^2-2bd+d^2-16",
           "x-1/2a-1/2c", "y-1/2b-1/2d"});
  req.keep = {"x", "y"};
  PolySystem out = eliminate(req);
  REQUIRE(out.equations.size() == 1);
  Polynomial expected = P(
      "x^6-24x^5+3x^4y^2+16x^4-48x^3y^2+2304x^3+3x^2y^4-96x^2y^2-5120x^2"
      "-24xy^4+2304xy^2-49152x+y^6-112y^4+768y^2+147456",
      out.vars);
  CHECK(out.equations[0] == expected);
}

TEST_CASE("small elimination example") {
  auto vs = VarSet::make({"x", "y"});
  EliminateRequest req;
  req.system = make_system(vs, {"y-x^2", "y-1"});
  req.keep = {"x"};
  PolySystem out = eliminate(req);
  REQUIRE(out.equations.size() == 1);
  CHECK(out.equations[0] == P("x^2-1", out.vars));
}

TEST_CASE("eliminating everything but a free variable leaves nothing") {
  auto vs = VarSet::make({"x", "y"});
  EliminateRequest req;
  req.system = make_system(vs, {"xy"});
  req.keep = {"x"};
  PolySystem out = eliminate(req);
  CHECK(out.equations.empty());
}

TEST_CASE("eliminate validates the variable split") {
  auto vs = VarSet::make({"x", "y"});
  EliminateRequest req;
  req.system = make_system(vs, {"xy"});
  req.keep = {};
  CHECK_THROWS_AS(eliminate(req), Error);
  req.keep = {"q"};
  CHECK_THROWS_AS(eliminate(req), Error);
  req.keep = {"x", "x"};
  CHECK_THROWS_AS(eliminate(req), Error);
  req.keep = {"x"};
  req.drop = std::vector<std::string>{"x"};
  CHECK_THROWS_AS(eliminate(req), Error);
  req.drop = std::vector<std::string>{};
  CHECK_THROWS_AS(eliminate(req), Error);
  req.drop = std::vector<std::string>{"y"};
  CHECK(eliminate(req).equations.empty());
}

TEST_CASE("saturation forces a coordinate axis out of the zero set") {
  auto vs = VarSet::make({"x", "y"});
  PolySystem sys = make_system(vs, {"xy"});
  PolySystem sat = saturate(sys, {P("y", vs)});
  CHECK(sat.vars->names() == std::vector<std::string>{"x", "y", "t"});
  CHECK(sat.aux == std::vector<std::string>{"t"});
  REQUIRE(sat.equations.size() == 2);
  CHECK(sat.equations[1] == P("ty-1", sat.vars));

  EliminateRequest req;
  req.system = sat;
  req.keep = {"x"};
  PolySystem out = eliminate(req);
  REQUIRE(out.equations.size() == 1);
  CHECK(out.equations[0] == P("x", out.vars));
}

TEST_CASE("saturating by a nonzero constant changes nothing") {
  auto vs = VarSet::make({"x", "y"});
  PolySystem sys = make_system(vs, {"xy"});
  PolySystem sat = saturate(sys, {P("1", vs)});
  REQUIRE(sat.equations.size() == 2);
  CHECK(sat.equations[1] == P("t-1", sat.vars));
  EliminateRequest req;
  req.system = sat;
  req.keep = {"x"};
  CHECK(eliminate(req).equations.empty());
}

TEST_CASE("fresh saturation names skip collisions") {
  auto vs = VarSet::make({"t", "x"});
  PolySystem sys = make_system(vs, {"tx"});
  PolySystem sat = saturate(sys, {P("x", vs), P("t", vs)});
  CHECK(sat.vars->names() == std::vector<std::string>{"t", "x", "u", "v"});
  CHECK(sat.aux == std::vector<std::string>{"u", "v"});
}

TEST_CASE("explicit saturation names must be fresh") {
  auto vs = VarSet::make({"x", "y"});
  PolySystem sys = make_system(vs, {"xy"});
  CHECK_THROWS_AS(saturate(sys, {P("y", vs)}, {"x"}), Error);
  CHECK_THROWS_AS(saturate(sys, {P("y", vs), P("x", vs)}, {"s", "s"}), Error);
  PolySystem ok = saturate(sys, {P("y", vs)}, {"s"});
  CHECK(ok.vars->contains("s"));
  CHECK_THROWS_AS(saturate(sys, {P("0", vs)}, {"s"}), Error);
}

TEST_CASE("system JSON round trip") {
  auto vs = VarSet::make({"a", "b", "x", "y"});
  PolySystem sys = make_system(vs, {"a^2+b^2-1", "x-1/3a", "y-2/3b"});
  std::string text = system_to_json(sys);
  PolySystem back = system_from_json(text);
  CHECK(back.vars->names() == sys.vars->names());
  REQUIRE(back.equations.size() == sys.equations.size());
  for (std::size_t i = 0; i < sys.equations.size(); ++i)
    CHECK(back.equations[i] == sys.equations[i]);
  CHECK(back.aux.empty());

  PolySystem sat = saturate(sys, {P("a", vs)});
  PolySystem sat_back = system_from_json(system_to_json(sat));
  CHECK(sat_back.aux == std::vector<std::string>{"t"});
}

TEST_CASE("system JSON rejects malformed input") {
  CHECK_THROWS_AS(system_from_json("not json"), Error);
  CHECK_THROWS_AS(system_from_json("{}"), Error);
  CHECK_THROWS_AS(system_from_json(R"({"vars":["x"],"equations":["y"]})"),
                  Error);
  CHECK_THROWS_AS(system_from_json(R"({"vars":["x","x"],"equations":[]})"),
                  Error);
  CHECK_THROWS_AS(
      system_from_json(R"({"vars":["x"],"equations":[],"aux":["q"]})"),
      Error);
  CHECK_THROWS_AS(system_from_json(R"({"vars":"x","equations":[]})"), Error);
}

TEST_CASE("aux variables are dropped by default") {
  auto vs = VarSet::make({"x", "y"});
  PolySystem sys = make_system(vs, {"xy"});
  PolySystem sat = saturate(sys, {P("y", vs)});
  EliminateRequest req;
  req.system = sat;
  req.keep = {"x"};  // t is dropped without being listed anywhere
  PolySystem out = eliminate(req);
  REQUIRE(out.equations.size() == 1);
  CHECK(out.equations[0] == P("x", out.vars));
}

TEST_CASE("straight-line linkage elimination" * doctest::timeout(300)) {
  EliminateRequest req;
  req.system = peaucellier_system(true);
  req.keep = {"x", "y"};
  PolySystem out = eliminate(req);
  REQUIRE(out.equations.size() == 1);
  CHECK(out.equations[0] == P("8x-75", out.vars));
}

TEST_CASE("without the distinctness equations the line is lost" *
          doctest::timeout(300)) {
  EliminateRequest req;
  req.system = peaucellier_system(false);
  req.keep = {"x", "y"};
  PolySystem out = eliminate(req);
  // The unconstrained system collapses: its restriction is not the line.
  bool is_line_only =
      out.equations.size() == 1 &&
      out.equations[0].equals_up_to_scalar(P("8x-75", out.vars));
  CHECK(!is_line_only);
  // Snapshot: the degenerate configurations sweep the whole plane, so the
  // restricted ideal is zero and no equation survives at all.
  CHECK(out.equations.empty());
}
