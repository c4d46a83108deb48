#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coupler/error.hpp"
#include "coupler/polynomial.hpp"
#include "helpers.hpp"

using namespace coupler;
using namespace coupler::testing;

static const char* kSexticCurve =
    "x^6-24x^5+3x^4y^2+16x^4-48x^3y^2+2304x^3+3x^2y^4-96x^2y^2-5120x^2"
    "-24xy^4+2304xy^2-49152x+y^6-112y^4+768y^2+147456";

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(2));
  CHECK(Rational(-4, 8).str() == "-1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(7).is_integer());
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-5).abs() == Rational(5));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
}

TEST_CASE("rational division by zero is refused") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("rational text round trip") {
  for (const char* s : {"0", "7", "-3/4", "22/7", "-1"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("2/"), Error);
  CHECK_THROWS_AS(Rational::parse("a"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
}

TEST_CASE("varset validates names") {
  auto vs = VarSet::make({"a", "b", "x", "y"});
  CHECK(vs->size() == 4);
  CHECK(vs->index_of("x") == 2);
  CHECK(!vs->contains("q"));
  CHECK_THROWS_AS(VarSet::make({"a", "a"}), Error);
  CHECK_THROWS_AS(VarSet::make({"2b"}), Error);
  CHECK_THROWS_AS(VarSet::make({""}), Error);
  CHECK_THROWS_AS((void)vs->index_of("zz"), Error);
}

TEST_CASE("parse simple bar equation") {
  auto vs = VarSet::make({"a", "b"});
  Polynomial p = P("a^2+b^2-100", vs);
  CHECK(p.term_count() == 3);
  CHECK(p.coeff(Monomial::unit(2, 0, 2)) == Rational(1));
  CHECK(p.coeff(Monomial::unit(2, 1, 2)) == Rational(1));
  CHECK(p.constant_coeff() == Rational(-100));
}

TEST_CASE("parse zero and constants") {
  auto vs = VarSet::make({"x", "y"});
  CHECK(P("0", vs).is_zero());
  CHECK(P("5", vs).is_constant());
  CHECK(P("5", vs).constant_coeff() == Rational(5));
  CHECK(P("x-x", vs).is_zero());
}

TEST_CASE("parse rational coefficients with spacing") {
  auto vs = VarSet::make({"x", "y"});
  Polynomial p = P("x^2 + 1/4 y^2 - 1/9", vs);
  CHECK(p.coeff(Monomial::unit(2, 0, 2)) == Rational(1));
  CHECK(p.coeff(Monomial::unit(2, 1, 2)) == Rational(1, 4));
  CHECK(p.constant_coeff() == Rational(-1, 9));
  CHECK(p == P("x^2+1/4y^2-1/9", vs));
  CHECK(p == P("1/4y^2 - 1/9 + x^2", vs));
}

TEST_CASE("parse juxtaposition and explicit products") {
  auto vs = VarSet::make({"b", "y"});
  CHECK(P("3/2by", vs) == P("3/2 * b * y", vs));
  CHECK(P("2b 3y", vs) == P("6by", vs));
  CHECK(P("-by", vs) == -P("by", vs));
  CHECK(P("b^0", vs) == P("1", vs));
}

TEST_CASE("parse matches variable names longest first") {
  auto vs = VarSet::make({"t", "t2", "g"});
  Polynomial p = P("t2g-1", vs);
  Monomial m = Monomial::unit(3, 1).times(Monomial::unit(3, 2));
  CHECK(p.coeff(m) == Rational(1));
  CHECK(p.constant_coeff() == Rational(-1));
}

TEST_CASE("parse reports positions for malformed input") {
  auto vs = VarSet::make({"x", "y"});
  CHECK_THROWS_AS(P("", vs), ParseError);
  CHECK_THROWS_AS(P("x +", vs), ParseError);
  CHECK_THROWS_AS(P("x^", vs), ParseError);
  CHECK_THROWS_AS(P("q+1", vs), ParseError);
  CHECK_THROWS_AS(P("x/2", vs), ParseError);
  CHECK_THROWS_AS(P("1/0", vs), ParseError);
  CHECK_THROWS_AS(P("x^-2", vs), ParseError);
  try {
    P("x+zz*y", vs);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
    CHECK(std::string(e.what()).find("zz") != std::string::npos);
  }
}

TEST_CASE("product of linear factors expands correctly") {
  auto vs = VarSet::make({"x", "y"});
  Polynomial p = P("x-1", vs) * P("x+1", vs) * P("y-1", vs) * P("y+1", vs);
  Polynomial expected = P("x^2y^2-x^2-y^2+1", vs);
  CHECK(p == expected);
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto pt = random_point(rng, 2);
    CHECK(p.evaluate(pt) == expected.evaluate(pt));
  }
}

TEST_CASE("ring axioms hold on random polynomials") {
  auto vs = VarSet::make({"x", "y", "z"});
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    Polynomial p = random_polynomial(rng, vs);
    Polynomial q = random_polynomial(rng, vs);
    Polynomial r = random_polynomial(rng, vs);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(p + Polynomial(vs) == p);
    CHECK(p * Polynomial::constant(vs, Rational(1)) == p);
    CHECK((p * Polynomial(vs)).is_zero());
  }
}

TEST_CASE("degree multiplies over products") {
  auto vs = VarSet::make({"x", "y"});
  std::mt19937 rng(13);
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_nonzero_polynomial(rng, vs);
    Polynomial q = random_nonzero_polynomial(rng, vs);
    CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("degree fixtures") {
  auto vs = VarSet::make({"x", "y"});
  CHECK(P(kSexticCurve, vs).degree() == 6);
  CHECK(P("x^2y^2-x^2-y^2+1", vs).degree() == 4);
  CHECK(P("5", vs).degree() == 0);
  CHECK_THROWS_AS(P("0", vs).degree(), Error);
  CHECK(P("x^3y", vs).degree_in(0) == 3);
  CHECK(P("x^3y", vs).degree_in(1) == 1);
}

TEST_CASE("monomial comparison under lex") {
  auto vs = VarSet::make({"x", "y"});
  TermOrder lex(OrderKind::lex, vs);
  auto m = [&](const char* t) {
    return P(t, vs).leading_term(lex).mono;
  };
  const char* chain[] = {"x^2", "xy", "x", "y^3", "y^2", "y", "1"};
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      int c = lex.compare(m(chain[i]), m(chain[j]));
      if (i < j) CHECK(c > 0);
      if (i == j) CHECK(c == 0);
      if (i > j) CHECK(c < 0);
    }
  }
}

TEST_CASE("monomial comparison under graded orders") {
  auto vs = VarSet::make({"x", "y"});
  TermOrder deglex(OrderKind::deglex, vs);
  TermOrder degrevlex(OrderKind::degrevlex, vs);
  Monomial y3 = Monomial::unit(2, 1, 3);
  Monomial x2 = Monomial::unit(2, 0, 2);
  CHECK(deglex.greater(y3, x2));
  // On two variables the graded orders agree everywhere.
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int d = 0; d <= 4; ++d) {
          Monomial u = Monomial::unit(2, 0, a).times(Monomial::unit(2, 1, b));
          Monomial v = Monomial::unit(2, 0, c).times(Monomial::unit(2, 1, d));
          CHECK(deglex.compare(u, v) == degrevlex.compare(u, v));
        }
}

TEST_CASE("revlex puts 1 on top and is flagged inadmissible") {
  auto vs = VarSet::make({"x"});
  TermOrder revlex(OrderKind::revlex, vs);
  Monomial one(1), x = Monomial::unit(1, 0), x2 = Monomial::unit(1, 0, 2);
  CHECK(revlex.greater(one, x));
  CHECK(revlex.greater(x, x2));
  CHECK(!revlex.admissible());
  CHECK(TermOrder(OrderKind::lex, vs).admissible());
  CHECK(TermOrder(OrderKind::deglex, vs).admissible());
  CHECK(TermOrder(OrderKind::degrevlex, vs).admissible());
}

TEST_CASE("explicit precedence reorders variables") {
  auto vs = VarSet::make({"a", "b", "x", "y"});
  TermOrder ord(OrderKind::lex, vs, {"x", "y", "a", "b"});
  Polynomial p = P("x-1/3a", vs);
  CHECK(p.leading_term(ord).mono == Monomial::unit(4, 2));
  CHECK_THROWS_AS(TermOrder(OrderKind::lex, vs,
                            std::vector<std::string>{"x", "y"}),
                  Error);
  CHECK_THROWS_AS(TermOrder(OrderKind::lex, vs,
                            std::vector<std::string>{"x", "x", "a", "b"}),
                  Error);
}

TEST_CASE("leading term fixtures") {
  auto ab = VarSet::make({"a", "b"});
  TermOrder lex_ab(OrderKind::lex, ab);
  Term t = P("a^2+b^2-100", ab).leading_term(lex_ab);
  CHECK(t.mono == Monomial::unit(2, 0, 2));
  CHECK(t.coeff == Rational(1));

  auto vs = VarSet::make({"a", "b", "x", "y"});
  TermOrder lex(OrderKind::lex, vs);
  Term u = P("x-1/3a", vs).leading_term(lex);
  CHECK(u.mono == Monomial::unit(4, 0));
  CHECK(u.coeff == Rational(-1, 3));

  Term c = P("5", vs).leading_term(lex);
  CHECK(c.mono.is_one());
  CHECK(c.coeff == Rational(5));
  CHECK_THROWS_AS(P("0", vs).leading_term(lex), Error);
}

TEST_CASE("evaluate on curve points") {
  auto vs = VarSet::make({"x", "y"});
  Polynomial p = P("x^3+y^2-17", vs);
  CHECK(p.evaluate({Rational(1), Rational(4)}) == Rational(0));
  CHECK(p.evaluate({Rational(2), Rational(3)}) == Rational(0));
  CHECK(p.evaluate({Rational(0), Rational(0)}) == Rational(-17));
  CHECK(p.evaluate_at({{"x", Rational(1)}, {"y", Rational(4)}}) ==
        Rational(0));
  CHECK_THROWS_AS(p.evaluate({Rational(1)}), Error);
}

TEST_CASE("evaluation is a ring homomorphism") {
  auto vs = VarSet::make({"x", "y", "z"});
  std::mt19937 rng(17);
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_polynomial(rng, vs);
    Polynomial q = random_polynomial(rng, vs);
    auto pt = random_point(rng, 3);
    CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
  }
}

TEST_CASE("substitution fixtures") {
  auto vs = VarSet::make({"x", "y"});
  Polynomial p = P("x^3+y^2-17", vs);
  Polynomial s = p.substitute("x", -Polynomial::variable(vs, "y"));
  CHECK(s == P("-y^3+y^2-17", vs));
  CHECK(p.substitute("x", Polynomial::variable(vs, "x")) == p);
  CHECK(P("x^2-y^2", vs)
            .substitute("x", Polynomial::variable(vs, "y"))
            .is_zero());
}

TEST_CASE("substitution agrees with evaluation") {
  auto vs = VarSet::make({"x", "y"});
  std::mt19937 rng(19);
  for (int i = 0; i < 10; ++i) {
    Polynomial p = random_polynomial(rng, vs);
    Polynomial r = random_polynomial(rng, vs, 3, 2);
    Polynomial s = p.substitute("x", r);
    for (int k = 0; k < 10; ++k) {
      auto pt = random_point(rng, 2);
      Rational rx = r.evaluate(pt);
      CHECK(s.evaluate(pt) == p.evaluate(std::vector<Rational>{rx, pt[1]}));
    }
  }
}

TEST_CASE("canonical primitive form") {
  auto vs = VarSet::make({"x", "y"});
  TermOrder lex(OrderKind::lex, vs);
  Polynomial p = P("9x^2+9/4y^2-1", vs);
  CHECK(p.primitive(lex) == P("36x^2+9y^2-4", vs));
  CHECK(P("-2x+4", vs).primitive(lex) == P("x-2", vs));
  CHECK(P("0", vs).primitive(lex).is_zero());
  std::mt19937 rng(23);
  for (int i = 0; i < 30; ++i) {
    Polynomial q = random_nonzero_polynomial(rng, vs);
    Polynomial prim = q.primitive(lex);
    CHECK(prim.primitive(lex) == prim);
    Rational lambda = random_nonzero_rational(rng);
    CHECK((q * lambda).primitive(lex) == prim);
    CHECK(prim.equals_up_to_scalar(q));
  }
}

TEST_CASE("scalar equality ignores scale only") {
  auto vs = VarSet::make({"x", "y"});
  CHECK(P("2x-4", vs).equals_up_to_scalar(P("-x+2", vs)));
  CHECK(!P("2x-4", vs).equals_up_to_scalar(P("2x-3", vs)));
  CHECK(!P("2x-4", vs).equals_up_to_scalar(P("0", vs)));
  CHECK(P("0", vs).equals_up_to_scalar(P("0", vs)));
}

TEST_CASE("text output round trips and matches fixtures") {
  auto vs = VarSet::make({"x", "y"});
  CHECK(to_text(P("x^2 + 1/4 y^2 - 1/9", vs)) == "x^2+1/4y^2-1/9");
  CHECK(to_text(P("36x^2+9y^2-4", vs)) == "36x^2+9y^2-4");
  CHECK(to_text(P("8x-75", vs)) == "8x-75");
  CHECK(to_text(P("0", vs)) == "0");
  CHECK(to_text(P("-x", vs)) == "-x");
  CHECK(to_text(P("y-x", vs)) == "-x+y");
  std::mt19937 rng(29);
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_polynomial(rng, vs);
    CHECK(parse_polynomial(to_text(p), vs) == p);
  }
}

TEST_CASE("latex output uses fractions and braced exponents") {
  auto vs = VarSet::make({"x", "y"});
  CHECK(to_latex(P("x^2+1/4y^2-1/9", vs)) ==
        "x^{2}+\\frac{1}{4}y^{2}-\\frac{1}{9}");
  CHECK(to_latex(P("36x^2+9y^2-4", vs)) == "36x^{2}+9y^{2}-4");
}

TEST_CASE("term order controls printed term sequence") {
  auto vs = VarSet::make({"x", "y"});
  Polynomial p = P("y^3+x^2", vs);
  CHECK(to_text(p, TermOrder(OrderKind::lex, vs)) == "x^2+y^3");
  CHECK(to_text(p, TermOrder(OrderKind::deglex, vs)) == "y^3+x^2");
}

TEST_CASE("inferred varsets collect letters alphabetically") {
  auto vs = infer_varset("y^2 + 2by - x");
  CHECK(vs->names() == std::vector<std::string>{"b", "x", "y"});
  CHECK(infer_varset("17")->size() == 0);
}

TEST_CASE("variables rename across varsets by name") {
  auto big = VarSet::make({"a", "b", "x", "y"});
  auto xy = VarSet::make({"x", "y"});
  Polynomial p = P("x^2+1/4y^2-1/9", big);
  Polynomial q = p.rename_vars(xy);
  CHECK(q == P("x^2+1/4y^2-1/9", xy));
  CHECK(q.rename_vars(big) == p);
  CHECK_THROWS_AS(P("a+x", big).rename_vars(xy), Error);
}

TEST_CASE("mixed varsets are refused") {
  auto vs1 = VarSet::make({"x", "y"});
  auto vs2 = VarSet::make({"y", "x"});
  CHECK_THROWS_AS(P("x", vs1) + P("x", vs2), Error);
  CHECK_THROWS_AS(P("x", vs1) * P("x", vs2), Error);
}

TEST_CASE("power and term products") {
  auto vs = VarSet::make({"x", "y"});
  CHECK(P("x+y", vs).pow(2) == P("x^2+2xy+y^2", vs));
  CHECK(P("x+y", vs).pow(0) == P("1", vs));
  CHECK_THROWS_AS(P("x", vs).pow(-1), Error);
  Polynomial p = P("x+1", vs).times_term(Rational(3), Monomial::unit(2, 1, 2));
  CHECK(p == P("3xy^2+3y^2", vs));
}
