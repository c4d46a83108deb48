#pragma once
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "coupler/monomial.hpp"
#include "coupler/rational.hpp"
#include "coupler/term_order.hpp"
#include "coupler/varset.hpp"

namespace coupler {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Exact multivariate polynomial with rational coefficients over a shared
// varset. Zero coefficients are never stored. Arithmetic requires both
// operands to be built over equal varsets (same names, same order).
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, Monomial::VecLess>;

  Polynomial();  // zero over the empty varset
  explicit Polynomial(std::shared_ptr<const VarSet> vars);

  static Polynomial constant(std::shared_ptr<const VarSet> vars, Rational c);
  static Polynomial variable(std::shared_ptr<const VarSet> vars,
                             std::string_view name);
  static Polynomial from_terms(std::shared_ptr<const VarSet> vars,
                               const std::vector<Term>& terms);

  const VarSet& vars() const { return *vars_; }
  const std::shared_ptr<const VarSet>& vars_ptr() const { return vars_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;  // zero when absent
  Rational constant_coeff() const;

  int degree() const;                    // total degree; throws on zero
  int degree_in(std::size_t var) const;  // largest exponent of one variable

  Term leading_term(const TermOrder& ord) const;  // throws on zero
  Monomial leading_monomial(const TermOrder& ord) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator*(Polynomial p, const Rational& c) {
    return p *= c;
  }
  friend Polynomial operator*(const Rational& c, Polynomial p) {
    return p *= c;
  }
  // this * c * X^m in one pass.
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(int k) const;  // k >= 0

  Rational evaluate(const std::vector<Rational>& point) const;
  Rational evaluate_at(const std::map<std::string, Rational>& point) const;
  // Replace one variable by a polynomial over the same varset.
  Polynomial substitute(std::string_view var, const Polynomial& repl) const;
  // Rebuild over another varset, matching variables by name; every variable
  // actually used must exist in the target.
  Polynomial rename_vars(std::shared_ptr<const VarSet> target) const;

  // Canonical primitive form: coprime integer coefficients, positive leading
  // coefficient under ord. Zero stays zero.
  Polynomial primitive(const TermOrder& ord) const;
  bool equals_up_to_scalar(const Polynomial& o) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  void add_term(const Monomial& m, const Rational& c);
  void check_same_vars(const Polynomial& o) const;

  std::shared_ptr<const VarSet> vars_;
  TermMap terms_;
};

// Text form: terms descending under ord (default: lex over the varset's own
// precedence), "+"/"-" separators, "^" exponents, coefficient juxtaposed
// before the variables ("36x^2+9y^2-4", "9/4y^2", "0").
std::string to_text(const Polynomial& p);
std::string to_text(const Polynomial& p, const TermOrder& ord);
// Same term layout with LaTeX markup: "\frac{9}{4}y^{2}".
std::string to_latex(const Polynomial& p);
std::string to_latex(const Polynomial& p, const TermOrder& ord);

// Parse the text grammar over an explicit varset: signed terms of juxtaposed
// factors, each factor a rational literal or a variable with optional
// nonnegative "^k". Variable tokens are matched longest-first against the
// varset. Whitespace and '*' separate factors.
Polynomial parse_polynomial(std::string_view text,
                            std::shared_ptr<const VarSet> vars);
// Varset for text with no declared variables: every letter that appears,
// sorted alphabetically (single-letter names only).
std::shared_ptr<const VarSet> infer_varset(std::string_view text);

}  // namespace coupler
