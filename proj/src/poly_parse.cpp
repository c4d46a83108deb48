#include <cctype>
#include <set>

#include "coupler/error.hpp"
#include "coupler/polynomial.hpp"

namespace coupler {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  std::shared_ptr<const VarSet> vars;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_space() {
    while (!done() && (std::isspace(static_cast<unsigned char>(peek())) ||
                       peek() == '*'))
      ++pos;
  }

  mpz_class digits(const char* what) {
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, pos);
    return mpz_class(std::string(text.substr(start, pos - start)));
  }

  // Integer or integer/integer.
  Rational rational_literal() {
    mpz_class num = digits("a number");
    skip_space();
    if (!done() && peek() == '/') {
      std::size_t slash = pos;
      ++pos;
      skip_space();
      mpz_class den = digits("a denominator");
      if (den == 0) throw ParseError("division by zero", slash);
      mpq_class q(num, den);
      q.canonicalize();
      return Rational(std::move(q));
    }
    return Rational(std::move(num));
  }

  // Longest varset name starting here, or nullopt.
  std::optional<std::size_t> variable() {
    std::size_t best = 0, best_len = 0;
    for (std::size_t i = 0; i < vars->size(); ++i) {
      const std::string& n = vars->name(i);
      if (n.size() > best_len && text.substr(pos, n.size()) == n) {
        best = i;
        best_len = n.size();
      }
    }
    if (best_len == 0) return std::nullopt;
    pos += best_len;
    return best;
  }

  // coefficient and variable factors juxtaposed: "3/2by", "x^2y^2".
  Term term() {
    Rational coeff(1);
    Monomial mono(vars->size());
    bool any = false;
    for (;;) {
      skip_space();
      if (done()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= rational_literal();
        any = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t at = pos;
        auto vi = variable();
        if (!vi) {
          std::size_t end = at;
          while (end < text.size() &&
                 (std::isalnum(static_cast<unsigned char>(text[end])) ||
                  text[end] == '_'))
            ++end;
          throw ParseError(
              "unknown variable '" + std::string(text.substr(at, end - at)) +
                  "'",
              at);
        }
        int exp = 1;
        skip_space();
        if (!done() && peek() == '^') {
          ++pos;
          skip_space();
          mpz_class e = digits("an exponent");
          if (!e.fits_sint_p()) throw ParseError("exponent too large", pos);
          exp = static_cast<int>(e.get_si());
        }
        if (exp > 0)
          mono = mono.times(Monomial::unit(vars->size(), *vi, exp));
        any = true;
        continue;
      }
      break;
    }
    if (!any) throw ParseError("expected a term", pos);
    return {mono, coeff};
  }

  Polynomial parse() {
    Polynomial p(vars);
    skip_space();
    if (done()) throw ParseError("empty polynomial text", pos);
    bool first = true;
    while (true) {
      skip_space();
      if (done()) {
        if (first) throw ParseError("expected a term", pos);
        break;
      }
      int sign = 1;
      char c = peek();
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos);
      }
      Term t = term();
      p += Polynomial::from_terms(
          vars, {{t.mono, sign < 0 ? -t.coeff : t.coeff}});
      first = false;
    }
    return p;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            std::shared_ptr<const VarSet> vars) {
  if (!vars) throw Error("parse needs a varset");
  Parser p{text, 0, std::move(vars)};
  return p.parse();
}

std::shared_ptr<const VarSet> infer_varset(std::string_view text) {
  std::set<char> letters;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) letters.insert(c);
  }
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  return VarSet::make(std::move(names));
}

}  // namespace coupler
