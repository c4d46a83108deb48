#include "coupler/curve_analysis.hpp"

#include <cstdint>
#include <numeric>

#include "coupler/division.hpp"
#include "coupler/error.hpp"

namespace coupler {

namespace {

std::shared_ptr<const VarSet> xy_vars() {
  static const auto v = VarSet::make({"x", "y"});
  return v;
}

// The analysis ops work on plane curves: no variable besides x and y.
void require_xy_only(const Polynomial& p, const char* what) {
  const VarSet& vars = p.vars();
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (m.exp(v) != 0 && vars.name(v) != "x" && vars.name(v) != "y") {
        throw Error(std::string(what) + " needs a curve in x and y only; "
                    "found '" + vars.name(v) + "'");
      }
    }
  }
}

TermOrder lex_over(const Polynomial& p) {
  return TermOrder(OrderKind::lex, p.vars_ptr());
}

}  // namespace

Line::Line(const Rational& a, const Rational& b, const Rational& c)
    : a_(a), b_(b), c_(c) {
  if (a_.is_zero() && b_.is_zero())
    throw Error("a line needs a nonzero x or y coefficient");
  // Clear denominators, strip the content, and normalize the sign of the
  // first nonzero direction coefficient.
  mpz_class mult = a_.den();
  mpz_lcm(mult.get_mpz_t(), mult.get_mpz_t(), b_.den().get_mpz_t());
  mpz_lcm(mult.get_mpz_t(), mult.get_mpz_t(), c_.den().get_mpz_t());
  Rational scale{mpz_class(mult)};
  mpz_class g = (a_ * scale).num();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), (b_ * scale).num().get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), (c_ * scale).num().get_mpz_t());
  scale /= Rational{g};
  if ((a_.is_zero() ? b_ : a_).sign() * scale.sign() < 0) scale = -scale;
  a_ *= scale;
  b_ *= scale;
  c_ *= scale;
}

Line Line::from_polynomial(const Polynomial& p) {
  require_xy_only(p, "line extraction");
  if (p.is_zero() || p.degree() != 1)
    throw Error("line extraction needs a curve of degree exactly 1");
  const VarSet& vars = p.vars();
  Rational a, b;
  if (vars.contains("x"))
    a = p.coeff(Monomial::unit(vars.size(), vars.index_of("x")));
  if (vars.contains("y"))
    b = p.coeff(Monomial::unit(vars.size(), vars.index_of("y")));
  return Line(a, b, p.constant_coeff());
}

Polynomial Line::as_polynomial(std::shared_ptr<const VarSet> vars) const {
  Polynomial out = Polynomial::constant(vars, c_);
  if (!a_.is_zero()) out += Polynomial::variable(vars, "x") * a_;
  if (!b_.is_zero()) out += Polynomial::variable(vars, "y") * b_;
  return out;
}

InversionCircle::InversionCircle(Point2 center, const Rational& radius_squared)
    : center_(std::move(center)), r2_(radius_squared) {
  if (r2_.sign() <= 0)
    throw Error("an inversion circle needs a positive squared radius");
}

Polynomial curve_union(const Polynomial& p, const Polynomial& q) {
  require_xy_only(p, "curve union");
  require_xy_only(q, "curve union");
  Polynomial prod = p * q;
  return prod.primitive(lex_over(prod));
}

bool contains_line(const Polynomial& p, const Line& line) {
  require_xy_only(p, "line containment");
  if (p.is_zero()) return true;
  const VarSet& vars = p.vars();
  const auto& vp = p.vars_ptr();
  if (!line.b().is_zero()) {
    if (!vars.contains("y")) return false;  // p ignores y; x runs free
    if (line.a().is_zero()) {
      Rational y0 = -line.c() / line.b();
      return p.substitute("y", Polynomial::constant(vp, y0)).is_zero();
    }
    if (!vars.contains("x")) return false;  // y sweeps every value
    Polynomial repl =
        Polynomial::variable(vp, "x") * (-line.a() / line.b()) +
        Polynomial::constant(vp, -line.c() / line.b());
    return p.substitute("y", repl).is_zero();
  }
  // Vertical line x = −c/a.
  if (!vars.contains("x")) return false;
  Rational x0 = -line.c() / line.a();
  return p.substitute("x", Polynomial::constant(vp, x0)).is_zero();
}

bool linear_factor_test(const Polynomial& p, const Line& line,
                        const TermOrder& ord) {
  require_xy_only(p, "linear factor test");
  Polynomial divisor = line.as_polynomial(p.vars_ptr());
  return divide(p, {divisor}, ord).remainder.is_zero();
}

namespace {

constexpr std::uint64_t kMod = 2147483647ull;  // 2³¹−1, prime

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return (a * b) % kMod;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  base %= kMod;
  while (e) {
    if (e & 1) r = mulmod(r, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kMod - 2); }

std::uint64_t intmod(long v) {
  long m = v % static_cast<long>(kMod);
  if (m < 0) m += kMod;
  return static_cast<std::uint64_t>(m);
}

struct ModTerm {
  int ex, ey;
  std::uint64_t coeff;
};

// p reduced mod 2³¹−1, exponents read off the x/y positions.
struct ModCurve {
  std::vector<ModTerm> terms;
  int degree = 0;

  explicit ModCurve(const Polynomial& prim) {
    const VarSet& vars = prim.vars();
    int xi = vars.contains("x") ? static_cast<int>(vars.index_of("x")) : -1;
    int yi = vars.contains("y") ? static_cast<int>(vars.index_of("y")) : -1;
    for (const auto& [m, c] : prim.terms()) {
      ModTerm t;
      t.ex = xi >= 0 ? m.exp(xi) : 0;
      t.ey = yi >= 0 ? m.exp(yi) : 0;
      mpz_class num = c.num();
      t.coeff = mpz_fdiv_ui(num.get_mpz_t(), kMod);
      degree = std::max(degree, t.ex + t.ey);
      terms.push_back(t);
    }
  }

  std::uint64_t eval(std::uint64_t x, std::uint64_t y,
                     std::vector<std::uint64_t>& px,
                     std::vector<std::uint64_t>& py) const {
    px[0] = py[0] = 1;
    for (int i = 1; i <= degree; ++i) {
      px[i] = mulmod(px[i - 1], x);
      py[i] = mulmod(py[i - 1], y);
    }
    std::uint64_t sum = 0;
    for (const auto& t : terms)
      sum = (sum + mulmod(t.coeff, mulmod(px[t.ex], py[t.ey]))) % kMod;
    return sum;
  }

  // True iff p restricted to the line is zero at degree+1 sample points mod
  // 2³¹−1 — necessary for divisibility, so a nonzero sample is a sound
  // rejection; the survivors still face exact division.
  bool vanishes_on(long a, long b, long c, std::vector<std::uint64_t>& px,
                   std::vector<std::uint64_t>& py) const {
    std::uint64_t am = intmod(a), cm = intmod(c);
    if (b != 0) {
      std::uint64_t binv = invmod(intmod(b));
      for (int k = 0; k <= degree; ++k) {
        std::uint64_t t = static_cast<std::uint64_t>(k + 1);
        std::uint64_t num = (mulmod(am, t) + cm) % kMod;
        std::uint64_t yv = mulmod(kMod - num, binv) % kMod;
        if (eval(t, yv, px, py) != 0) return false;
      }
      return true;
    }
    std::uint64_t x0 = mulmod(kMod - cm, invmod(am)) % kMod;
    for (int k = 0; k <= degree; ++k) {
      if (eval(x0, static_cast<std::uint64_t>(k + 1), px, py) != 0)
        return false;
    }
    return true;
  }
};

}  // namespace

std::vector<std::pair<Line, int>> find_linear_factors(const Polynomial& p,
                                                      int height_bound) {
  require_xy_only(p, "linear factor search");
  if (p.is_zero()) throw Error("linear factor search needs a nonzero curve");
  if (height_bound < 1)
    throw Error("linear factor search needs a positive height bound");
  TermOrder ord = lex_over(p);
  ModCurve probe(p.primitive(ord));
  std::vector<std::uint64_t> px(probe.degree + 1), py(probe.degree + 1);
  const bool has_x = p.vars().contains("x");
  const bool has_y = p.vars().contains("y");

  std::vector<std::pair<Line, int>> found;
  const long B = height_bound;
  for (long a = 0; a <= B; ++a) {
    for (long b = (a == 0 ? 1 : -B); b <= B; ++b) {
      for (long c = -B; c <= B; ++c) {
        long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
        if (g != 1) continue;
        if ((a != 0 && !has_x) || (b != 0 && !has_y)) continue;
        if (!probe.vanishes_on(a, b, c, px, py)) continue;
        Line line{Rational(a), Rational(b), Rational(c)};
        Polynomial divisor = line.as_polynomial(p.vars_ptr());
        int mult = 0;
        Polynomial cur = p;
        for (;;) {
          DivisionResult dr = divide(cur, {divisor}, ord);
          if (!dr.remainder.is_zero()) break;
          cur = dr.quotients[0];
          ++mult;
        }
        if (mult > 0) found.emplace_back(std::move(line), mult);
      }
    }
  }
  return found;
}

Point2 invert_point(const Point2& p, const InversionCircle& circle) {
  const Point2& o = circle.center();
  Rational dx = p.x - o.x, dy = p.y - o.y;
  Rational d2 = dx * dx + dy * dy;
  if (d2.is_zero())
    throw Error("the inversion center has no image");
  Rational s = circle.radius_squared() / d2;
  return {o.x + s * dx, o.y + s * dy};
}

Polynomial invert_curve(const Polynomial& p, const InversionCircle& circle,
                        int* stripped_out) {
  require_xy_only(p, "curve inversion");
  if (p.is_zero()) throw Error("curve inversion needs a nonzero curve");
  const auto& vars = p.vars_ptr();
  if (!vars->contains("x") || !vars->contains("y"))
    throw Error("curve inversion needs both x and y in the variable set");
  const std::size_t xi = vars->index_of("x"), yi = vars->index_of("y");
  const Point2& o = circle.center();
  const Rational& r2 = circle.radius_squared();

  Polynomial dx = Polynomial::variable(vars, "x") -
                  Polynomial::constant(vars, o.x);
  Polynomial dy = Polynomial::variable(vars, "y") -
                  Polynomial::constant(vars, o.y);
  Polynomial rho2 = dx * dx + dy * dy;
  // x → Ox + R²(x−Ox)/ρ² becomes, after clearing by ρ^(2·deg):
  // each x-power contributes (Ox·ρ² + R²(x−Ox)), each missing degree a ρ².
  Polynomial nx = rho2 * o.x + dx * r2;
  Polynomial ny = rho2 * o.y + dy * r2;

  const int n = p.degree();
  std::vector<Polynomial> powx(n + 1, Polynomial(vars));
  std::vector<Polynomial> powy(n + 1, Polynomial(vars));
  std::vector<Polynomial> powr(n + 1, Polynomial(vars));
  powx[0] = powy[0] = powr[0] = Polynomial::constant(vars, Rational(1));
  for (int i = 1; i <= n; ++i) {
    powx[i] = powx[i - 1] * nx;
    powy[i] = powy[i - 1] * ny;
    powr[i] = powr[i - 1] * rho2;
  }

  Polynomial image(vars);
  for (const auto& [m, c] : p.terms()) {
    int i = m.exp(xi), j = m.exp(yi);
    image += powx[i] * powy[j] * powr[n - i - j] * c;
  }

  TermOrder ord = lex_over(image);
  int stripped = 0;
  while (!image.is_zero()) {
    DivisionResult dr = divide(image, {rho2}, ord);
    if (!dr.remainder.is_zero()) break;
    image = dr.quotients[0];
    ++stripped;
  }
  if (image.is_zero() || image.is_constant())
    throw Error(
        "curve inversion degenerated: the curve is a power of the squared "
        "distance to the inversion center, so nothing remains after "
        "stripping");
  if (stripped_out) *stripped_out = stripped;
  return image.primitive(ord);
}

}  // namespace coupler
