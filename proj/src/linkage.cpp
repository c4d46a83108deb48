#include "coupler/linkage.hpp"

#include <json.hpp>
#include <set>

#include "coupler/error.hpp"
#include "linkage_internal.hpp"

namespace coupler {

using nlohmann::json;

namespace {

// Fresh coordinate letters; t, u are reserved for closure variables and
// x, y for the tracer.
constexpr std::string_view kLetters = "abcdefghijklmnopqrsvwz";

bool declared(const Linkage& l, const std::string& name) {
  for (const auto& [n, p] : l.anchors)
    if (n == name) return true;
  for (const auto& n : l.joints)
    if (n == name) return true;
  return false;
}

bool is_joint(const Linkage& l, const std::string& name) {
  for (const auto& n : l.joints)
    if (n == name) return true;
  return false;
}

void validate(const Linkage& l) {
  std::set<std::string> seen;
  for (const auto& [n, p] : l.anchors) {
    if (!valid_var_name(n)) throw Error("bad point name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate point '" + n + "'");
  }
  for (const auto& n : l.joints) {
    if (!valid_var_name(n)) throw Error("bad point name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate point '" + n + "'");
  }
  for (const auto& b : l.bars) {
    if (!declared(l, b.p) || !declared(l, b.q))
      throw Error("bar references undeclared point '" +
                  (declared(l, b.p) ? b.q : b.p) + "'");
    if (b.p == b.q) throw Error("bar joins '" + b.p + "' to itself");
    if (!(Rational(0) < b.length))
      throw Error("bar " + b.p + "-" + b.q + " has non-positive length");
  }
  std::set<std::string> lined;
  for (const auto& c : l.on_line) {
    if (!is_joint(l, c.p))
      throw Error("on_line constrains '" + c.p + "', which is not a joint");
    if (c.a == Rational(0) && c.b == Rational(0))
      throw Error("on_line coefficients for '" + c.p +
                  "' do not describe a line");
    if (!lined.insert(c.p).second)
      throw Error("joint '" + c.p + "' is bound to two lines; that pins it "
                  "to a point — declare an anchor instead");
  }
  if (l.tracer.empty()) throw Error("tracer is empty");
  Rational total(0);
  bool joint_seen = false;
  std::set<std::string> traced;
  for (const auto& [n, w] : l.tracer) {
    if (!declared(l, n))
      throw Error("tracer references undeclared point '" + n + "'");
    if (!traced.insert(n).second)
      throw Error("tracer lists '" + n + "' twice");
    total += w;
    joint_seen = joint_seen || is_joint(l, n);
  }
  if (total != Rational(1))
    throw Error("tracer coefficients sum to " + total.str() + ", not 1");
  if (!joint_seen) throw Error("tracer references no free joint");
  for (const auto& [p, q] : l.distinct) {
    if (!declared(l, p) || !declared(l, q))
      throw Error("distinct pair references undeclared point '" +
                  (declared(l, p) ? q : p) + "'");
    if (p == q) throw Error("distinct pair '" + p + "' with itself");
  }
}

}  // namespace

namespace detail {

CoordModel build_coords(const Linkage& l) {
  validate(l);
  CoordModel m;
  m.unit_tracer = l.tracer.size() == 1 && l.tracer[0].second == Rational(1) &&
                  is_joint(l, l.tracer[0].first);
  if (m.unit_tracer) m.traced_joint = l.tracer[0].first;

  std::vector<std::string> names;
  std::size_t next = 0;
  auto fresh = [&]() {
    if (next >= kLetters.size())
      throw Error("too many joints: the coordinate letters ran out");
    names.emplace_back(1, kLetters[next++]);
    return names.back();
  };

  m.joints.resize(l.joints.size());
  for (std::size_t i = 0; i < l.joints.size(); ++i) {
    JointCoords& jc = m.joints[i];
    const LineConstraint* line = nullptr;
    for (const auto& c : l.on_line)
      if (c.p == l.joints[i]) line = &c;
    if (m.unit_tracer && l.joints[i] == m.traced_joint) {
      if (line)
        throw Error("the traced joint '" + l.joints[i] +
                    "' cannot also be bound to a line");
      jc.kind = JointCoords::Kind::traced;
      jc.vars = {"x", "y"};
    } else if (line) {
      jc.kind = JointCoords::Kind::on_line;
      jc.vars = {fresh()};
      if (line->b != Rational(0)) {
        jc.base = {Rational(0), -line->c / line->b};
        jc.dir = {Rational(1), -line->a / line->b};
      } else {
        jc.base = {-line->c / line->a, Rational(0)};
        jc.dir = {Rational(0), Rational(1)};
      }
    } else {
      jc.kind = JointCoords::Kind::free_pair;
      jc.vars = {fresh(), fresh()};
    }
  }
  names.push_back("x");
  names.push_back("y");
  m.vars = VarSet::make(std::move(names));

  for (const auto& [n, p] : l.anchors)
    m.coords.emplace(n, std::pair{Polynomial::constant(m.vars, p.x),
                                  Polynomial::constant(m.vars, p.y)});
  for (std::size_t i = 0; i < l.joints.size(); ++i) {
    const JointCoords& jc = m.joints[i];
    std::pair<Polynomial, Polynomial> xy{Polynomial(m.vars),
                                         Polynomial(m.vars)};
    switch (jc.kind) {
      case JointCoords::Kind::free_pair:
      case JointCoords::Kind::traced:
        xy.first = Polynomial::variable(m.vars, jc.vars[0]);
        xy.second = Polynomial::variable(m.vars, jc.vars[1]);
        break;
      case JointCoords::Kind::on_line: {
        Polynomial s = Polynomial::variable(m.vars, jc.vars[0]);
        xy.first = Polynomial::constant(m.vars, jc.base.x) + s * jc.dir.x;
        xy.second = Polynomial::constant(m.vars, jc.base.y) + s * jc.dir.y;
        break;
      }
    }
    m.coords.emplace(l.joints[i], std::move(xy));
  }
  return m;
}

}  // namespace detail

namespace {

Rational rat(const json& j, const char* what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(std::string(what) + " must be a rational string");
}

Point2 point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw Error(std::string(what) + " must be a pair of rational strings");
  return {rat(j[0], what), rat(j[1], what)};
}

}  // namespace

Linkage parse_linkage(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed linkage JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("linkage JSON must be an object");
  Linkage l;
  if (j.contains("anchors")) {
    if (!j["anchors"].is_object())
      throw Error("'anchors' must map names to points");
    for (const auto& [name, val] : j["anchors"].items())
      l.anchors.emplace_back(name, point(val, "anchor position"));
  }
  if (j.contains("joints")) {
    if (!j["joints"].is_array()) throw Error("'joints' must be a name array");
    for (const auto& v : j["joints"]) {
      if (!v.is_string()) throw Error("'joints' must be a name array");
      l.joints.push_back(v.get<std::string>());
    }
  }
  if (j.contains("bars")) {
    if (!j["bars"].is_array()) throw Error("'bars' must be an array");
    for (const auto& b : j["bars"]) {
      if (!b.is_array() || b.size() != 3 || !b[0].is_string() ||
          !b[1].is_string())
        throw Error("each bar is [from, to, length]");
      l.bars.push_back({b[0].get<std::string>(), b[1].get<std::string>(),
                        rat(b[2], "bar length")});
    }
  }
  if (j.contains("on_line")) {
    if (!j["on_line"].is_array()) throw Error("'on_line' must be an array");
    for (const auto& c : j["on_line"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
          !c[1].is_array() || c[1].size() != 3)
        throw Error("each on_line entry is [joint, [a, b, c]]");
      l.on_line.push_back({c[0].get<std::string>(),
                           rat(c[1][0], "line coefficient"),
                           rat(c[1][1], "line coefficient"),
                           rat(c[1][2], "line coefficient")});
    }
  }
  if (!j.contains("tracer") || !j["tracer"].is_object())
    throw Error("linkage JSON needs a 'tracer' object");
  for (const auto& [name, val] : j["tracer"].items())
    l.tracer.emplace_back(name, rat(val, "tracer coefficient"));
  if (j.contains("distinct")) {
    if (!j["distinct"].is_array()) throw Error("'distinct' must be an array");
    for (const auto& d : j["distinct"]) {
      if (!d.is_array() || d.size() != 2 || !d[0].is_string() ||
          !d[1].is_string())
        throw Error("each distinct entry is a pair of point names");
      l.distinct.emplace_back(d[0].get<std::string>(),
                              d[1].get<std::string>());
    }
  }
  validate(l);
  return l;
}

PolySystem compile(const Linkage& l) {
  detail::CoordModel m = detail::build_coords(l);
  PolySystem sys;
  sys.vars = m.vars;
  for (const auto& b : l.bars) {
    const auto& [px, py] = m.coords.at(b.p);
    const auto& [qx, qy] = m.coords.at(b.q);
    Polynomial dx = px - qx, dy = py - qy;
    sys.equations.push_back(
        dx * dx + dy * dy -
        Polynomial::constant(m.vars, b.length * b.length));
  }
  if (!m.unit_tracer) {
    Polynomial tx = Polynomial::variable(m.vars, "x");
    Polynomial ty = Polynomial::variable(m.vars, "y");
    for (const auto& [n, w] : l.tracer) {
      tx -= m.coords.at(n).first * w;
      ty -= m.coords.at(n).second * w;
    }
    sys.equations.push_back(tx);
    sys.equations.push_back(ty);
  }
  if (l.distinct.empty()) return sys;
  std::vector<Polynomial> gaps;
  for (const auto& [p, q] : l.distinct) {
    const auto& [px, py] = m.coords.at(p);
    const auto& [qx, qy] = m.coords.at(q);
    Polynomial dx = px - qx, dy = py - qy;
    gaps.push_back(dx * dx + dy * dy);
  }
  return saturate(sys, gaps);
}

Polynomial coupler_curve(const Linkage& l) {
  PolySystem out = eliminate({compile(l), {"x", "y"}, std::nullopt});
  if (out.equations.empty())
    throw Error(
        "the coupler curve is the whole plane: degenerate configurations "
        "(coincident joints) sweep every point, so no equation in x, y "
        "survives elimination; add distinct pairs to rule them out");
  return out.equations.front();
}

namespace {

struct Scenario {
  const char* name;
  const char* text;
};

constexpr Scenario kScenarios[] = {
    {"cat-ladder", R"({
  "anchors": {},
  "joints": ["F", "T"],
  "bars": [["F", "T", "1"]],
  "on_line": [["F", ["0", "1", "0"]], ["T", ["1", "0", "0"]]],
  "tracer": {"F": "1/3", "T": "2/3"}
}
)"},
    {"chebyshev", R"({
  "anchors": {"A1": ["0", "0"], "A2": ["8", "0"]},
  "joints": ["J1", "J2"],
  "bars": [["A1", "J1", "10"], ["A2", "J2", "10"], ["J1", "J2", "4"]],
  "tracer": {"J1": "1/2", "J2": "1/2"}
}
)"},
    {"watt", R"({
  "anchors": {"A1": ["0", "0"], "A2": ["14", "0"]},
  "joints": ["J1", "J2"],
  "bars": [["A1", "J1", "10"], ["A2", "J2", "10"], ["J1", "J2", "6"]],
  "tracer": {"J1": "1/2", "J2": "1/2"}
}
)"},
    {"peaucellier", R"({
  "anchors": {"O": ["0", "0"], "B": ["4", "0"]},
  "joints": ["P1", "P2", "P3", "T"],
  "bars": [["B", "P3", "4"], ["P3", "P2", "5"], ["P2", "T", "5"],
           ["T", "P1", "5"], ["P1", "P3", "5"], ["O", "P1", "10"],
           ["O", "P2", "10"]],
  "tracer": {"T": "1"},
  "distinct": [["P3", "T"], ["P1", "P2"]]
}
)"},
    {"parallelogram", R"({
  "anchors": {"A1": ["0", "0"], "A2": ["8", "0"]},
  "joints": ["J1", "J2"],
  "bars": [["A1", "J1", "5"], ["A2", "J2", "5"], ["J1", "J2", "8"]],
  "tracer": {"J1": "1/2", "J2": "1/2"}
}
)"},
    {"rhombus-3circles", R"({
  "anchors": {"A1": ["0", "0"], "A2": ["4", "0"]},
  "joints": ["J1", "J2"],
  "bars": [["A1", "J1", "4"], ["A2", "J2", "4"], ["J1", "J2", "4"]],
  "tracer": {"J1": "1/2", "J2": "1/2"}
}
)"},
    {"hart-inversor", R"({
  "anchors": {"O": ["0", "0"], "E": ["-1", "0"]},
  "joints": ["A", "B", "C", "D", "P"],
  "bars": [["O", "A", "2"], ["O", "B", "2"], ["A", "B", "4"],
           ["A", "D", "2"], ["B", "C", "2"], ["C", "D", "4"],
           ["A", "P", "1"], ["D", "P", "1"], ["E", "P", "1"]],
  "tracer": {"B": "1/2", "C": "1/2"}
}
)"},
};

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kScenarios) v.push_back(s.name);
    return v;
  }();
  return names;
}

std::string scenario_text(const std::string& name) {
  for (const auto& s : kScenarios)
    if (name == s.name) return s.text;
  std::string msg = "unknown scenario '" + name + "'; available:";
  for (const auto& s : kScenarios) msg += std::string(" ") + s.name;
  throw Error(msg);
}

Linkage scenario(const std::string& name) {
  return parse_linkage(scenario_text(name));
}

}  // namespace coupler
