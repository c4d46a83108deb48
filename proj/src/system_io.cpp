#include <json.hpp>

#include "coupler/error.hpp"
#include "coupler/groebner.hpp"

namespace coupler {

using nlohmann::json;

PolySystem system_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed system JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vars") || !j.contains("equations"))
    throw Error("system JSON needs 'vars' and 'equations'");
  if (!j["vars"].is_array()) throw Error("'vars' must be an array of names");
  std::vector<std::string> names;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw Error("'vars' must be an array of names");
    names.push_back(v.get<std::string>());
  }
  PolySystem sys;
  sys.vars = VarSet::make(std::move(names));
  if (!j["equations"].is_array())
    throw Error("'equations' must be an array of polynomial strings");
  for (const auto& e : j["equations"]) {
    if (!e.is_string())
      throw Error("'equations' must be an array of polynomial strings");
    sys.equations.push_back(parse_polynomial(e.get<std::string>(), sys.vars));
  }
  if (j.contains("aux")) {
    if (!j["aux"].is_array()) throw Error("'aux' must be an array of names");
    for (const auto& a : j["aux"]) {
      if (!a.is_string()) throw Error("'aux' must be an array of names");
      std::string n = a.get<std::string>();
      if (!sys.vars->contains(n))
        throw Error("aux variable '" + n + "' is not in 'vars'");
      sys.aux.push_back(std::move(n));
    }
  }
  return sys;
}

std::string system_to_json(const PolySystem& sys) {
  json j;
  j["vars"] = sys.vars->names();
  json eqs = json::array();
  for (const auto& e : sys.equations) eqs.push_back(to_text(e));
  j["equations"] = std::move(eqs);
  if (!sys.aux.empty()) j["aux"] = sys.aux;
  return j.dump(2) + "\n";
}

}  // namespace coupler
