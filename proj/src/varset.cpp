#include "coupler/varset.hpp"

#include <cctype>

#include "coupler/error.hpp"

namespace coupler {

bool valid_var_name(std::string_view name) {
  if (name.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_var_name(names_[i]))
      throw Error("invalid variable name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j])
        throw Error("duplicate variable name '" + names_[i] + "'");
    }
  }
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

std::shared_ptr<const VarSet> VarSet::make(
    std::initializer_list<const char*> names) {
  std::vector<std::string> v;
  v.reserve(names.size());
  for (const char* n : names) v.emplace_back(n);
  return make(std::move(v));
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarSet::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw Error("unknown variable '" + std::string(name) + "'");
  return *i;
}

}  // namespace coupler
