#pragma once
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coupler {

// Ordered list of distinct variable names. Position doubles as default
// precedence: earlier = greater under the provided term orders. Shared
// immutably (via shared_ptr) by every polynomial built over it.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);  // validates names

  static std::shared_ptr<const VarSet> make(std::vector<std::string> names);
  static std::shared_ptr<const VarSet> make(
      std::initializer_list<const char*> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws if absent
  bool contains(std::string_view name) const { return find(name).has_value(); }

  bool operator==(const VarSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

// Letters, digits and '_', not starting with a digit.
bool valid_var_name(std::string_view name);

}  // namespace coupler
