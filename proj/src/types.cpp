#include "axcheck/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace axcheck {

SimpleType SimpleType::rel(std::vector<SimpleType> components) {
  if (components.empty()) {
    throw std::invalid_argument("relation type needs at least one component");
  }
  SimpleType t;
  t.components_ = std::move(components);
  return t;
}

std::string SimpleType::to_string() const {
  if (is_ind()) return "ind";
  std::string out = "rel(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ',';
    out += components_[i].to_string();
  }
  out += ')';
  return out;
}

std::strong_ordering operator<=>(const SimpleType& a, const SimpleType& b) {
  if (auto c = a.components_.size() <=> b.components_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    if (auto c = a.components_[i] <=> b.components_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

unsigned type_level(const SimpleType& type) {
  unsigned level = 0;
  for (const auto& c : type.components()) level = std::max(level, type_level(c));
  return type.is_ind() ? 0 : level + 1;
}

}  // namespace axcheck
