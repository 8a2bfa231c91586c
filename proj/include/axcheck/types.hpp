#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace axcheck {

// A simple, non-cumulative type: either `ind` or a relation among component
// types. Sets are unary relations.
class SimpleType {
 public:
  SimpleType() = default;

  static SimpleType ind() { return SimpleType{}; }
  static SimpleType rel(std::vector<SimpleType> components);
  static SimpleType set(SimpleType element) { return rel({std::move(element)}); }

  bool is_ind() const noexcept { return components_.empty(); }
  bool is_rel() const noexcept { return !components_.empty(); }
  std::size_t arity() const noexcept { return components_.size(); }
  std::span<const SimpleType> components() const noexcept { return components_; }
  const SimpleType& component(std::size_t i) const { return components_.at(i); }

  std::string to_string() const;

  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.components_ == b.components_;
  }
  friend std::strong_ordering operator<=>(const SimpleType& a, const SimpleType& b);

 private:
  std::vector<SimpleType> components_;
};

unsigned type_level(const SimpleType& type);

}  // namespace axcheck
