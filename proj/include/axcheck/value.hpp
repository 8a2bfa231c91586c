#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>

namespace axcheck {

// An extensional value over a fixed universe. Individuals carry their index
// in the base domain; relation values carry their graph as a bitmask over the
// tuple space of their type (bit t set iff the t-th tuple, in lexicographic
// order of component indices, is in the relation). A Value does not carry its
// type; the surrounding signature or binder does.
class Value {
 public:
  constexpr Value() = default;

  static constexpr Value individual(std::uint32_t index) { return Value{true, index}; }
  static constexpr Value relation(std::uint64_t graph) { return Value{false, graph}; }

  constexpr bool is_individual() const noexcept { return individual_; }
  constexpr bool is_relation() const noexcept { return !individual_; }
  constexpr std::uint32_t index() const noexcept { return static_cast<std::uint32_t>(bits_); }
  constexpr std::uint64_t graph() const noexcept { return bits_; }
  constexpr int cardinality() const noexcept { return std::popcount(bits_); }

  friend constexpr bool operator==(Value, Value) = default;

  // Canonical order: individuals by index; relations by cardinality, then
  // lexicographically by their sorted tuple lists.
  friend constexpr std::strong_ordering operator<=>(Value a, Value b) {
    if (a.individual_ != b.individual_) return b.individual_ <=> a.individual_;
    if (a.individual_) return a.bits_ <=> b.bits_;
    if (auto c = a.cardinality() <=> b.cardinality(); c != 0) return c;
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  constexpr Value(bool individual, std::uint64_t bits) : individual_(individual), bits_(bits) {}

  bool individual_ = true;
  std::uint64_t bits_ = 0;
};

struct ValueHash {
  std::size_t operator()(Value v) const noexcept {
    return std::hash<std::uint64_t>{}(v.graph() * 2 + (v.is_individual() ? 1 : 0));
  }
};

}  // namespace axcheck
