#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axcheck/types.hpp"
#include "axcheck/value.hpp"

namespace axcheck {

inline constexpr std::uint64_t kDefaultQuantifierCap = 16;
// Widest tuple space a relation value can be represented over.
inline constexpr std::uint64_t kMaxTupleSpace = 64;
inline constexpr std::uint64_t kMaxQuantifierCap = 24;

// The fixed finite frame: n individuals plus the type domains built over
// them. Immutable after construction; type domains are materialized lazily
// behind a shared, synchronized cache, so copies are cheap and thread-safe.
class Universe {
 public:
  explicit Universe(std::uint32_t base_size,
                    std::uint64_t quantifier_cap = kDefaultQuantifierCap);

  std::uint32_t base_size() const noexcept { return base_size_; }
  std::uint64_t quantifier_cap() const noexcept { return cap_; }

  // |D_type|, or nullopt when it does not fit in 63 bits.
  std::optional<std::uint64_t> domain_size(const SimpleType& type) const;

  // Number of tuples of a relation type; throws CapExceeded when the graph
  // cannot be represented at all.
  std::uint64_t tuple_space(const SimpleType& rel) const;

  // All values of `type` in canonical order. Throws CapExceeded when the
  // type's tuple space exceeds the quantifier cap.
  const std::vector<Value>& type_domain(const SimpleType& type) const;

  // Position of `v` in type_domain(type), computed without materializing it.
  std::uint64_t index_of(const SimpleType& type, Value v) const;
  Value value_at(const SimpleType& type, std::uint64_t index) const;

  bool admits(const SimpleType& type, Value v) const;

  // Tuple position of a relation type from the canonical indices of its
  // components.
  std::uint64_t tuple_position(const SimpleType& rel,
                               std::span<const std::uint64_t> component_indices) const;
  std::vector<std::uint64_t> tuple_components(const SimpleType& rel,
                                              std::uint64_t position) const;

  // Structural view of a relation value: its tuples in canonical order.
  std::vector<std::vector<Value>> tuples(const SimpleType& rel, Value v) const;
  Value make_relation(const SimpleType& rel,
                      std::span<const std::vector<Value>> tuples) const;

  // Individuals occurring hereditarily anywhere inside `v`, sorted.
  std::vector<std::uint32_t> support(const SimpleType& type, Value v) const;

  std::string format(const SimpleType& type, Value v) const;

 private:
  struct Cache;

  std::uint32_t base_size_;
  std::uint64_t cap_;
  std::shared_ptr<Cache> cache_;
};

// Combinatorial rank/unrank of a subset of {0..width-1} in canonical
// (cardinality, then lexicographic) order.
std::uint64_t subset_rank(std::uint64_t mask, unsigned width);
std::uint64_t subset_unrank(std::uint64_t rank, unsigned width);

}  // namespace axcheck
