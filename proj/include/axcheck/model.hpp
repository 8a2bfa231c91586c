#pragma once

#include <compare>
#include <string>
#include <vector>

#include "axcheck/formula.hpp"
#include "axcheck/universe.hpp"
#include "axcheck/value.hpp"

namespace axcheck {

// One value per signature entry, in signature order.
struct ModelAssignment {
  std::vector<Value> values;

  friend bool operator==(const ModelAssignment&, const ModelAssignment&) = default;
  // Lexicographic over components, each in canonical value order.
  friend std::strong_ordering operator<=>(const ModelAssignment& a, const ModelAssignment& b) {
    return std::lexicographical_compare_three_way(a.values.begin(), a.values.end(),
                                                  b.values.begin(), b.values.end());
  }
};

bool is_admissible(const Universe& universe, const Signature& signature,
                   const ModelAssignment& model);
// Throws SignatureMismatch when the assignment does not fit the signature.
void require_admissible(const Universe& universe, const Signature& signature,
                        const ModelAssignment& model);

// "R={(0,1)}; S={0}"
std::string format_model(const Universe& universe, const Signature& signature,
                         const ModelAssignment& model);

}  // namespace axcheck
