#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "axcheck/formula.hpp"

namespace axcheck {

// Enumerates pure (literal-free) core formulas whose free variables are drawn
// from a signature, smallest first. Within one size the order is fixed by
// construction: atoms, negations, binary connectives, quantifiers.
//
// Canonicalization: operands of &, | and <-> appear in strict enumeration
// order; equalities relate distinct terms in order; ~~a is skipped; every
// quantifier binds a variable its body uses. Bound variables are named by
// depth (x1, x2, ... avoiding signature names) and range over `ind` plus the
// component types occurring inside the signature's types.
class PureFormulaEnumerator {
 public:
  PureFormulaEnumerator(Signature signature, std::size_t max_size);

  // Stops as soon as `visit` returns false; returns false in that case.
  bool for_each(const std::function<bool(const Formula&)>& visit) const;
  std::uint64_t count() const;
  std::uint64_t count_of_size(std::size_t size) const;

  const Signature& signature() const noexcept { return signature_; }
  std::size_t max_size() const noexcept { return max_size_; }
  const std::vector<SimpleType>& quantified_types() const noexcept { return quantified_types_; }

 private:
  struct Entry {
    Formula formula;
    std::uint64_t free_mask;  // bit d: bound variable at depth d occurs free
  };
  using Key = std::pair<std::vector<SimpleType>, std::size_t>;

  const std::vector<Entry>& formulas(const std::vector<SimpleType>& context, std::size_t size) const;
  std::vector<Entry> generate(const std::vector<SimpleType>& context, std::size_t size) const;

  Signature signature_;
  std::size_t max_size_;
  std::vector<SimpleType> quantified_types_;
  std::vector<std::string> bound_names_;
  mutable std::map<Key, std::vector<Entry>> memo_;
  mutable std::recursive_mutex mutex_;
};

}  // namespace axcheck
