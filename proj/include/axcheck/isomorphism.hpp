#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "axcheck/enumeration.hpp"
#include "axcheck/evaluator.hpp"
#include "axcheck/formula.hpp"
#include "axcheck/model.hpp"
#include "axcheck/universe.hpp"

namespace axcheck {

// tarski: the correlator is a bijection of the whole base domain.
// carnap: a bijection between the individuals the two models actually use.
enum class IsoMode { carnap, tarski };

std::string_view to_string(IsoMode mode);
IsoMode parse_iso_mode(std::string_view text);  // throws std::invalid_argument

// A (possibly partial) injective map on base individuals, lifted
// hereditarily through the types.
class Correlator {
 public:
  // image[i] is the target of individual i, or nullopt when i is outside the
  // correlator's domain. Throws std::invalid_argument unless injective.
  Correlator(IsoMode mode, std::vector<std::optional<std::uint32_t>> image);

  static Correlator identity(IsoMode mode, std::uint32_t base_size);

  IsoMode mode() const noexcept { return mode_; }
  std::optional<std::uint32_t> operator()(std::uint32_t individual) const;
  const std::vector<std::optional<std::uint32_t>>& image() const noexcept { return image_; }
  // Sorted (source, target) pairs.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> graph() const;
  bool is_total() const;

  Correlator inverse() const;
  // x ↦ after(this(x)).
  Correlator then(const Correlator& after) const;

  friend bool operator==(const Correlator&, const Correlator&) = default;

 private:
  IsoMode mode_;
  std::vector<std::optional<std::uint32_t>> image_;
};

// Throws SupportNotCovered when `v` mentions an individual outside the
// correlator's domain.
Value lift(const Universe& universe, const Correlator& c, const SimpleType& type, Value v);
ModelAssignment lift(const Universe& universe, const Correlator& c, const Signature& signature,
                     const ModelAssignment& model);

// Hereditary individuals used anywhere in the model, sorted.
std::vector<std::uint32_t> model_support(const Universe& universe, const Signature& signature,
                                         const ModelAssignment& model);

// Every correlator applicable to `source` (tarski: all permutations; carnap:
// all injections of its support), in lexicographic order of the graph.
// Stops when `visit` returns false.
void for_each_correlator(const Universe& universe, const Signature& signature,
                         const ModelAssignment& source, IsoMode mode,
                         const std::function<bool(const Correlator&)>& visit);

// First correlator (in lexicographic order of its graph) lifting p onto q.
std::optional<Correlator> are_isomorphic(const Universe& universe, const Signature& signature,
                                         const ModelAssignment& p, const ModelAssignment& q,
                                         IsoMode mode);

struct IsoClass {
  ModelAssignment representative;  // canonically least member
  std::vector<ModelAssignment> members;
};

// Partition of `models` into isomorphism classes, ordered by representative.
std::vector<IsoClass> iso_classes(const Universe& universe, const Signature& signature,
                                  const std::vector<ModelAssignment>& models, IsoMode mode);

struct IsomorphicPair {
  ModelAssignment first;
  ModelAssignment second;
  Correlator correlator;  // lifts first onto second
};

struct FormalityVerdict {
  bool formal = true;
  // Isomorphic admissible models on which the formula disagrees.
  std::optional<IsomorphicPair> counterexample;
};

// Isomorphism classes of all admissible models of a signature, computed once
// as orbits so many formulas can be checked for formality against it.
class FormalityChecker {
 public:
  FormalityChecker(const Universe& universe, const Signature& signature, IsoMode mode);

  FormalityVerdict check(const Formula& g) const;
  FormalityVerdict check(const CompiledFormula& g) const;

  std::size_t class_count() const noexcept { return representatives_.size(); }
  const AdmissibleModels& admissible() const noexcept { return admissible_; }
  std::uint32_t class_of(std::uint64_t admissible_index) const { return class_of_[admissible_index]; }
  IsoMode mode() const noexcept { return mode_; }

 private:
  Universe universe_;
  Signature signature_;
  IsoMode mode_;
  AdmissibleModels admissible_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint64_t> representatives_;
};

FormalityVerdict is_formal_semantic(const Universe& universe, const Formula& g,
                                    const Signature& signature, IsoMode mode);

// Sound but incomplete: no Grunddisziplin constants occur in g.
bool is_formal_syntactic(const Formula& g);

}  // namespace axcheck
