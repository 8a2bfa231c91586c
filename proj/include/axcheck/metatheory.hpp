#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "axcheck/enumeration.hpp"
#include "axcheck/formula.hpp"
#include "axcheck/isomorphism.hpp"
#include "axcheck/model.hpp"
#include "axcheck/universe.hpp"

namespace axcheck {

struct ModelPair {
  ModelAssignment first;
  ModelAssignment second;
  std::optional<Correlator> correlator;  // present when the pair is isomorphic
};

// The extensional property "isomorphic to the representative"; closed under
// isomorphism by construction.
struct IsoClassPredicate {
  Signature signature;
  ModelAssignment representative;
  IsoMode mode = IsoMode::tarski;

  bool holds(const Universe& universe, const ModelAssignment& m) const;
};

struct PartitionSummary {
  std::uint64_t model_count = 0;
  // Canonical representative and class size, ordered by representative.
  std::vector<std::pair<ModelAssignment, std::uint64_t>> classes;
};

using EvidenceValue = std::variant<ModelAssignment, ModelPair, Formula, IsoClassPredicate, PartitionSummary>;

struct Evidence {
  std::string label;
  EvidenceValue value;
};

struct Provenance {
  std::uint32_t n = 0;
  IsoMode mode = IsoMode::tarski;
  std::uint64_t cap = 0;
  std::size_t size_bound = 0;
};

// An absolute verdict from exhaustive enumeration plus optional constructive
// evidence that replays to the same verdict.
struct Judgment {
  std::string property;
  bool absolute = false;
  std::vector<Evidence> witness;
  std::vector<Evidence> counterexample;
  std::vector<std::pair<std::string, bool>> conjuncts;
  std::vector<std::string> notes;
  Provenance provenance;
  std::optional<Formula> subject;

  bool constructive() const noexcept { return !witness.empty(); }
  const Evidence* find(std::string_view label) const;
};

struct MetaOptions {
  IsoMode mode = IsoMode::tarski;
  std::size_t size_bound = 9;
  EnumerationOptions enumeration;
};

// Caches the model set and isomorphism partition of one system in one
// universe. Lazily initialized; safe for concurrent use.
class Analysis {
 public:
  Analysis(const Universe& universe, const AxiomSystem& system, MetaOptions options = {});

  const Universe& universe() const noexcept { return universe_; }
  const AxiomSystem& system() const noexcept { return system_; }
  const MetaOptions& options() const noexcept { return options_; }

  const ModelSet& models() const;
  const FormalityChecker& formality() const;
  // Isomorphism classes of the models, ordered by representative.
  const std::vector<IsoClass>& classes() const;
  // Least pure formula (by the enumerator's order) at which the system forks.
  const std::optional<Formula>& synthesized() const;

  Judgment satisfiable() const;
  Judgment consequence(const Formula& g) const;
  Judgment carnap_inconsistent() const;
  Judgment monomorphic() const;
  Judgment forkable_at(const Formula& g) const;
  Judgment forkable_semantic() const;
  Judgment forkable_syntactic() const;
  Judgment decidable() const;
  Judgment hilbert_complete() const;
  // Throws InvariantViolation when monomorphic ⟺ (satisfiable ∧ ¬forkable) fails.
  Judgment gabel() const;

  // Everything `axcheck meta` reports, in a fixed order.
  std::vector<Judgment> all() const;

  // Re-derives the verdict from the judgment's evidence.
  bool replay(const Judgment& judgment) const;

 private:
  Judgment make(std::string property) const;
  void check_signature(const Formula& g) const;

  Universe universe_;
  AxiomSystem system_;
  MetaOptions options_;

  mutable std::mutex mutex_;
  mutable std::shared_ptr<const ModelSet> models_;
  mutable std::shared_ptr<const FormalityChecker> formality_;
  mutable std::shared_ptr<const std::vector<IsoClass>> classes_;
  mutable std::shared_ptr<const std::optional<Formula>> synthesized_;
};

Judgment is_satisfiable(const Universe& universe, const AxiomSystem& f);
Judgment is_consequence(const Universe& universe, const AxiomSystem& f, const Formula& g);
Judgment is_carnap_inconsistent(const Universe& universe, const AxiomSystem& f);
Judgment is_monomorphic(const Universe& universe, const AxiomSystem& f, IsoMode mode);
Judgment is_forkable_at(const Universe& universe, const AxiomSystem& f, const Formula& g, IsoMode mode);
Judgment is_forkable_semantic(const Universe& universe, const AxiomSystem& f, IsoMode mode);
std::optional<Formula> synthesize_forking_formula(const Universe& universe, const AxiomSystem& f,
                                                  IsoMode mode, std::size_t size_bound);
Judgment is_decidable(const Universe& universe, const AxiomSystem& f, IsoMode mode,
                      std::size_t size_bound = 9);
Judgment gabel_check(const Universe& universe, const AxiomSystem& f, IsoMode mode);
bool replay_evidence(const Universe& universe, const AxiomSystem& f, const Judgment& judgment,
                     IsoMode mode = IsoMode::tarski);

// Direct check that a model predicate is closed under every correlator of the
// mode, over all admissible models of the signature.
bool is_iso_closed(const Universe& universe, const Signature& signature, IsoMode mode,
                   const std::function<bool(const ModelAssignment&)>& predicate);

}  // namespace axcheck
