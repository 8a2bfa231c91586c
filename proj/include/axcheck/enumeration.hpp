#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "axcheck/formula.hpp"
#include "axcheck/model.hpp"
#include "axcheck/universe.hpp"

namespace axcheck {

struct EnumerationOptions {
  // Worker threads for filtering; results are merged back into canonical order.
  unsigned parallelism = 1;
};

// Random-access view of every admissible model of a signature: the cartesian
// product of the type domains, first component most significant, so index
// order is canonical model order.
class AdmissibleModels {
 public:
  AdmissibleModels(const Universe& universe, const Signature& signature);

  std::uint64_t size() const noexcept { return size_; }
  ModelAssignment at(std::uint64_t index) const;
  std::uint64_t index_of(const ModelAssignment& model) const;
  const Signature& signature() const noexcept { return signature_; }

 private:
  Signature signature_;
  std::vector<const std::vector<Value>*> domains_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
  Universe universe_;
};

std::vector<ModelAssignment> admissible_models(const Universe& universe, const Signature& signature);

// All models of a system, canonically ordered and duplicate free.
struct ModelSet {
  Signature signature;
  std::vector<ModelAssignment> models;

  bool empty() const noexcept { return models.empty(); }
  std::size_t size() const noexcept { return models.size(); }
  bool contains(const ModelAssignment& m) const;
};

ModelSet models_of(const Universe& universe, const AxiomSystem& system,
                   EnumerationOptions options = {});

// Componentwise: relation graphs by inclusion, individuals by equality.
bool is_submodel(const ModelAssignment& p, const ModelAssignment& q);

bool is_maximal(const Universe& universe, const AxiomSystem& system, const ModelAssignment& p);
bool is_minimal(const Universe& universe, const AxiomSystem& system, const ModelAssignment& p);
// Variants against a precomputed model set; `p` must belong to it.
bool is_maximal(const ModelSet& models, const ModelAssignment& p);
bool is_minimal(const ModelSet& models, const ModelAssignment& p);

struct HilbertCompleteness {
  bool complete = true;
  // A pair smaller ⊂ larger of distinct models when not complete.
  std::optional<std::pair<ModelAssignment, ModelAssignment>> counterexample;
};

HilbertCompleteness is_hilbert_complete(const ModelSet& models);
HilbertCompleteness is_hilbert_complete(const Universe& universe, const AxiomSystem& system);

}  // namespace axcheck
