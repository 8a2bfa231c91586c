#include "axcheck/enumeration.hpp"

#include <stdexcept>
#include <algorithm>
#include <thread>

#include "axcheck/evaluator.hpp"

namespace axcheck {

AdmissibleModels::AdmissibleModels(const Universe& universe, const Signature& signature)
    : signature_(signature), universe_(universe) {
  for (const auto& v : signature) domains_.push_back(&universe.type_domain(v.type));
  strides_.assign(signature.size(), 1);
  for (std::size_t i = signature.size(); i-- > 0;) {
    strides_[i] = size_;
    const std::uint64_t d = domains_[i]->size();
    if (size_ > (std::uint64_t{1} << 62) / d) {
      throw CapExceeded("signature product", UINT64_MAX, std::uint64_t{1} << 62);
    }
    size_ *= d;
  }
}

ModelAssignment AdmissibleModels::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("admissible model index out of range");
  ModelAssignment m;
  m.values.reserve(domains_.size());
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    m.values.push_back((*domains_[i])[index / strides_[i]]);
    index %= strides_[i];
  }
  return m;
}

std::uint64_t AdmissibleModels::index_of(const ModelAssignment& model) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    index += strides_[i] * universe_.index_of(signature_[i].type, model.values[i]);
  }
  return index;
}

std::vector<ModelAssignment> admissible_models(const Universe& universe, const Signature& signature) {
  AdmissibleModels all(universe, signature);
  std::vector<ModelAssignment> out;
  out.reserve(all.size());
  for (std::uint64_t i = 0; i < all.size(); ++i) out.push_back(all.at(i));
  return out;
}

bool ModelSet::contains(const ModelAssignment& m) const {
  return std::binary_search(models.begin(), models.end(), m);
}

ModelSet models_of(const Universe& universe, const AxiomSystem& system, EnumerationOptions options) {
  AdmissibleModels all(universe, system.signature);
  const SystemEvaluator satisfied(universe, system);
  const unsigned workers = std::max(1U, options.parallelism);
  const std::uint64_t total = all.size();
  std::vector<std::vector<ModelAssignment>> chunks(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    for (std::uint64_t i = begin; i < end; ++i) {
      auto m = all.at(i);
      if (satisfied(m)) chunks[w].push_back(std::move(m));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  ModelSet out{system.signature, {}};
  for (auto& c : chunks) {
    for (auto& m : c) out.models.push_back(std::move(m));
  }
  return out;
}

bool is_submodel(const ModelAssignment& p, const ModelAssignment& q) {
  if (p.values.size() != q.values.size()) throw SignatureMismatch("models of different signatures");
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    const Value a = p.values[i];
    const Value b = q.values[i];
    if (a.is_individual() != b.is_individual()) {
      throw SignatureMismatch("component " + std::to_string(i) + " differs in kind");
    }
    if (a.is_individual() ? a != b : (a.graph() & ~b.graph()) != 0) return false;
  }
  return true;
}

namespace {

void require_member(const ModelSet& models, const ModelAssignment& p) {
  if (!models.contains(p)) throw NotAModel("assignment is not a model of the system");
}

}  // namespace

bool is_maximal(const ModelSet& models, const ModelAssignment& p) {
  require_member(models, p);
  return std::ranges::none_of(models.models, [&](const ModelAssignment& q) {
    return q != p && is_submodel(p, q);
  });
}

bool is_minimal(const ModelSet& models, const ModelAssignment& p) {
  require_member(models, p);
  return std::ranges::none_of(models.models, [&](const ModelAssignment& q) {
    return q != p && is_submodel(q, p);
  });
}

bool is_maximal(const Universe& universe, const AxiomSystem& system, const ModelAssignment& p) {
  require_admissible(universe, system.signature, p);
  if (!satisfies(universe, system, p)) throw NotAModel("assignment is not a model of the system");
  return is_maximal(models_of(universe, system), p);
}

bool is_minimal(const Universe& universe, const AxiomSystem& system, const ModelAssignment& p) {
  require_admissible(universe, system.signature, p);
  if (!satisfies(universe, system, p)) throw NotAModel("assignment is not a model of the system");
  return is_minimal(models_of(universe, system), p);
}

HilbertCompleteness is_hilbert_complete(const ModelSet& models) {
  // First non-maximal model, paired with its greatest proper extension.
  for (const auto& p : models.models) {
    for (auto q = models.models.rbegin(); q != models.models.rend(); ++q) {
      if (*q != p && is_submodel(p, *q)) return {false, std::pair{p, *q}};
    }
  }
  return {};
}

HilbertCompleteness is_hilbert_complete(const Universe& universe, const AxiomSystem& system) {
  return is_hilbert_complete(models_of(universe, system));
}

}  // namespace axcheck
