#include "axcheck/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace axcheck {

std::string_view to_string(IsoMode mode) { return mode == IsoMode::carnap ? "carnap" : "tarski"; }

IsoMode parse_iso_mode(std::string_view text) {
  if (text == "carnap") return IsoMode::carnap;
  if (text == "tarski") return IsoMode::tarski;
  throw std::invalid_argument("mode must be carnap or tarski");
}

Correlator::Correlator(IsoMode mode, std::vector<std::optional<std::uint32_t>> image)
    : mode_(mode), image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (const auto& target : image_) {
    if (!target) continue;
    if (*target >= image_.size() || hit[*target]) {
      throw std::invalid_argument("correlator is not an injection on the base domain");
    }
    hit[*target] = true;
  }
}

Correlator Correlator::identity(IsoMode mode, std::uint32_t base_size) {
  std::vector<std::optional<std::uint32_t>> image(base_size);
  for (std::uint32_t i = 0; i < base_size; ++i) image[i] = i;
  return Correlator(mode, std::move(image));
}

std::optional<std::uint32_t> Correlator::operator()(std::uint32_t individual) const {
  return individual < image_.size() ? image_[individual] : std::nullopt;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Correlator::graph() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 0; i < image_.size(); ++i) {
    if (image_[i]) out.emplace_back(i, *image_[i]);
  }
  return out;
}

bool Correlator::is_total() const {
  return std::ranges::all_of(image_, [](const auto& t) { return t.has_value(); });
}

Correlator Correlator::inverse() const {
  std::vector<std::optional<std::uint32_t>> inv(image_.size());
  for (std::uint32_t i = 0; i < image_.size(); ++i) {
    if (image_[i]) inv[*image_[i]] = i;
  }
  return Correlator(mode_, std::move(inv));
}

Correlator Correlator::then(const Correlator& after) const {
  std::vector<std::optional<std::uint32_t>> out(image_.size());
  for (std::uint32_t i = 0; i < image_.size(); ++i) {
    if (image_[i]) out[i] = after(*image_[i]);
  }
  return Correlator(mode_, std::move(out));
}

namespace {

std::uint64_t lift_index(const Universe& universe, const Correlator& c, const SimpleType& type,
                         std::uint64_t index);

Value lift_value(const Universe& universe, const Correlator& c, const SimpleType& type, Value v) {
  if (type.is_ind()) {
    auto target = c(v.index());
    if (!target) {
      throw SupportNotCovered("individual " + std::to_string(v.index()) +
                              " is outside the correlator's domain");
    }
    return Value::individual(*target);
  }
  std::uint64_t graph = 0;
  for (std::uint64_t bits = v.graph(); bits; bits &= bits - 1) {
    auto components = universe.tuple_components(type, static_cast<std::uint64_t>(std::countr_zero(bits)));
    for (std::size_t i = 0; i < components.size(); ++i) {
      components[i] = lift_index(universe, c, type.component(i), components[i]);
    }
    graph |= std::uint64_t{1} << universe.tuple_position(type, components);
  }
  return Value::relation(graph);
}

std::uint64_t lift_index(const Universe& universe, const Correlator& c, const SimpleType& type,
                         std::uint64_t index) {
  if (type.is_ind()) return lift_value(universe, c, type, Value::individual(static_cast<std::uint32_t>(index))).index();
  return universe.index_of(type, lift_value(universe, c, type, universe.value_at(type, index)));
}

// Visits injections from `sources` into {0..n-1} in lexicographic order of
// their image sequence until `visit` returns true.
bool for_each_injection(std::uint32_t n, const std::vector<std::uint32_t>& sources,
                        const std::vector<std::uint32_t>& targets,
                        const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> chosen;
  std::vector<bool> used(n, false);
  std::function<bool()> step = [&]() -> bool {
    if (chosen.size() == sources.size()) return visit(chosen);
    for (auto t : targets) {
      if (used[t]) continue;
      used[t] = true;
      chosen.push_back(t);
      if (step()) return true;
      chosen.pop_back();
      used[t] = false;
    }
    return false;
  };
  return step();
}

Correlator make_correlator(IsoMode mode, std::uint32_t n, const std::vector<std::uint32_t>& sources,
                           const std::vector<std::uint32_t>& images) {
  std::vector<std::optional<std::uint32_t>> image(n);
  for (std::size_t i = 0; i < sources.size(); ++i) image[sources[i]] = images[i];
  return Correlator(mode, std::move(image));
}

}  // namespace

Value lift(const Universe& universe, const Correlator& c, const SimpleType& type, Value v) {
  return lift_value(universe, c, type, v);
}

ModelAssignment lift(const Universe& universe, const Correlator& c, const Signature& signature,
                     const ModelAssignment& model) {
  if (model.values.size() != signature.size()) throw SignatureMismatch("model does not fit signature");
  ModelAssignment out;
  out.values.reserve(model.values.size());
  for (std::size_t i = 0; i < signature.size(); ++i) {
    out.values.push_back(lift_value(universe, c, signature[i].type, model.values[i]));
  }
  return out;
}

std::vector<std::uint32_t> model_support(const Universe& universe, const Signature& signature,
                                         const ModelAssignment& model) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < signature.size(); ++i) {
    for (auto x : universe.support(signature[i].type, model.values[i])) out.push_back(x);
  }
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void for_each_correlator(const Universe& universe, const Signature& signature,
                         const ModelAssignment& source, IsoMode mode,
                         const std::function<bool(const Correlator&)>& visit) {
  const std::uint32_t n = universe.base_size();
  std::vector<std::uint32_t> everyone(n);
  std::iota(everyone.begin(), everyone.end(), 0U);
  const auto sources = mode == IsoMode::tarski ? everyone : model_support(universe, signature, source);
  for_each_injection(n, sources, everyone, [&](const std::vector<std::uint32_t>& images) {
    return !visit(make_correlator(mode, n, sources, images));
  });
}

std::optional<Correlator> are_isomorphic(const Universe& universe, const Signature& signature,
                                         const ModelAssignment& p, const ModelAssignment& q,
                                         IsoMode mode) {
  require_admissible(universe, signature, p);
  require_admissible(universe, signature, q);
  for (std::size_t i = 0; i < signature.size(); ++i) {
    if (p.values[i].is_relation() && p.values[i].cardinality() != q.values[i].cardinality()) {
      return std::nullopt;
    }
  }
  const std::uint32_t n = universe.base_size();
  std::vector<std::uint32_t> sources;
  std::vector<std::uint32_t> targets;
  if (mode == IsoMode::tarski) {
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), 0U);
    targets = sources;
  } else {
    sources = model_support(universe, signature, p);
    targets = model_support(universe, signature, q);
    if (sources.size() != targets.size()) return std::nullopt;
  }
  std::optional<Correlator> found;
  for_each_injection(n, sources, targets, [&](const std::vector<std::uint32_t>& images) {
    Correlator c = make_correlator(mode, n, sources, images);
    if (lift(universe, c, signature, p) == q) {
      found = std::move(c);
      return true;
    }
    return false;
  });
  return found;
}

std::vector<IsoClass> iso_classes(const Universe& universe, const Signature& signature,
                                  const std::vector<ModelAssignment>& models, IsoMode mode) {
  std::vector<ModelAssignment> sorted = models;
  std::ranges::sort(sorted);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<IsoClass> classes;
  for (const auto& m : sorted) {
    auto it = std::ranges::find_if(classes, [&](const IsoClass& c) {
      return are_isomorphic(universe, signature, c.representative, m, mode).has_value();
    });
    if (it == classes.end()) {
      classes.push_back({m, {m}});
    } else {
      it->members.push_back(m);
    }
  }
  return classes;
}

FormalityChecker::FormalityChecker(const Universe& universe, const Signature& signature, IsoMode mode)
    : universe_(universe), signature_(signature), mode_(mode), admissible_(universe, signature) {
  constexpr auto kUnassigned = UINT32_MAX;
  class_of_.assign(admissible_.size(), kUnassigned);
  const std::uint32_t n = universe.base_size();
  std::vector<std::uint32_t> everyone(n);
  std::iota(everyone.begin(), everyone.end(), 0U);
  for (std::uint64_t i = 0; i < admissible_.size(); ++i) {
    if (class_of_[i] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(representatives_.size());
    representatives_.push_back(i);
    const ModelAssignment p = admissible_.at(i);
    const auto sources = mode == IsoMode::tarski ? everyone : model_support(universe, signature, p);
    for_each_injection(n, sources, everyone, [&](const std::vector<std::uint32_t>& images) {
      const auto q = lift(universe, make_correlator(mode, n, sources, images), signature, p);
      class_of_[admissible_.index_of(q)] = id;
      return false;
    });
  }
}

FormalityVerdict FormalityChecker::check(const Formula& g) const {
  return check(CompiledFormula(universe_, g, signature_));
}

FormalityVerdict FormalityChecker::check(const CompiledFormula& g) const {
  std::vector<std::int8_t> class_truth(representatives_.size(), -1);
  std::vector<std::uint8_t> truth(admissible_.size());
  for (std::uint64_t i = 0; i < admissible_.size(); ++i) {
    const ModelAssignment m = admissible_.at(i);
    const bool holds = g(m);
    auto& expected = class_truth[class_of_[i]];
    if (expected < 0) {
      expected = holds ? 1 : 0;
      continue;
    }
    if ((expected == 1) != holds) {
      const ModelAssignment rep = admissible_.at(representatives_[class_of_[i]]);
      auto c = are_isomorphic(universe_, signature_, rep, m, mode_);
      if (!c) throw InvariantViolation("orbit member is not isomorphic to its representative");
      return {false, IsomorphicPair{rep, m, *c}};
    }
  }
  return {};
}

FormalityVerdict is_formal_semantic(const Universe& universe, const Formula& g,
                                    const Signature& signature, IsoMode mode) {
  free_variables(g, signature);
  return FormalityChecker(universe, signature, mode).check(g);
}

bool is_formal_syntactic(const Formula& g) { return is_pure(g); }

}  // namespace axcheck
