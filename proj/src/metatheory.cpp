#include "axcheck/metatheory.hpp"

#include <algorithm>
#include <map>

#include "axcheck/evaluator.hpp"
#include "axcheck/synthesis.hpp"

namespace axcheck {

bool IsoClassPredicate::holds(const Universe& universe, const ModelAssignment& m) const {
  return are_isomorphic(universe, signature, representative, m, mode).has_value();
}

const Evidence* Judgment::find(std::string_view label) const {
  for (const auto* list : {&witness, &counterexample}) {
    for (const auto& e : *list) {
      if (e.label == label) return &e;
    }
  }
  return nullptr;
}

bool is_iso_closed(const Universe& universe, const Signature& signature, IsoMode mode,
                   const std::function<bool(const ModelAssignment&)>& predicate) {
  const AdmissibleModels all(universe, signature);
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    const ModelAssignment m = all.at(i);
    const bool here = predicate(m);
    bool closed = true;
    for_each_correlator(universe, signature, m, mode, [&](const Correlator& c) {
      closed = predicate(lift(universe, c, signature, m)) == here;
      return closed;
    });
    if (!closed) return false;
  }
  return true;
}

Analysis::Analysis(const Universe& universe, const AxiomSystem& system, MetaOptions options)
    : universe_(universe), system_(system), options_(options) {}

const ModelSet& Analysis::models() const {
  std::lock_guard lock(mutex_);
  if (!models_) models_ = std::make_shared<const ModelSet>(models_of(universe_, system_, options_.enumeration));
  return *models_;
}

const FormalityChecker& Analysis::formality() const {
  std::lock_guard lock(mutex_);
  if (!formality_) {
    formality_ = std::make_shared<const FormalityChecker>(universe_, system_.signature, options_.mode);
  }
  return *formality_;
}

const std::vector<IsoClass>& Analysis::classes() const {
  const auto& ms = models();
  const auto& checker = formality();
  std::lock_guard lock(mutex_);
  if (!classes_) {
    std::vector<IsoClass> out;
    std::map<std::uint32_t, std::size_t> slot;
    for (const auto& m : ms.models) {
      const auto id = checker.class_of(checker.admissible().index_of(m));
      auto [it, fresh] = slot.emplace(id, out.size());
      if (fresh) out.push_back({m, {}});
      out[it->second].members.push_back(m);
    }
    classes_ = std::make_shared<const std::vector<IsoClass>>(std::move(out));
  }
  return *classes_;
}

const std::optional<Formula>& Analysis::synthesized() const {
  const auto& ms = models();
  const auto& checker = formality();
  std::lock_guard lock(mutex_);
  if (!synthesized_) {
    std::optional<Formula> found;
    if (!ms.empty()) {
      PureFormulaEnumerator candidates(system_.signature, options_.size_bound);
      candidates.for_each([&](const Formula& g) {
        const CompiledFormula compiled(universe_, g, system_.signature);
        bool some_true = false;
        bool some_false = false;
        for (const auto& m : ms.models) {
          (compiled(m) ? some_true : some_false) = true;
          if (some_true && some_false) break;
        }
        if (some_true && some_false && checker.check(compiled).formal) {
          found = g;
          return false;
        }
        return true;
      });
    }
    synthesized_ = std::make_shared<const std::optional<Formula>>(std::move(found));
  }
  return *synthesized_;
}

Judgment Analysis::make(std::string property) const {
  Judgment j;
  j.property = std::move(property);
  j.provenance = {universe_.base_size(), options_.mode, universe_.quantifier_cap(), options_.size_bound};
  return j;
}

void Analysis::check_signature(const Formula& g) const {
  for (const auto& name : free_variable_names(g)) {
    if (!find_variable(system_.signature, name)) {
      throw SignatureMismatch("free variable " + name + " is not a primitive sign of " + system_.name);
    }
  }
}

namespace {

PartitionSummary summarize(const ModelSet& models, const std::vector<IsoClass>& classes) {
  PartitionSummary s;
  s.model_count = models.size();
  for (const auto& c : classes) s.classes.emplace_back(c.representative, c.members.size());
  return s;
}

std::string count_note(std::size_t models, std::size_t classes) {
  return std::to_string(models) + " model(s) in " + std::to_string(classes) + " isomorphism class(es)";
}

}  // namespace

Judgment Analysis::satisfiable() const {
  auto j = make("satisfiable");
  const auto& ms = models();
  j.absolute = !ms.empty();
  if (j.absolute) {
    j.witness.push_back({"model", ms.models.front()});
    j.notes.push_back("k-satisfied: canonically least model exhibited");
  }
  j.notes.push_back(std::to_string(ms.size()) + " model(s)");
  return j;
}

Judgment Analysis::consequence(const Formula& g) const {
  check_signature(g);
  auto j = make("consequence");
  j.subject = g;
  const CompiledFormula compiled(universe_, g, system_.signature);
  const auto& ms = models();
  auto it = std::ranges::find_if(ms.models, [&](const ModelAssignment& m) { return !compiled(m); });
  j.absolute = it == ms.models.end();
  if (!j.absolute) j.counterexample.push_back({"model", *it});
  return j;
}

Judgment Analysis::carnap_inconsistent() const {
  auto j = make("carnap_inconsistent");
  const auto& ms = models();
  j.absolute = ms.empty();
  if (j.absolute) {
    j.witness.push_back({"h", Formula::truth()});
  } else {
    j.counterexample.push_back({"model", ms.models.front()});
  }
  j.notes.push_back("over the finite universe, inconsistency coincides with unsatisfiability");
  return j;
}

Judgment Analysis::monomorphic() const {
  auto j = make("monomorphic");
  const auto& ms = models();
  const auto& cs = classes();
  j.conjuncts = {{"satisfiable", !ms.empty()}, {"all models isomorphic", cs.size() <= 1}};
  j.absolute = cs.size() == 1;
  if (j.absolute) {
    j.witness.push_back({"model", ms.models.front()});
    j.witness.push_back({"partition", summarize(ms, cs)});
  } else if (cs.size() >= 2) {
    j.counterexample.push_back({"pair", ModelPair{cs[0].representative, cs[1].representative, std::nullopt}});
    j.counterexample.push_back({"partition", summarize(ms, cs)});
  } else {
    j.notes.push_back("not satisfiable, so the first conjunct fails");
  }
  j.notes.push_back(count_note(ms.size(), cs.size()));
  return j;
}

Judgment Analysis::forkable_at(const Formula& g) const {
  check_signature(g);
  auto j = make("forkable_at");
  j.subject = g;
  const CompiledFormula compiled(universe_, g, system_.signature);
  const auto& ms = models();
  std::optional<ModelAssignment> with_g;
  std::optional<ModelAssignment> without_g;
  for (const auto& m : ms.models) {
    auto& slot = compiled(m) ? with_g : without_g;
    if (!slot) slot = m;
  }
  const auto formal = formality().check(compiled);
  j.conjuncts = {{"f & g satisfiable", with_g.has_value()},
                 {"f & ~g satisfiable", without_g.has_value()},
                 {"g formal", formal.formal}};
  j.absolute = with_g && without_g && formal.formal;
  if (with_g) j.witness.push_back({"model_g", *with_g});
  if (without_g) j.witness.push_back({"model_not_g", *without_g});
  if (!formal.formal) {
    const auto& c = *formal.counterexample;
    j.counterexample.push_back({"formality", ModelPair{c.first, c.second, c.correlator}});
  } else {
    j.notes.push_back("g is constant on all " + std::to_string(formality().class_count()) +
                      " isomorphism classes of admissible models");
  }
  if (is_pure(g)) j.notes.push_back("g is syntactically pure");
  return j;
}

Judgment Analysis::forkable_semantic() const {
  auto j = make("forkable");
  const auto& ms = models();
  const auto& cs = classes();
  j.absolute = cs.size() >= 2;
  if (j.absolute) {
    j.witness.push_back({"h", IsoClassPredicate{system_.signature, cs[0].representative, options_.mode}});
    j.witness.push_back({"model_h", cs[0].representative});
    j.witness.push_back({"model_not_h", cs[1].representative});
  }
  j.notes.push_back("extensional reading: h ranges over isomorphism-closed classes of admissible models");
  j.notes.push_back(count_note(ms.size(), cs.size()));
  return j;
}

Judgment Analysis::forkable_syntactic() const {
  auto j = make("forkable_syntactic");
  const auto& g = synthesized();
  j.absolute = g.has_value();
  if (g) {
    j.witness.push_back({"g", *g});
  } else {
    j.notes.push_back("no forking formula up to size " + std::to_string(options_.size_bound));
  }
  j.notes.push_back("substitutional reading: g ranges over pure formulas up to the size bound");
  return j;
}

Judgment Analysis::decidable() const {
  auto j = make("decidable");
  const auto& ms = models();
  const auto& cs = classes();
  const auto& g = synthesized();
  j.absolute = cs.size() == 1;
  j.conjuncts = {{"satisfiable", !ms.empty()},
                 {"extensional: every formal class settled", cs.size() <= 1},
                 {"bounded syntactic: every pure formula settled", !g.has_value()}};
  if (j.absolute) {
    j.witness.push_back({"model", ms.models.front()});
  } else if (cs.size() >= 2) {
    j.counterexample.push_back({"undecided_h", IsoClassPredicate{system_.signature, cs[0].representative, options_.mode}});
    j.counterexample.push_back({"model_h", cs[0].representative});
    j.counterexample.push_back({"model_not_h", cs[1].representative});
  } else {
    j.notes.push_back("not satisfiable, so the first conjunct fails");
  }
  if (g) j.counterexample.push_back({"undecided_g", *g});
  j.notes.push_back("extensional reading coincides with monomorphic over the finite universe");
  j.notes.push_back("k-decidable: finite-universe-trivial (consequence is decided by enumeration)");
  return j;
}

Judgment Analysis::hilbert_complete() const {
  auto j = make("hilbert_complete");
  const auto& ms = models();
  const auto h = is_hilbert_complete(ms);
  j.absolute = h.complete;
  if (h.counterexample) {
    j.counterexample.push_back({"pair", ModelPair{h.counterexample->first, h.counterexample->second, std::nullopt}});
  }
  if (ms.empty()) j.notes.push_back("vacuously true: no models");
  return j;
}

Judgment Analysis::gabel() const {
  auto j = make("gabelbarkeitssatz");
  const auto& ms = models();
  const bool sat = !ms.empty();
  const bool mono = monomorphic().absolute;
  const auto fork = forkable_semantic();
  j.conjuncts = {{"satisfiable", sat}, {"monomorphic", mono}, {"forkable", fork.absolute}};
  if (mono != (sat && !fork.absolute)) {
    throw InvariantViolation("monomorphic and non-forkable disagree for " + system_.name);
  }
  j.absolute = true;
  if (fork.absolute) {
    const auto& h = std::get<IsoClassPredicate>(fork.find("h")->value);
    const auto& p = std::get<ModelAssignment>(fork.find("model_h")->value);
    const auto& q = std::get<ModelAssignment>(fork.find("model_not_h")->value);
    const bool formal = is_iso_closed(universe_, system_.signature, options_.mode,
                                      [&](const ModelAssignment& m) { return h.holds(universe_, m); });
    const bool replayed = formal && h.holds(universe_, p) && !h.holds(universe_, q);
    j.conjuncts.emplace_back("construction replayed", replayed);
    if (!replayed) throw InvariantViolation("isomorphism-class predicate does not fork " + system_.name);
    j.witness = fork.witness;
    j.notes.push_back("polymorphic and forkable: h = isomorphic to a model of one class");
  } else if (mono) {
    j.notes.push_back("monomorphic and not forkable");
  } else {
    j.notes.push_back("unsatisfiable: neither monomorphic nor forkable");
  }
  return j;
}

std::vector<Judgment> Analysis::all() const {
  return {satisfiable(), carnap_inconsistent(), monomorphic(), forkable_semantic(), forkable_syntactic(),
          decidable(),   hilbert_complete(),    gabel()};
}

bool Analysis::replay(const Judgment& j) const {
  const SystemEvaluator f(universe_, system_);
  auto model = [&](std::string_view label) -> const ModelAssignment* {
    const auto* e = j.find(label);
    return e ? std::get_if<ModelAssignment>(&e->value) : nullptr;
  };
  auto pair = [&](std::string_view label) -> const ModelPair* {
    const auto* e = j.find(label);
    return e ? std::get_if<ModelPair>(&e->value) : nullptr;
  };
  auto formula = [&](std::string_view label) -> const Formula* {
    const auto* e = j.find(label);
    return e ? std::get_if<Formula>(&e->value) : nullptr;
  };
  auto iso_pred = [&](std::string_view label) -> const IsoClassPredicate* {
    const auto* e = j.find(label);
    return e ? std::get_if<IsoClassPredicate>(&e->value) : nullptr;
  };
  auto admissible_model = [&](const ModelAssignment* m) {
    return m && is_admissible(universe_, system_.signature, *m) && f(*m);
  };
  auto forks = [&](const ModelAssignment* p, const ModelAssignment* q, const std::function<bool(const ModelAssignment&)>& h) {
    return admissible_model(p) && admissible_model(q) && h(*p) && !h(*q) &&
           is_iso_closed(universe_, system_.signature, options_.mode, h);
  };

  const auto& prop = j.property;
  if (prop == "satisfiable") {
    return j.absolute ? admissible_model(model("model")) : models().empty();
  }
  if (prop == "carnap_inconsistent") {
    return j.absolute ? models().empty() : admissible_model(model("model"));
  }
  if (prop == "consequence") {
    if (!j.subject) return false;
    if (j.absolute) return consequence(*j.subject).absolute;
    const auto* m = model("model");
    return admissible_model(m) && !eval(universe_, *j.subject, system_.signature, *m);
  }
  if (prop == "monomorphic") {
    if (j.absolute) {
      const auto* m = model("model");
      return admissible_model(m) && std::ranges::all_of(models().models, [&](const ModelAssignment& q) {
               return are_isomorphic(universe_, system_.signature, *m, q, options_.mode).has_value();
             });
    }
    if (const auto* p = pair("pair")) {
      return admissible_model(&p->first) && admissible_model(&p->second) &&
             !are_isomorphic(universe_, system_.signature, p->first, p->second, options_.mode);
    }
    return models().empty();
  }
  if (prop == "forkable_at") {
    if (!j.subject) return false;
    const CompiledFormula g(universe_, *j.subject, system_.signature);
    const auto* with_g = model("model_g");
    const auto* without_g = model("model_not_g");
    const bool ok1 = with_g ? admissible_model(with_g) && g(*with_g)
                            : std::ranges::none_of(models().models, [&](const auto& m) { return g(m); });
    const bool ok2 = without_g ? admissible_model(without_g) && !g(*without_g)
                               : std::ranges::all_of(models().models, [&](const auto& m) { return g(m); });
    const auto* p = pair("formality");
    const bool ok3 = p ? p->correlator &&
                             lift(universe_, *p->correlator, system_.signature, p->first) == p->second &&
                             g(p->first) != g(p->second)
                       : is_iso_closed(universe_, system_.signature, options_.mode,
                                       [&](const auto& m) { return g(m); });
    const bool verdict = with_g && without_g && !p;
    return ok1 && ok2 && ok3 && verdict == j.absolute;
  }
  if (prop == "forkable" || prop == "gabelbarkeitssatz") {
    const auto* h = iso_pred("h");
    if (!h) return prop == "forkable" ? classes().size() < 2 && !j.absolute : gabel().absolute == j.absolute;
    return j.absolute && forks(model("model_h"), model("model_not_h"),
                               [&](const ModelAssignment& m) { return h->holds(universe_, m); });
  }
  if (prop == "forkable_syntactic") {
    if (const auto* g = formula("g")) return j.absolute && forkable_at(*g).absolute;
    return !j.absolute && !synthesized().has_value();
  }
  if (prop == "decidable") {
    if (j.absolute) return monomorphic().absolute && !synthesized().has_value();
    if (const auto* h = iso_pred("undecided_h")) {
      return forks(model("model_h"), model("model_not_h"),
                   [&](const ModelAssignment& m) { return h->holds(universe_, m); });
    }
    if (const auto* g = formula("undecided_g")) return forkable_at(*g).absolute;
    return models().empty();
  }
  if (prop == "hilbert_complete") {
    if (j.absolute) return is_hilbert_complete(models()).complete;
    const auto* p = pair("pair");
    return p && admissible_model(&p->first) && admissible_model(&p->second) && p->first != p->second &&
           is_submodel(p->first, p->second);
  }
  return false;
}

Judgment is_satisfiable(const Universe& universe, const AxiomSystem& f) {
  return Analysis(universe, f).satisfiable();
}

Judgment is_consequence(const Universe& universe, const AxiomSystem& f, const Formula& g) {
  return Analysis(universe, f).consequence(g);
}

Judgment is_carnap_inconsistent(const Universe& universe, const AxiomSystem& f) {
  return Analysis(universe, f).carnap_inconsistent();
}

Judgment is_monomorphic(const Universe& universe, const AxiomSystem& f, IsoMode mode) {
  return Analysis(universe, f, {.mode = mode}).monomorphic();
}

Judgment is_forkable_at(const Universe& universe, const AxiomSystem& f, const Formula& g, IsoMode mode) {
  return Analysis(universe, f, {.mode = mode}).forkable_at(g);
}

Judgment is_forkable_semantic(const Universe& universe, const AxiomSystem& f, IsoMode mode) {
  return Analysis(universe, f, {.mode = mode}).forkable_semantic();
}

std::optional<Formula> synthesize_forking_formula(const Universe& universe, const AxiomSystem& f,
                                                  IsoMode mode, std::size_t size_bound) {
  return Analysis(universe, f, {.mode = mode, .size_bound = size_bound}).synthesized();
}

Judgment is_decidable(const Universe& universe, const AxiomSystem& f, IsoMode mode, std::size_t size_bound) {
  return Analysis(universe, f, {.mode = mode, .size_bound = size_bound}).decidable();
}

Judgment gabel_check(const Universe& universe, const AxiomSystem& f, IsoMode mode) {
  return Analysis(universe, f, {.mode = mode}).gabel();
}

bool replay_evidence(const Universe& universe, const AxiomSystem& f, const Judgment& judgment, IsoMode mode) {
  return Analysis(universe, f, {.mode = mode, .size_bound = judgment.provenance.size_bound}).replay(judgment);
}

}  // namespace axcheck
