#pragma once

#include <memory>
#include <span>
#include <vector>

#include "axcheck/formula.hpp"
#include "axcheck/model.hpp"
#include "axcheck/universe.hpp"

namespace axcheck {

// A core formula resolved against a universe and a list of free variables
// (signature entries first, then any extra bindings). Type domains for every
// quantifier are materialized at construction, so CapExceeded surfaces here.
// Evaluation is const and allocation-light; one instance may be shared across
// threads.
class CompiledFormula {
 public:
  CompiledFormula(const Universe& universe, const Formula& formula, const Signature& free);

  // `values` line up with the `free` list given at construction.
  bool evaluate(std::span<const Value> values) const;
  bool operator()(const ModelAssignment& model) const { return evaluate(model.values); }

 private:
  struct Program;
  std::shared_ptr<const Program> program_;
};

struct Binding {
  Variable variable;
  Value value;
};

// Tarski-style truth of `formula` under `model` (for `signature`) and extra
// bindings for remaining free variables.
bool eval(const Universe& universe, const Formula& formula, const Signature& signature,
          const ModelAssignment& model, std::span<const Binding> bindings = {});

// Conjunction of all axioms, compiled once.
class SystemEvaluator {
 public:
  SystemEvaluator(const Universe& universe, const AxiomSystem& system);
  bool operator()(const ModelAssignment& model) const;

 private:
  std::vector<CompiledFormula> axioms_;
};

bool satisfies(const Universe& universe, const AxiomSystem& system, const ModelAssignment& model);

}  // namespace axcheck
