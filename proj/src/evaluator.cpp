#include "axcheck/evaluator.hpp"

#include <algorithm>
#include <optional>

namespace axcheck {

namespace {

enum class Op {
  truth,
  falsity,
  apply,
  equal,
  negation,
  conjunction,
  disjunction,
  implication,
  equivalence,
  forall,
  exists,
  exists_unique,
};

// A term is either a slot in the environment or a constant individual.
struct Operand {
  bool is_slot = true;
  std::uint32_t slot = 0;
  Value constant;
  std::uint64_t constant_index = 0;
};

struct Instruction {
  Op op = Op::truth;
  std::uint32_t lhs = 0;  // child instructions
  std::uint32_t rhs = 0;
  std::uint32_t slot = 0;  // quantifier binding slot or apply head slot
  const std::vector<Value>* domain = nullptr;
  std::vector<Operand> operands;      // apply arguments, or the two sides of an equality
  std::vector<std::uint64_t> strides;  // tuple position weights for apply
};

struct Environment {
  std::vector<Value> values;
  std::vector<std::uint64_t> indices;
};

}  // namespace

struct CompiledFormula::Program {
  std::vector<Instruction> code;
  std::uint32_t root = 0;
  std::uint32_t slots = 0;
  Signature free;
  std::optional<Universe> universe;
  std::vector<bool> index_needed;  // free slots whose canonical index is read

  bool run(std::uint32_t at, Environment& env) const {
    const Instruction& in = code[at];
    switch (in.op) {
      case Op::truth:
        return true;
      case Op::falsity:
        return false;
      case Op::apply: {
        std::uint64_t position = 0;
        for (std::size_t i = 0; i < in.operands.size(); ++i) {
          const Operand& o = in.operands[i];
          position += in.strides[i] * (o.is_slot ? env.indices[o.slot] : o.constant_index);
        }
        return (env.values[in.slot].graph() >> position) & 1U;
      }
      case Op::equal: {
        const Operand& a = in.operands[0];
        const Operand& b = in.operands[1];
        return (a.is_slot ? env.values[a.slot] : a.constant) ==
               (b.is_slot ? env.values[b.slot] : b.constant);
      }
      case Op::negation:
        return !run(in.lhs, env);
      case Op::conjunction:
        return run(in.lhs, env) && run(in.rhs, env);
      case Op::disjunction:
        return run(in.lhs, env) || run(in.rhs, env);
      case Op::implication:
        return !run(in.lhs, env) || run(in.rhs, env);
      case Op::equivalence:
        return run(in.lhs, env) == run(in.rhs, env);
      case Op::forall:
      case Op::exists:
      case Op::exists_unique: {
        const auto& domain = *in.domain;
        std::size_t witnesses = 0;
        for (std::size_t i = 0; i < domain.size(); ++i) {
          env.values[in.slot] = domain[i];
          env.indices[in.slot] = i;
          const bool holds = run(in.lhs, env);
          if (in.op == Op::forall && !holds) return false;
          if (in.op == Op::exists && holds) return true;
          if (in.op == Op::exists_unique && holds && ++witnesses > 1) return false;
        }
        return in.op == Op::forall || (in.op == Op::exists_unique && witnesses == 1);
      }
    }
    return false;
  }
};

namespace {

class Compiler {
 public:
  Compiler(const Universe& universe, const Signature& free, std::vector<Instruction>& code)
      : universe_(universe), code_(code) {
    for (std::uint32_t i = 0; i < free.size(); ++i) scope_.push_back({free[i].name, free[i].type, i});
    slots_ = static_cast<std::uint32_t>(free.size());
    index_needed_.assign(free.size(), false);
  }

  std::uint32_t compile(const Formula& f) {
    Instruction in;
    switch (f.kind()) {
      case FormulaKind::truth:
        in.op = Op::truth;
        break;
      case FormulaKind::falsity:
        in.op = Op::falsity;
        break;
      case FormulaKind::apply: {
        in.op = Op::apply;
        const auto& [head_slot, head_type] = slot_of(f.child(0));
        if (head_type.is_ind() || head_type.arity() != f.children().size() - 1) {
          throw EvalError("ill-typed application of " + f.child(0).name());
        }
        in.slot = head_slot;
        universe_.tuple_space(head_type);
        in.strides.assign(head_type.arity(), 1);
        for (std::size_t i = head_type.arity(); i-- > 1;) {
          in.strides[i - 1] = in.strides[i] * *universe_.domain_size(head_type.component(i));
        }
        for (std::size_t i = 1; i < f.children().size(); ++i) {
          in.operands.push_back(operand(f.child(i), true));
        }
        break;
      }
      case FormulaKind::equal:
        in.op = Op::equal;
        in.operands = {operand(f.child(0), false), operand(f.child(1), false)};
        break;
      case FormulaKind::negation:
        in.op = Op::negation;
        in.lhs = compile(f.child(0));
        break;
      case FormulaKind::conjunction:
      case FormulaKind::disjunction:
      case FormulaKind::implication:
      case FormulaKind::equivalence:
        in.op = f.kind() == FormulaKind::conjunction   ? Op::conjunction
                : f.kind() == FormulaKind::disjunction ? Op::disjunction
                : f.kind() == FormulaKind::implication ? Op::implication
                                                       : Op::equivalence;
        in.lhs = compile(f.child(0));
        in.rhs = compile(f.child(1));
        break;
      case FormulaKind::forall:
      case FormulaKind::exists:
      case FormulaKind::exists_unique: {
        in.op = f.kind() == FormulaKind::forall   ? Op::forall
                : f.kind() == FormulaKind::exists ? Op::exists
                                                  : Op::exists_unique;
        in.domain = &universe_.type_domain(f.binder_type());
        const std::uint32_t slot = slots_++;
        in.slot = slot;
        scope_.push_back({f.name(), f.binder_type(), slot});
        in.lhs = compile(f.body());
        scope_.pop_back();
        break;
      }
      default:
        throw EvalError("cannot evaluate a non-core node");
    }
    code_.push_back(std::move(in));
    return static_cast<std::uint32_t>(code_.size() - 1);
  }

  std::uint32_t slots() const { return slots_; }
  const std::vector<bool>& index_needed() const { return index_needed_; }

 private:
  struct Scoped {
    std::string name;
    SimpleType type;
    std::uint32_t slot;
  };

  std::pair<std::uint32_t, SimpleType> slot_of(const Formula& t) {
    if (t.kind() != FormulaKind::variable) throw EvalError("expected a variable");
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name == t.name()) return {it->slot, it->type};
    }
    throw EvalError("unbound variable " + t.name());
  }

  Operand operand(const Formula& t, bool needs_index) {
    Operand o;
    if (t.kind() == FormulaKind::literal) {
      if (t.literal_value() >= universe_.base_size()) {
        throw EvalError("literal #" + std::to_string(t.literal_value()) +
                        " names no individual of a universe of size " +
                        std::to_string(universe_.base_size()));
      }
      o.is_slot = false;
      o.constant = Value::individual(t.literal_value());
      o.constant_index = t.literal_value();
      return o;
    }
    o.slot = slot_of(t).first;
    if (needs_index && o.slot < index_needed_.size()) index_needed_[o.slot] = true;
    return o;
  }

  const Universe& universe_;
  std::vector<Instruction>& code_;
  std::vector<Scoped> scope_;
  std::uint32_t slots_ = 0;
  std::vector<bool> index_needed_;
};

}  // namespace

CompiledFormula::CompiledFormula(const Universe& universe, const Formula& formula,
                                 const Signature& free) {
  auto program = std::make_shared<Program>();
  Compiler compiler(universe, free, program->code);
  program->root = compiler.compile(formula);
  program->slots = compiler.slots();
  program->free = free;
  program->universe = universe;
  program->index_needed = compiler.index_needed();
  program_ = std::move(program);
}

bool CompiledFormula::evaluate(std::span<const Value> values) const {
  const Program& p = *program_;
  if (values.size() != p.free.size()) throw SignatureMismatch("wrong number of free values");
  Environment env;
  env.values.resize(p.slots);
  env.indices.resize(p.slots);
  for (std::size_t i = 0; i < values.size(); ++i) {
    env.values[i] = values[i];
    if (p.index_needed[i]) env.indices[i] = p.universe->index_of(p.free[i].type, values[i]);
  }
  return p.run(p.root, env);
}

bool eval(const Universe& universe, const Formula& formula, const Signature& signature,
          const ModelAssignment& model, std::span<const Binding> bindings) {
  require_admissible(universe, signature, model);
  Signature free = signature;
  std::vector<Value> values = model.values;
  for (const auto& b : bindings) {
    if (!universe.admits(b.variable.type, b.value)) {
      throw SignatureMismatch("binding " + b.variable.name + " is not a value of " +
                              b.variable.type.to_string());
    }
    free.push_back(b.variable);
    values.push_back(b.value);
  }
  return CompiledFormula(universe, formula, free).evaluate(values);
}

SystemEvaluator::SystemEvaluator(const Universe& universe, const AxiomSystem& system) {
  for (const auto& a : system.axioms) axioms_.emplace_back(universe, a.formula, system.signature);
}

bool SystemEvaluator::operator()(const ModelAssignment& model) const {
  return std::ranges::all_of(axioms_, [&](const CompiledFormula& a) { return a(model); });
}

bool satisfies(const Universe& universe, const AxiomSystem& system, const ModelAssignment& model) {
  require_admissible(universe, system.signature, model);
  return SystemEvaluator(universe, system)(model);
}

}  // namespace axcheck
