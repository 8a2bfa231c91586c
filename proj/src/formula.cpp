#include "axcheck/formula.hpp"

#include <algorithm>
#include <functional>

namespace axcheck {

bool is_quantifier(FormulaKind kind) noexcept {
  return kind == FormulaKind::forall || kind == FormulaKind::exists ||
         kind == FormulaKind::exists_unique;
}

bool is_binary_connective(FormulaKind kind) noexcept {
  return kind == FormulaKind::conjunction || kind == FormulaKind::disjunction ||
         kind == FormulaKind::implication || kind == FormulaKind::equivalence;
}

Formula Formula::make(Node node) { return Formula(std::make_shared<const Node>(std::move(node))); }

Formula Formula::truth() {
  static const Formula t = make(Node{.kind = FormulaKind::truth});
  return t;
}

Formula Formula::falsity() {
  static const Formula f = make(Node{.kind = FormulaKind::falsity});
  return f;
}

Formula Formula::variable(std::string name, SourceLocation loc) {
  return make(Node{.kind = FormulaKind::variable, .name = std::move(name), .location = loc});
}

Formula Formula::literal(std::uint32_t individual, SourceLocation loc) {
  return make(Node{.kind = FormulaKind::literal, .literal = individual, .location = loc});
}

Formula Formula::apply(Formula head, std::vector<Formula> args, SourceLocation loc) {
  std::vector<Formula> children;
  children.reserve(args.size() + 1);
  children.push_back(std::move(head));
  for (auto& a : args) children.push_back(std::move(a));
  return make(Node{.kind = FormulaKind::apply, .children = std::move(children), .location = loc});
}

Formula Formula::equal(Formula lhs, Formula rhs, SourceLocation loc) {
  return make(Node{.kind = FormulaKind::equal,
                   .children = {std::move(lhs), std::move(rhs)},
                   .location = loc});
}

Formula Formula::negation(Formula operand, SourceLocation loc) {
  return make(Node{.kind = FormulaKind::negation, .children = {std::move(operand)}, .location = loc});
}

Formula Formula::binary(FormulaKind kind, Formula lhs, Formula rhs, SourceLocation loc) {
  return make(Node{.kind = kind, .children = {std::move(lhs), std::move(rhs)}, .location = loc});
}

Formula Formula::quantifier(FormulaKind kind, std::string name, SimpleType type, Formula body,
                            SourceLocation loc) {
  return make(Node{.kind = kind,
                   .name = std::move(name),
                   .type = std::move(type),
                   .children = {std::move(body)},
                   .location = loc});
}

Formula Formula::call(std::string name, std::vector<Formula> args, SourceLocation loc) {
  return make(Node{.kind = FormulaKind::call,
                   .name = std::move(name),
                   .children = std::move(args),
                   .location = loc});
}

Formula Formula::member(Formula element, Formula set, SourceLocation loc) {
  return make(Node{.kind = FormulaKind::member,
                   .children = {std::move(element), std::move(set)},
                   .location = loc});
}

Formula Formula::all_of(std::span<const Formula> parts) {
  if (parts.empty()) return truth();
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = conjunction(out, parts[i]);
  return out;
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.size();
  return n;
}

bool Formula::is_core() const {
  if (kind() == FormulaKind::call || kind() == FormulaKind::member) return false;
  return std::ranges::all_of(children(), [](const Formula& c) { return c.is_core(); });
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.type == y.type && x.literal == y.literal &&
         x.children == y.children;
}

const Variable* find_variable(const Signature& signature, std::string_view name) {
  auto it = std::ranges::find(signature, name, &Variable::name);
  return it == signature.end() ? nullptr : &*it;
}

std::vector<std::string> free_variable_names(const Formula& formula) {
  std::vector<std::string> out;
  std::vector<std::string> bound;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.kind() == FormulaKind::variable) {
      if (std::ranges::find(bound, f.name()) == bound.end() &&
          std::ranges::find(out, f.name()) == out.end()) {
        out.push_back(f.name());
      }
      return;
    }
    if (is_quantifier(f.kind())) {
      bound.push_back(f.name());
      walk(f.body());
      bound.pop_back();
      return;
    }
    for (const auto& c : f.children()) walk(c);
  };
  walk(formula);
  return out;
}

std::vector<Variable> free_variables(const Formula& formula, const Signature& signature) {
  std::vector<Variable> out;
  std::vector<TypeDiagnostic> missing;
  for (const auto& name : free_variable_names(formula)) {
    if (const auto* v = find_variable(signature, name)) {
      out.push_back(*v);
    } else {
      missing.push_back({"undeclared variable " + name, 0, 0});
    }
  }
  if (!missing.empty()) throw TypeError(std::move(missing));
  return out;
}

namespace {

class TypeChecker {
 public:
  explicit TypeChecker(const Signature& signature) : signature_(signature) {}

  std::vector<TypeDiagnostic> run(const Formula& f) {
    formula(f);
    return std::move(diagnostics_);
  }

 private:
  void error(const Formula& at, std::string message) {
    diagnostics_.push_back({std::move(message), at.location().line, at.location().column});
  }

  std::optional<SimpleType> lookup(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (it->name == name) return it->type;
    }
    if (const auto* v = find_variable(signature_, name)) return v->type;
    return std::nullopt;
  }

  std::optional<SimpleType> term(const Formula& t) {
    switch (t.kind()) {
      case FormulaKind::variable: {
        auto type = lookup(t.name());
        if (!type) error(t, "undeclared variable " + t.name());
        return type;
      }
      case FormulaKind::literal:
        return SimpleType::ind();
      default:
        error(t, "expected a term");
        return std::nullopt;
    }
  }

  void formula(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::truth:
      case FormulaKind::falsity:
        return;
      case FormulaKind::variable:
      case FormulaKind::literal:
        error(f, "expected a formula, found a term");
        return;
      case FormulaKind::apply: {
        const auto& head = f.child(0);
        auto head_type = term(head);
        if (!head_type) return;
        if (head_type->is_ind()) {
          error(head, "cannot apply " + describe(head) + " of type ind");
          return;
        }
        const std::size_t argc = f.children().size() - 1;
        if (argc != head_type->arity()) {
          error(f, describe(head) + " expects " + std::to_string(head_type->arity()) +
                       " arguments, got " + std::to_string(argc));
          return;
        }
        for (std::size_t i = 0; i < argc; ++i) {
          const auto& arg = f.child(i + 1);
          auto arg_type = term(arg);
          if (arg_type && *arg_type != head_type->component(i)) {
            error(arg, "expected " + head_type->component(i).to_string() + ", found " +
                           arg_type->to_string());
          }
        }
        return;
      }
      case FormulaKind::equal: {
        auto lhs = term(f.child(0));
        auto rhs = term(f.child(1));
        if (lhs && rhs && *lhs != *rhs) {
          error(f, "cannot equate " + lhs->to_string() + " with " + rhs->to_string());
        }
        return;
      }
      case FormulaKind::negation:
        formula(f.child(0));
        return;
      case FormulaKind::conjunction:
      case FormulaKind::disjunction:
      case FormulaKind::implication:
      case FormulaKind::equivalence:
        formula(f.child(0));
        formula(f.child(1));
        return;
      case FormulaKind::forall:
      case FormulaKind::exists:
      case FormulaKind::exists_unique:
        if (find_variable(signature_, f.name())) {
          error(f, "bound variable " + f.name() + " shadows primitive sign " + f.name());
        }
        bound_.push_back({f.name(), f.binder_type()});
        formula(f.body());
        bound_.pop_back();
        return;
      case FormulaKind::call:
      case FormulaKind::member:
        error(f, "unexpanded sugar in core formula");
        return;
    }
  }

  static std::string describe(const Formula& t) {
    return t.kind() == FormulaKind::variable ? t.name() : "#" + std::to_string(t.literal_value());
  }

  const Signature& signature_;
  std::vector<Variable> bound_;
  std::vector<TypeDiagnostic> diagnostics_;
};

}  // namespace

std::vector<TypeDiagnostic> check_types(const Formula& formula, const Signature& signature) {
  return TypeChecker(signature).run(formula);
}

bool is_pure(const Formula& formula) {
  if (formula.kind() == FormulaKind::literal) return false;
  return std::ranges::all_of(formula.children(), [](const Formula& c) { return is_pure(c); });
}

std::size_t AxiomSystem::declared_axiom_count() const {
  return static_cast<std::size_t>(std::ranges::count(axioms, false, &Axiom::implicit));
}

Formula AxiomSystem::conjunction() const {
  std::vector<Formula> parts;
  for (const auto& a : axioms) parts.push_back(a.formula);
  return Formula::all_of(parts);
}

std::vector<std::string> AxiomSystem::unused_variables() const {
  std::vector<std::string> used;
  for (const auto& a : axioms) {
    for (auto& n : free_variable_names(a.formula)) used.push_back(std::move(n));
  }
  std::vector<std::string> out;
  for (const auto& v : signature) {
    if (std::ranges::find(used, v.name) == used.end()) out.push_back(v.name);
  }
  return out;
}

}  // namespace axcheck
