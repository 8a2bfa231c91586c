#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axcheck/errors.hpp"
#include "axcheck/types.hpp"

namespace axcheck {

struct SourceLocation {
  std::uint32_t line = 0;
  std::uint32_t column = 0;
};

enum class FormulaKind {
  truth,
  falsity,
  variable,
  literal,  // #k, a constant naming base individual k
  apply,    // children: head term, then argument terms
  equal,
  negation,
  conjunction,
  disjunction,
  implication,
  equivalence,
  forall,
  exists,
  exists_unique,
  // Surface-only nodes, removed by expand_sugar.
  call,    // name(args...): an application, a definition, or a sugar form
  member,  // children: element term, set term
};

bool is_quantifier(FormulaKind kind) noexcept;
bool is_binary_connective(FormulaKind kind) noexcept;

// Immutable, shared AST node for terms and formulas of the typed language.
// Equality is structural and ignores source locations.
class Formula {
 public:
  static Formula truth();
  static Formula falsity();
  static Formula variable(std::string name, SourceLocation loc = {});
  static Formula literal(std::uint32_t individual, SourceLocation loc = {});
  static Formula apply(Formula head, std::vector<Formula> args, SourceLocation loc = {});
  static Formula equal(Formula lhs, Formula rhs, SourceLocation loc = {});
  static Formula negation(Formula operand, SourceLocation loc = {});
  static Formula binary(FormulaKind kind, Formula lhs, Formula rhs, SourceLocation loc = {});
  static Formula conjunction(Formula lhs, Formula rhs) {
    return binary(FormulaKind::conjunction, std::move(lhs), std::move(rhs));
  }
  static Formula disjunction(Formula lhs, Formula rhs) {
    return binary(FormulaKind::disjunction, std::move(lhs), std::move(rhs));
  }
  static Formula implication(Formula lhs, Formula rhs) {
    return binary(FormulaKind::implication, std::move(lhs), std::move(rhs));
  }
  static Formula equivalence(Formula lhs, Formula rhs) {
    return binary(FormulaKind::equivalence, std::move(lhs), std::move(rhs));
  }
  static Formula quantifier(FormulaKind kind, std::string name, SimpleType type, Formula body,
                            SourceLocation loc = {});
  static Formula forall(std::string name, SimpleType type, Formula body) {
    return quantifier(FormulaKind::forall, std::move(name), std::move(type), std::move(body));
  }
  static Formula exists(std::string name, SimpleType type, Formula body) {
    return quantifier(FormulaKind::exists, std::move(name), std::move(type), std::move(body));
  }
  static Formula call(std::string name, std::vector<Formula> args, SourceLocation loc = {});
  static Formula member(Formula element, Formula set, SourceLocation loc = {});

  // Left-nested conjunction; `truth()` for an empty list.
  static Formula all_of(std::span<const Formula> parts);

  FormulaKind kind() const noexcept { return node_->kind; }
  // Variable, binder, or call name.
  const std::string& name() const noexcept { return node_->name; }
  const SimpleType& binder_type() const noexcept { return node_->type; }
  std::uint32_t literal_value() const noexcept { return node_->literal; }
  std::span<const Formula> children() const noexcept { return node_->children; }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }
  const Formula& body() const { return node_->children.at(0); }
  SourceLocation location() const noexcept { return node_->location; }

  // Number of AST nodes; an application counts itself, its head, and its arguments.
  std::size_t size() const;
  // True when the tree contains only core nodes.
  bool is_core() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    FormulaKind kind = FormulaKind::truth;
    std::string name;
    SimpleType type;
    std::uint32_t literal = 0;
    std::vector<Formula> children;
    SourceLocation location;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};

struct Variable {
  std::string name;
  SimpleType type;

  friend bool operator==(const Variable&, const Variable&) = default;
};

using Signature = std::vector<Variable>;

const Variable* find_variable(const Signature& signature, std::string_view name);

// Free variable names in first-occurrence order.
std::vector<std::string> free_variable_names(const Formula& formula);
// Free variables typed through the signature; throws TypeError on undeclared names.
std::vector<Variable> free_variables(const Formula& formula, const Signature& signature);

// Empty result means the formula is well typed. Only core formulas are accepted.
std::vector<TypeDiagnostic> check_types(const Formula& formula, const Signature& signature);

// No individual literals anywhere in the tree.
bool is_pure(const Formula& formula);

struct Axiom {
  std::string label;
  Formula formula = Formula::truth();
  // Injected by a `func` declaration rather than written by the author.
  bool implicit = false;
};

// A surface-level abbreviation: `define name(params) := body`.
struct Definition {
  std::string name;
  std::vector<Variable> parameters;
  Formula body = Formula::truth();
};

struct AxiomSystem {
  std::string name;
  Signature signature;  // the primitive signs, in declaration order
  std::vector<Axiom> axioms;
  std::vector<Definition> definitions;
  std::vector<std::string> functions;  // signature entries declared with `func`

  std::size_t declared_axiom_count() const;
  Formula conjunction() const;
  // Signature entries that no axiom mentions.
  std::vector<std::string> unused_variables() const;
};

}  // namespace axcheck
