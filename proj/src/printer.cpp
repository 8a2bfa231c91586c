#include "axcheck/parser.hpp"

namespace axcheck {
namespace {

// Binding strength; higher binds tighter. Quantifiers extend as far right as
// possible, so they are parenthesized whenever they appear as an operand.
int precedence(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::forall:
    case FormulaKind::exists:
    case FormulaKind::exists_unique:
      return 0;
    case FormulaKind::equivalence:
      return 1;
    case FormulaKind::implication:
      return 2;
    case FormulaKind::disjunction:
      return 3;
    case FormulaKind::conjunction:
      return 4;
    default:
      return 5;
  }
}

void print(const Formula& f, int min_precedence, std::string& out);

void print_term(const Formula& t, std::string& out) {
  switch (t.kind()) {
    case FormulaKind::variable:
      out += t.name();
      return;
    case FormulaKind::literal:
      out += '#';
      out += std::to_string(t.literal_value());
      return;
    case FormulaKind::call:
      out += t.name();
      out += '(';
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += ',';
        print_term(t.child(i), out);
      }
      out += ')';
      return;
    default:
      out += '(';
      print(t, 0, out);
      out += ')';
  }
}

void print(const Formula& f, int min_precedence, std::string& out) {
  const int own = precedence(f.kind());
  const bool parens = own < min_precedence;
  if (parens) out += '(';
  switch (f.kind()) {
    case FormulaKind::truth:
      out += "true";
      break;
    case FormulaKind::falsity:
      out += "false";
      break;
    case FormulaKind::variable:
    case FormulaKind::literal:
    case FormulaKind::call:
      print_term(f, out);
      break;
    case FormulaKind::apply:
      print_term(f.child(0), out);
      out += '(';
      for (std::size_t i = 1; i < f.children().size(); ++i) {
        if (i > 1) out += ',';
        print_term(f.child(i), out);
      }
      out += ')';
      break;
    case FormulaKind::equal:
      print_term(f.child(0), out);
      out += " = ";
      print_term(f.child(1), out);
      break;
    case FormulaKind::member:
      print_term(f.child(0), out);
      out += " in ";
      print_term(f.child(1), out);
      break;
    case FormulaKind::negation: {
      const Formula& inner = f.child(0);
      if (inner.kind() == FormulaKind::equal) {
        print_term(inner.child(0), out);
        out += " != ";
        print_term(inner.child(1), out);
      } else if (inner.kind() == FormulaKind::member) {
        print_term(inner.child(0), out);
        out += " notin ";
        print_term(inner.child(1), out);
      } else {
        out += '~';
        print(inner, 5, out);
      }
      break;
    }
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
    case FormulaKind::implication:
    case FormulaKind::equivalence: {
      // & | <-> associate left, -> associates right.
      const bool right_assoc = f.kind() == FormulaKind::implication;
      print(f.child(0), right_assoc ? own + 1 : own, out);
      out += f.kind() == FormulaKind::conjunction   ? " & "
             : f.kind() == FormulaKind::disjunction ? " | "
             : f.kind() == FormulaKind::implication ? " -> "
                                                    : " <-> ";
      print(f.child(1), right_assoc ? own : own + 1, out);
      break;
    }
    case FormulaKind::forall:
    case FormulaKind::exists:
    case FormulaKind::exists_unique:
      out += f.kind() == FormulaKind::forall   ? "forall "
             : f.kind() == FormulaKind::exists ? "exists "
                                               : "exists! ";
      out += f.name();
      out += ':';
      out += f.binder_type().to_string();
      out += ". ";
      print(f.body(), 0, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string pretty_print(const Formula& formula) {
  std::string out;
  print(formula, 0, out);
  return out;
}

}  // namespace axcheck
