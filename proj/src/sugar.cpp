#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "axcheck/parser.hpp"

namespace axcheck {
namespace {

[[noreturn]] void type_error(const Formula& at, std::string message) {
  throw TypeError({{std::move(message), at.location().line, at.location().column}});
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  if (!f.name().empty()) out.insert(f.name());
  for (const auto& c : f.children()) collect_names(c, out);
}

// Capture-avoiding substitution of free variables by core terms.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& replacements,
                   const std::set<std::string>& avoid,
                   const std::function<std::string(const std::string&)>& fresh) {
  switch (f.kind()) {
    case FormulaKind::variable: {
      auto it = replacements.find(f.name());
      return it == replacements.end() ? f : it->second;
    }
    case FormulaKind::truth:
    case FormulaKind::falsity:
    case FormulaKind::literal:
      return f;
    case FormulaKind::forall:
    case FormulaKind::exists:
    case FormulaKind::exists_unique: {
      auto inner = replacements;
      inner.erase(f.name());
      std::string name = f.name();
      if (avoid.contains(name)) {
        name = fresh(name);
        inner.insert_or_assign(f.name(), Formula::variable(name));
      }
      return Formula::quantifier(f.kind(), name, f.binder_type(),
                                 substitute(f.body(), inner, avoid, fresh), f.location());
    }
    default: {
      std::vector<Formula> children;
      for (const auto& c : f.children()) children.push_back(substitute(c, replacements, avoid, fresh));
      switch (f.kind()) {
        case FormulaKind::apply: {
          Formula head = children.front();
          children.erase(children.begin());
          return Formula::apply(head, std::move(children), f.location());
        }
        case FormulaKind::equal:
          return Formula::equal(children[0], children[1], f.location());
        case FormulaKind::negation:
          return Formula::negation(children[0], f.location());
        case FormulaKind::call:
          return Formula::call(f.name(), std::move(children), f.location());
        case FormulaKind::member:
          return Formula::member(children[0], children[1], f.location());
        default:
          return Formula::binary(f.kind(), children[0], children[1], f.location());
      }
    }
  }
}

class Expander {
 public:
  Expander(const Formula& root, const SugarContext& context) : context_(context) {
    collect_names(root, taken_);
    for (const auto& v : context.signature) taken_.insert(v.name);
    for (const auto& d : context.definitions) taken_.insert(d.name);
  }

  Formula formula(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::truth:
      case FormulaKind::falsity:
        return f;
      case FormulaKind::variable:
        if (const auto* def = definition(f.name()); def && def->parameters.empty()) {
          return instantiate(*def, {});
        }
        type_error(f, "expected a formula, found variable " + f.name());
      case FormulaKind::literal:
        type_error(f, "expected a formula, found a literal");
      case FormulaKind::apply: {
        Hoisted h;
        std::vector<Formula> args;
        for (std::size_t i = 1; i < f.children().size(); ++i) args.push_back(term(f.child(i), h));
        return wrap(h, Formula::apply(term(f.child(0), h), std::move(args), f.location()));
      }
      case FormulaKind::equal: {
        Hoisted h;
        Formula lhs = term(f.child(0), h);
        Formula rhs = term(f.child(1), h);
        return wrap(h, Formula::equal(lhs, rhs, f.location()));
      }
      case FormulaKind::negation:
        return Formula::negation(formula(f.child(0)), f.location());
      case FormulaKind::conjunction:
      case FormulaKind::disjunction:
      case FormulaKind::implication:
      case FormulaKind::equivalence:
        return Formula::binary(f.kind(), formula(f.child(0)), formula(f.child(1)), f.location());
      case FormulaKind::forall:
      case FormulaKind::exists:
      case FormulaKind::exists_unique: {
        scope_.push_back({f.name(), f.binder_type()});
        Formula body = formula(f.body());
        scope_.pop_back();
        return Formula::quantifier(f.kind(), f.name(), f.binder_type(), body, f.location());
      }
      case FormulaKind::call:
        return call(f);
      case FormulaKind::member: {
        Hoisted h;
        Formula element = term(f.child(0), h);
        return wrap(h, membership({element}, f.child(1)));
      }
    }
    type_error(f, "unsupported node");
  }

 private:
  struct Binding {
    std::string name;
    SimpleType type;
    Formula defining_atom;
  };
  using Hoisted = std::vector<Binding>;

  std::optional<SimpleType> lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name == name) return it->type;
    }
    if (const auto* v = find_variable(context_.signature, name)) return v->type;
    return std::nullopt;
  }

  const Definition* definition(const std::string& name) const {
    auto it = std::ranges::find(context_.definitions, name, &Definition::name);
    return it == context_.definitions.end() ? nullptr : &*it;
  }

  bool is_function(const std::string& name) const {
    return std::ranges::find(context_.functions, name) != context_.functions.end();
  }

  std::string fresh(const std::string& base) {
    std::string name = base;
    for (int i = 1; taken_.contains(name); ++i) name = base + std::to_string(i);
    taken_.insert(name);
    return name;
  }

  static bool is_set_former(const std::string& name) {
    return name == "dom" || name == "ran" || name == "field" || name == "inter" ||
           name == "union";
  }

  Formula call(const Formula& f) {
    const std::string& name = f.name();
    const auto args = f.children();
    if (lookup(name)) {
      Hoisted h;
      std::vector<Formula> core_args;
      for (const auto& a : args) core_args.push_back(term(a, h));
      return wrap(h, Formula::apply(Formula::variable(name, f.location()), std::move(core_args),
                                    f.location()));
    }
    if (name == "subset" || name == "inter-empty") {
      if (args.size() != 2) type_error(f, name + " expects 2 arguments");
      auto types = element_types(args[0]);
      if (types != element_types(args[1])) {
        type_error(f, name + " needs sets with the same element type");
      }
      std::vector<Formula> vars;
      std::vector<std::pair<std::string, SimpleType>> binders;
      for (const auto& t : types) {
        binders.emplace_back(fresh("z"), t);
        vars.push_back(Formula::variable(binders.back().first));
      }
      Formula lhs = membership(vars, args[0]);
      Formula rhs = membership(vars, args[1]);
      const bool is_subset = name == "subset";
      Formula out = is_subset ? Formula::implication(lhs, rhs) : Formula::conjunction(lhs, rhs);
      const FormulaKind q = is_subset ? FormulaKind::forall : FormulaKind::exists;
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        out = Formula::quantifier(q, it->first, it->second, out);
      }
      return is_subset ? out : Formula::negation(out, f.location());
    }
    if (name == "in") {
      if (args.size() != 2) type_error(f, "in expects 2 arguments");
      Hoisted h;
      Formula element = term(args[0], h);
      return wrap(h, membership({element}, args[1]));
    }
    if (const auto* def = definition(name)) {
      Hoisted h;
      std::vector<Formula> core_args;
      for (const auto& a : args) core_args.push_back(term(a, h));
      if (core_args.size() != def->parameters.size()) {
        type_error(f, name + " expects " + std::to_string(def->parameters.size()) + " arguments");
      }
      return wrap(h, instantiate(*def, core_args));
    }
    if (is_set_former(name)) type_error(f, "set term " + name + "(...) used as a formula");
    throw UnknownSugar(f.location().line, f.location().column, name);
  }

  // Core term for a surface term, hoisting function applications into `h`.
  Formula term(const Formula& t, Hoisted& h) {
    switch (t.kind()) {
      case FormulaKind::variable:
      case FormulaKind::literal:
        return t;
      case FormulaKind::call: {
        if (!is_function(t.name())) {
          if (lookup(t.name()) || definition(t.name()) || is_set_former(t.name()) ||
              t.name() == "subset" || t.name() == "inter-empty" || t.name() == "in") {
            type_error(t, "expected a term, found " + t.name() + "(...)");
          }
          throw UnknownSugar(t.location().line, t.location().column, t.name());
        }
        const SimpleType type = *lookup(t.name());
        if (t.children().size() + 1 != type.arity()) {
          type_error(t, "function " + t.name() + " expects " + std::to_string(type.arity() - 1) +
                            " arguments");
        }
        std::vector<Formula> args;
        for (const auto& a : t.children()) args.push_back(term(a, h));
        const std::string value = fresh("y");
        args.push_back(Formula::variable(value));
        h.push_back({value, type.component(type.arity() - 1),
                     Formula::apply(Formula::variable(t.name(), t.location()), std::move(args),
                                    t.location())});
        return Formula::variable(value, t.location());
      }
      default:
        type_error(t, "expected a term");
    }
  }

  static Formula wrap(const Hoisted& h, Formula atom) {
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
      atom = Formula::exists(it->name, it->type, Formula::conjunction(it->defining_atom, atom));
    }
    return atom;
  }

  std::vector<SimpleType> element_types(const Formula& set) {
    if (set.kind() == FormulaKind::variable) {
      if (auto type = lookup(set.name())) {
        if (type->is_ind()) type_error(set, set.name() + " is an individual, not a set");
        return {type->components().begin(), type->components().end()};
      }
      if (const auto* def = definition(set.name())) {
        std::vector<SimpleType> out;
        for (const auto& p : def->parameters) out.push_back(p.type);
        if (out.empty()) type_error(set, set.name() + " takes no arguments");
        return out;
      }
      type_error(set, "undeclared set " + set.name());
    }
    if (set.kind() != FormulaKind::call) type_error(set, "expected a set term");
    const std::string& name = set.name();
    if (name == "dom" || name == "ran" || name == "field") {
      const SimpleType r = relation_argument(set);
      if (name == "dom") return {r.component(0)};
      if (name == "ran") return {r.component(r.arity() - 1)};
      if (r.arity() != 2 || r.component(0) != r.component(1)) {
        type_error(set, "field needs a binary relation over a single type");
      }
      return {r.component(0)};
    }
    if (name == "inter" || name == "union") {
      if (set.children().size() != 2) type_error(set, name + " expects 2 arguments");
      auto lhs = element_types(set.child(0));
      if (lhs != element_types(set.child(1))) {
        type_error(set, name + " needs sets with the same element type");
      }
      return lhs;
    }
    if (lookup(name) || definition(name)) type_error(set, "expected a set term, found a formula");
    throw UnknownSugar(set.location().line, set.location().column, name);
  }

  SimpleType relation_argument(const Formula& set) {
    if (set.children().size() != 1 || set.child(0).kind() != FormulaKind::variable) {
      type_error(set, set.name() + " expects a relation variable");
    }
    auto type = lookup(set.child(0).name());
    if (!type) type_error(set.child(0), "undeclared variable " + set.child(0).name());
    if (type->arity() < 2) type_error(set, set.name() + " needs a relation of arity at least 2");
    return *type;
  }

  // Formula stating that the tuple `elements` belongs to `set`.
  Formula membership(const std::vector<Formula>& elements, const Formula& set) {
    if (set.kind() == FormulaKind::variable) {
      if (lookup(set.name())) return Formula::apply(set, elements, set.location());
      if (const auto* def = definition(set.name())) {
        if (def->parameters.size() != elements.size()) {
          type_error(set, set.name() + " expects " + std::to_string(def->parameters.size()) +
                              " arguments");
        }
        return instantiate(*def, elements);
      }
      type_error(set, "undeclared set " + set.name());
    }
    if (set.kind() != FormulaKind::call) type_error(set, "expected a set term");
    const std::string& name = set.name();
    if (is_set_former(name) && elements.size() != 1) {
      type_error(set, name + "(...) holds single elements, not tuples");
    }
    if (name == "dom" || name == "ran") {
      const SimpleType r = relation_argument(set);
      const std::size_t at = name == "dom" ? 0 : r.arity() - 1;
      std::vector<Formula> args;
      std::vector<std::pair<std::string, SimpleType>> binders;
      for (std::size_t i = 0; i < r.arity(); ++i) {
        if (i == at) {
          args.push_back(elements[0]);
          continue;
        }
        binders.emplace_back(fresh("w"), r.component(i));
        args.push_back(Formula::variable(binders.back().first));
      }
      Formula out = Formula::apply(set.child(0), std::move(args), set.location());
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        out = Formula::exists(it->first, it->second, out);
      }
      return out;
    }
    if (name == "field") {
      element_types(set);
      const Formula dom = Formula::call("dom", {set.child(0)}, set.location());
      const Formula ran = Formula::call("ran", {set.child(0)}, set.location());
      return Formula::disjunction(membership(elements, dom), membership(elements, ran));
    }
    if (name == "inter" || name == "union") {
      element_types(set);
      Formula lhs = membership(elements, set.child(0));
      Formula rhs = membership(elements, set.child(1));
      return name == "inter" ? Formula::conjunction(lhs, rhs) : Formula::disjunction(lhs, rhs);
    }
    element_types(set);
    type_error(set, "expected a set term");
  }

  Formula instantiate(const Definition& def, const std::vector<Formula>& args) {
    std::map<std::string, Formula> replacements;
    std::set<std::string> avoid;
    for (std::size_t i = 0; i < args.size(); ++i) {
      replacements.emplace(def.parameters[i].name, args[i]);
      for (const auto& n : free_variable_names(args[i])) avoid.insert(n);
    }
    for (const auto& s : scope_) avoid.insert(s.name);
    for (const auto& v : context_.signature) avoid.insert(v.name);
    return substitute(def.body, replacements, avoid,
                      [this](const std::string& base) { return fresh(base); });
  }

  const SugarContext& context_;
  std::vector<Variable> scope_;
  std::set<std::string> taken_;
};

}  // namespace

Formula expand_sugar(const Formula& formula, const SugarContext& context) {
  return Expander(formula, context).formula(formula);
}

}  // namespace axcheck
