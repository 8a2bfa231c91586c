#include "axcheck/parser.hpp"

#include <algorithm>
#include <set>

#include "lexer.hpp"

namespace axcheck {

using detail::Tok;
using detail::Token;

namespace {

constexpr int kMaxNesting = 256;

bool is_declaration(Tok kind) {
  return kind == Tok::kw_system || kind == Tok::kw_vars || kind == Tok::kw_func ||
         kind == Tok::kw_define || kind == Tok::kw_axiom;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(detail::tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (!at(kind)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(peek().loc.line, peek().loc.column, expected, detail::describe(peek()));
  }

  const Token& expect(Tok kind, const std::string& what = {}) {
    if (!at(kind)) fail(what.empty() ? detail::describe(kind) : what);
    return advance();
  }

  void expect_end() {
    if (!at(Tok::end)) fail("end of input");
  }

  // --- types --------------------------------------------------------------

  SimpleType type() {
    Nesting guard(*this);
    const Token& t = expect(Tok::ident, "a type");
    if (t.text == "ind") return SimpleType::ind();
    if (t.text == "set") {
      expect(Tok::lparen);
      auto element = type();
      expect(Tok::rparen);
      return SimpleType::set(std::move(element));
    }
    if (t.text == "rel") {
      expect(Tok::lparen);
      std::vector<SimpleType> components{type()};
      while (accept(Tok::comma)) components.push_back(type());
      expect(Tok::rparen);
      return SimpleType::rel(std::move(components));
    }
    throw ParseError(t.loc.line, t.loc.column, "'ind', 'rel', or 'set'", detail::describe(t));
  }

  // --- formulas -----------------------------------------------------------

  Formula formula() {
    Nesting guard(*this);
    Formula lhs = implication();
    while (at(Tok::iff)) {
      const auto loc = advance().loc;
      lhs = Formula::binary(FormulaKind::equivalence, lhs, implication(), loc);
    }
    return lhs;
  }

  Formula implication() {
    Nesting guard(*this);
    Formula lhs = disjunction();
    if (at(Tok::arrow)) {
      const auto loc = advance().loc;
      return Formula::binary(FormulaKind::implication, lhs, implication(), loc);
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (at(Tok::bar)) {
      const auto loc = advance().loc;
      lhs = Formula::binary(FormulaKind::disjunction, lhs, conjunction(), loc);
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (at(Tok::amp)) {
      const auto loc = advance().loc;
      lhs = Formula::binary(FormulaKind::conjunction, lhs, unary(), loc);
    }
    return lhs;
  }

  Formula unary() {
    Nesting guard(*this);
    if (at(Tok::tilde)) {
      const auto loc = advance().loc;
      return Formula::negation(unary(), loc);
    }
    if (at_quantifier()) return quantified();
    return atom();
  }

  bool at_quantifier() const { return at(Tok::kw_forall) || at(Tok::kw_exists) || at(Tok::kw_exists_unique); }

  Formula quantified() {
    const Token& q = advance();
    const FormulaKind kind = q.kind == Tok::kw_forall   ? FormulaKind::forall
                             : q.kind == Tok::kw_exists ? FormulaKind::exists
                                                        : FormulaKind::exists_unique;
    struct Binder {
      std::string name;
      SimpleType type;
      SourceLocation loc;
    };
    std::vector<Binder> binders;
    for (;;) {
      const Token& name = expect(Tok::ident, "a variable name");
      Binder b{name.text, SimpleType::ind(), name.loc};
      if (accept(Tok::colon)) b.type = type();
      binders.push_back(std::move(b));
      if (!accept(Tok::comma)) break;
    }
    // "Q x. body" scopes as far right as possible; "Q x body" takes a unary body.
    Formula body = accept(Tok::dot) ? formula() : unary();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = Formula::quantifier(kind, it->name, it->type, body,
                                 it == binders.rend() - 1 ? q.loc : it->loc);
    }
    return body;
  }

  Formula atom() {
    Nesting guard(*this);
    if (at(Tok::kw_true)) {
      advance();
      return Formula::truth();
    }
    if (at(Tok::kw_false)) {
      advance();
      return Formula::falsity();
    }
    if (at(Tok::lparen)) {
      const SourceLocation open = advance().loc;
      try {
        Formula inner = formula();
        expect(Tok::rparen);
        return inner;
      } catch (const ParseError& e) {
        if (!at(Tok::end) || e.expected() == "a matching ')'") throw;
        throw ParseError(open.line, open.column, "a matching ')'", "unclosed '('");
      }
    }
    if (!at(Tok::ident) && !at(Tok::literal)) fail("a formula");
    const auto loc = peek().loc;
    Formula lhs = term();
    switch (peek().kind) {
      case Tok::eq:
        advance();
        return Formula::equal(lhs, term(), loc);
      case Tok::neq:
        advance();
        return Formula::negation(Formula::equal(lhs, term(), loc), loc);
      case Tok::kw_in:
        advance();
        return Formula::member(lhs, term(), loc);
      case Tok::kw_notin:
        advance();
        return Formula::negation(Formula::member(lhs, term(), loc), loc);
      default:
        break;
    }
    if (lhs.kind() == FormulaKind::call) return lhs;
    fail("'=', '!=', 'in', 'notin', or '('");
  }

  Formula term() {
    Nesting guard(*this);
    if (at(Tok::literal)) {
      const Token& t = advance();
      return Formula::literal(static_cast<std::uint32_t>(t.number), t.loc);
    }
    const Token& name = expect(Tok::ident, "a term");
    if (!accept(Tok::lparen)) return Formula::variable(name.text, name.loc);
    std::vector<Formula> args;
    if (!at(Tok::rparen)) {
      args.push_back(term());
      while (accept(Tok::comma)) args.push_back(term());
    }
    expect(Tok::rparen, "',' or ')'");
    return Formula::call(name.text, std::move(args), name.loc);
  }

  // --- values -------------------------------------------------------------

  Value value(const SimpleType& t, const Universe& universe) {
    Nesting guard(*this);
    if (t.is_ind()) {
      if (!at(Tok::number) && !at(Tok::literal)) fail("an individual");
      const Token& tok = advance();
      if (tok.number >= universe.base_size()) {
        throw ParseError(tok.loc.line, tok.loc.column,
                         "an individual below " + std::to_string(universe.base_size()),
                         detail::describe(tok));
      }
      return Value::individual(static_cast<std::uint32_t>(tok.number));
    }
    try {
      universe.tuple_space(t);
    } catch (const CapExceeded&) {
      fail("a type small enough to hold a value");
    }
    expect(Tok::lbrace);
    std::vector<std::vector<Value>> tuples;
    if (!at(Tok::rbrace)) {
      do {
        tuples.push_back(tuple(t, universe));
      } while (accept(Tok::comma));
    }
    expect(Tok::rbrace, "',' or '}'");
    return universe.make_relation(t, tuples);
  }

  std::vector<Value> tuple(const SimpleType& t, const Universe& universe) {
    if (t.arity() == 1 && !(at(Tok::lparen) && t.component(0).is_ind())) {
      return {value(t.component(0), universe)};
    }
    expect(Tok::lparen);
    std::vector<Value> out;
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) expect(Tok::comma);
      out.push_back(value(t.component(i), universe));
    }
    expect(Tok::rparen);
    return out;
  }

  // --- source files -------------------------------------------------------

  SourceFile source();

  std::size_t position() const { return pos_; }

 private:
  struct Nesting {
    explicit Nesting(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail("shallower nesting");
    }
    ~Nesting() { --parser.depth_; }
    Parser& parser;
  };

  AxiomSystem system();

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

const std::set<std::string, std::less<>>& reserved_names() {
  static const std::set<std::string, std::less<>> names{
      "subset", "inter-empty", "in", "dom", "ran", "field", "inter", "union", "ind", "rel", "set"};
  return names;
}

void check_fresh(const Token& at, const std::string& name, std::set<std::string>& taken) {
  if (reserved_names().contains(name)) {
    throw ParseError(at.loc.line, at.loc.column, "a name that is not reserved", "'" + name + "'");
  }
  if (!taken.insert(name).second) {
    throw ParseError(at.loc.line, at.loc.column, "a unique name", "duplicate '" + name + "'");
  }
}

// ∀x1..x(k-1) ∃!y f(x1,...,x(k-1),y)
Formula functionality_axiom(const Variable& f, const Signature& signature) {
  std::set<std::string> taken;
  for (const auto& v : signature) taken.insert(v.name);
  auto fresh = [&](const std::string& base) {
    std::string name = base;
    for (int i = 1; taken.contains(name); ++i) name = base + std::to_string(i);
    taken.insert(name);
    return name;
  };
  const std::size_t k = f.type.arity();
  std::vector<std::string> names;
  for (std::size_t i = 0; i + 1 < k; ++i) names.push_back(fresh("x"));
  names.push_back(fresh("y"));
  std::vector<Formula> args;
  for (const auto& n : names) args.push_back(Formula::variable(n));
  Formula body = Formula::quantifier(FormulaKind::exists_unique, names.back(),
                                     f.type.component(k - 1),
                                     Formula::apply(Formula::variable(f.name), args));
  for (std::size_t i = k - 1; i-- > 0;) body = Formula::forall(names[i], f.type.component(i), body);
  return body;
}

Formula checked(const Formula& surface, const SugarContext& context) {
  Formula core = expand_sugar(surface, context);
  if (auto errors = check_types(core, context.signature); !errors.empty()) {
    throw TypeError(std::move(errors));
  }
  return core;
}

AxiomSystem Parser::system() {
  expect(Tok::kw_system);
  AxiomSystem sys;
  sys.name = expect(Tok::ident, "a system name").text;
  std::set<std::string> names;
  std::set<std::string> labels;
  struct Pending {
    std::string label;
    Formula surface;
  };
  std::vector<Pending> pending;
  while (is_declaration(peek().kind) && !at(Tok::kw_system)) {
    const Token& keyword = advance();
    switch (keyword.kind) {
      case Tok::kw_vars:
      case Tok::kw_func: {
        do {
          const Token& name = expect(Tok::ident, "a variable name");
          check_fresh(name, name.text, names);
          expect(Tok::colon);
          const auto type_at = peek();
          SimpleType t = type();
          if (keyword.kind == Tok::kw_func) {
            if (t.arity() < 2) {
              throw ParseError(type_at.loc.line, type_at.loc.column,
                               "a relation type of arity at least 2 for a function",
                               detail::describe(type_at));
            }
            sys.functions.push_back(name.text);
          }
          sys.signature.push_back({name.text, std::move(t)});
          accept(Tok::comma);
        } while (at(Tok::ident));
        break;
      }
      case Tok::kw_define: {
        const Token& name = expect(Tok::ident, "a definition name");
        check_fresh(name, name.text, names);
        Definition def;
        def.name = name.text;
        expect(Tok::lparen);
        std::set<std::string> params;
        if (!at(Tok::rparen)) {
          do {
            const Token& p = expect(Tok::ident, "a parameter name");
            if (names.contains(p.text) || !params.insert(p.text).second) {
              throw ParseError(p.loc.line, p.loc.column, "a fresh parameter name",
                               detail::describe(p));
            }
            expect(Tok::colon);
            def.parameters.push_back({p.text, type()});
          } while (accept(Tok::comma));
        }
        expect(Tok::rparen, "',' or ')'");
        expect(Tok::defines);
        Formula surface = formula();
        SugarContext context = SugarContext::of(sys);
        for (const auto& p : def.parameters) context.signature.push_back(p);
        def.body = checked(surface, context);
        sys.definitions.push_back(std::move(def));
        break;
      }
      case Tok::kw_axiom: {
        const Token& label = expect(Tok::ident, "an axiom label");
        if (!labels.insert(label.text).second) {
          throw ParseError(label.loc.line, label.loc.column, "a unique axiom label",
                           "duplicate '" + label.text + "'");
        }
        expect(Tok::colon);
        pending.push_back({label.text, formula()});
        break;
      }
      default:
        break;
    }
  }
  if (sys.signature.empty()) fail("a 'vars' or 'func' declaration before the system ends");
  const SugarContext context = SugarContext::of(sys);
  for (const auto& p : pending) sys.axioms.push_back({p.label, checked(p.surface, context), false});
  for (const auto& f : sys.functions) {
    const Variable& v = *find_variable(sys.signature, f);
    sys.axioms.push_back({f + ":function", functionality_axiom(v, sys.signature), true});
  }
  return sys;
}

SourceFile Parser::source() {
  SourceFile file;
  std::set<std::string> systems;
  if (at(Tok::end)) fail("'system'");
  while (!at(Tok::end)) {
    const auto at_token = peek();
    auto sys = system();
    if (!systems.insert(sys.name).second) {
      throw ParseError(at_token.loc.line, at_token.loc.column, "a unique system name",
                       "duplicate '" + sys.name + "'");
    }
    file.systems.push_back(std::move(sys));
  }
  return file;
}

}  // namespace

SourceFile parse_source(std::string_view text) { return Parser(text).source(); }

AxiomSystem parse_axiom_system(std::string_view text) {
  auto file = parse_source(text);
  return std::move(file.systems.front());
}

Formula parse_surface_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

SimpleType parse_type(std::string_view text) {
  Parser p(text);
  SimpleType t = p.type();
  p.expect_end();
  return t;
}

Formula parse_formula(std::string_view text, const SugarContext& context) {
  return checked(parse_surface_formula(text), context);
}

Value parse_value(std::string_view text, const SimpleType& type, const Universe& universe) {
  Parser p(text);
  Value v = p.value(type, universe);
  p.expect_end();
  return v;
}

ModelAssignment parse_model(std::string_view text, const Signature& signature,
                            const Universe& universe) {
  Parser p(text);
  ModelAssignment model;
  model.values.resize(signature.size());
  std::vector<bool> filled(signature.size(), false);
  std::size_t next = 0;
  while (!p.at(Tok::end)) {
    std::size_t slot = next;
    if (p.at(Tok::ident) && p.peek(1).kind == Tok::eq) {
      const Token& name = p.advance();
      p.advance();
      auto it = std::ranges::find(signature, name.text, &Variable::name);
      if (it == signature.end()) {
        throw ParseError(name.loc.line, name.loc.column, "a signature variable",
                         detail::describe(name));
      }
      slot = static_cast<std::size_t>(it - signature.begin());
    }
    if (slot >= signature.size() || filled[slot]) p.fail("one value per signature entry");
    model.values[slot] = p.value(signature[slot].type, universe);
    filled[slot] = true;
    next = slot + 1;
    if (!p.accept(Tok::semicolon)) break;
  }
  p.expect_end();
  if (std::ranges::find(filled, false) != filled.end()) p.fail("a value for every signature entry");
  return model;
}

}  // namespace axcheck
