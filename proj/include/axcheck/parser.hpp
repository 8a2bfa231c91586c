#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "axcheck/formula.hpp"
#include "axcheck/model.hpp"
#include "axcheck/universe.hpp"

namespace axcheck {

// Concrete syntax of `.axs` files:
//
//   system <name>
//   vars   <v>:<type> ...
//   func   <f>:rel(t1,...,tk)        // relation constrained to be a total function
//   define <name>(<p>:<type>, ...) := <formula>
//   axiom  <label>: <formula>
//
// Types: ind | rel(t1,...,tk) | set(t). Formulas use `forall x:t.`, `exists`,
// `exists!`, `~`, `&`, `|`, `->`, `<->`, `=`, `!=`, `in`, `notin`, `#k`, and
// their Unicode counterparts. `//` starts a comment.
struct SourceFile {
  std::vector<AxiomSystem> systems;
};

SourceFile parse_source(std::string_view text);
// The first system of `text`; throws ParseError when there is none.
AxiomSystem parse_axiom_system(std::string_view text);

// Raw surface syntax with sugar retained.
Formula parse_surface_formula(std::string_view text);
SimpleType parse_type(std::string_view text);

struct SugarContext {
  Signature signature;
  std::vector<Definition> definitions;
  std::vector<std::string> functions;

  static SugarContext of(const AxiomSystem& system) {
    return {system.signature, system.definitions, system.functions};
  }
};

// Rewrites sugar (subset, inter-empty, in/notin, dom, ran, field, inter,
// definitions, function application) into core nodes. Idempotent on core
// formulas. Throws UnknownSugar or TypeError.
Formula expand_sugar(const Formula& formula, const SugarContext& context);

// Parses, expands, and type checks a formula against a system's vocabulary.
Formula parse_formula(std::string_view text, const SugarContext& context);

std::string pretty_print(const Formula& formula);

// Value literals: `0`, `#0`, `{}`, `{0,1}`, `{(0,1),(1,0)}`, `{({0},0)}`.
Value parse_value(std::string_view text, const SimpleType& type, const Universe& universe);
// `R={(0,1)}; b=0`, or bare values separated by `;` in signature order.
ModelAssignment parse_model(std::string_view text, const Signature& signature,
                            const Universe& universe);

}  // namespace axcheck
