#include "doctest.h"

#include <set>

#include "axcheck/synthesis.hpp"
#include "support.hpp"

using namespace axcheck;

namespace {

std::vector<Formula> collect(const PureFormulaEnumerator& e) {
  std::vector<Formula> out;
  e.for_each([&](const Formula& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// True when some quantifier binds a variable its body never mentions.
bool has_vacuous_quantifier(const Formula& f) {
  if (is_quantifier(f.kind())) {
    const auto names = free_variable_names(f.body());
    if (std::find(names.begin(), names.end(), f.name()) == names.end()) return true;
  }
  for (const auto& c : f.children()) {
    if (has_vacuous_quantifier(c)) return true;
  }
  return false;
}

bool has_double_negation(const Formula& f) {
  if (f.kind() == FormulaKind::negation && f.child(0).kind() == FormulaKind::negation) return true;
  for (const auto& c : f.children()) {
    if (has_double_negation(c)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("synthesis") {
  TEST_CASE("enumerated formulas are pure, closed, well typed and size ordered") {
    const auto sig = axtest::binary_signature();
    const PureFormulaEnumerator e(sig, 9);
    const auto all = collect(e);
    CHECK(all.size() == e.count());
    CHECK(all.size() == 104);
    std::size_t last = 0;
    std::set<std::string> seen;
    for (const auto& f : all) {
      CHECK(is_pure(f));
      CHECK(free_variables(f, sig).size() <= 1);
      for (const auto& v : free_variable_names(f)) CHECK(v == "R");
      CHECK(check_types(f, sig).empty());
      CHECK(f.size() >= last);
      CHECK(f.size() <= 9);
      last = f.size();
      CHECK(seen.insert(pretty_print(f)).second);
      CHECK_FALSE(has_vacuous_quantifier(f));
      CHECK_FALSE(has_double_negation(f));
      CHECK(f.kind() != FormulaKind::truth);
    }
  }

  TEST_CASE("per-size counts sum to the total") {
    const PureFormulaEnumerator e(axtest::binary_signature(), 9);
    std::uint64_t total = 0;
    for (std::size_t s = 0; s <= 9; ++s) total += e.count_of_size(s);
    CHECK(total == e.count());
    CHECK(e.count_of_size(4) == 0);
    // Qx R(x,x); Qx Qy x=y
    CHECK(e.count_of_size(5) == 6);
    // negations of size 5; Qx ~R(x,x); Qx ~Qy x=y; Qx Qy R(x,y) and R(y,x); Qx Qy x!=y
    CHECK(e.count_of_size(6) == 6 + 2 + 4 + 8 + 4);
  }

  TEST_CASE("smallest formulas") {
    const PureFormulaEnumerator e(axtest::binary_signature(), 6);
    const auto all = collect(e);
    REQUIRE_FALSE(all.empty());
    CHECK(pretty_print(all.front()) == "forall x1:ind. R(x1,x1)");
  }

  TEST_CASE("enumeration is deterministic") {
    const auto a = collect(PureFormulaEnumerator(axtest::binary_signature(), 9));
    const auto b = collect(PureFormulaEnumerator(axtest::binary_signature(), 9));
    CHECK(a == b);
    const PureFormulaEnumerator shared(axtest::binary_signature(), 9);
    CHECK(collect(shared) == collect(shared));
  }

  TEST_CASE("early stop") {
    const PureFormulaEnumerator e(axtest::binary_signature(), 9);
    int seen = 0;
    CHECK_FALSE(e.for_each([&](const Formula&) { return ++seen < 3; }));
    CHECK(seen == 3);
    CHECK(e.for_each([](const Formula&) { return true; }));
  }

  TEST_CASE("quantified types come from signature components") {
    const auto h = axtest::load_corpus("hausdorff");
    const PureFormulaEnumerator e(h.signature, 9);
    const auto& qt = e.quantified_types();
    CHECK(std::find(qt.begin(), qt.end(), SimpleType::ind()) != qt.end());
    CHECK(std::find(qt.begin(), qt.end(), parse_type("rel(ind)")) != qt.end());
    CHECK(std::find(qt.begin(), qt.end(), parse_type("rel(rel(ind),ind)")) == qt.end());
    CHECK(e.count() == 192);
    const auto pa = axtest::load_corpus("pa");
    CHECK(PureFormulaEnumerator(pa.signature, 9).count() == 970);
  }

  TEST_CASE("bound names avoid signature names") {
    const Signature sig{{"x1", parse_type("rel(ind)")}};
    const auto all = collect(PureFormulaEnumerator(sig, 5));
    REQUIRE_FALSE(all.empty());
    for (const auto& f : all) {
      if (is_quantifier(f.kind())) CHECK(f.name() != "x1");
    }
  }

  TEST_CASE("size bound is validated") {
    CHECK_THROWS_AS(PureFormulaEnumerator(axtest::binary_signature(), 64), std::invalid_argument);
  }
}
