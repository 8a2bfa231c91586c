#include "doctest.h"

#include "axcheck/parser.hpp"
#include "support.hpp"

using namespace axcheck;

TEST_SUITE("printer") {
  TEST_CASE("identity formula") {
    const auto f = Formula::forall("x", SimpleType::ind(), Formula::equal(Formula::variable("x"), Formula::variable("x")));
    CHECK(pretty_print(f) == "forall x:ind. x = x");
  }

  TEST_CASE("literals render with a hash") {
    const auto f = Formula::equal(Formula::variable("x"), Formula::literal(0));
    CHECK(pretty_print(f).find("#0") != std::string::npos);
  }

  TEST_CASE("negated equality prints as inequality") {
    const auto f = Formula::negation(Formula::equal(Formula::variable("x"), Formula::variable("y")));
    CHECK(pretty_print(f) == "x != y");
  }

  TEST_CASE("corpus axioms round-trip") {
    for (const auto& name : axtest::corpus_names()) {
      const auto sys = axtest::load_corpus(name);
      const auto ctx = SugarContext::of(sys);
      for (const auto& a : sys.axioms) {
        CAPTURE(a.label);
        CHECK(parse_formula(pretty_print(a.formula), ctx) == a.formula);
      }
    }
  }

  TEST_CASE("BA2 round-trips through text") {
    const auto ba = axtest::load_corpus("ba");
    const auto text = pretty_print(ba.axioms[1].formula);
    CHECK(parse_formula(text, SugarContext::of(ba)) == ba.axioms[1].formula);
  }

  TEST_CASE("random formulas up to 12 nodes round-trip") {
    std::mt19937_64 rng(5);
    const SugarContext ctx{axtest::binary_signature(), {}, {}};
    int tested = 0;
    for (int i = 0; i < 20000 && tested < 2000; ++i) {
      const auto f = axtest::random_formula(rng, 5, true);
      if (f.size() > 12) continue;
      ++tested;
      const auto text = pretty_print(f);
      CAPTURE(text);
      REQUIRE(parse_formula(text, ctx) == f);
    }
    CHECK(tested == 2000);
  }

  TEST_CASE("higher-type binders and constants round-trip") {
    const SugarContext ctx{{{"U", parse_type("rel(rel(ind),ind)")}}, {}, {}};
    for (const char* text : {"true", "false", "~true & false", "forall a:rel(ind). exists x:ind. U(a,x) | a(x)",
                             "exists! a:rel(ind). forall x:ind. ~a(x)",
                             "(forall x:ind. true) -> (exists x:ind. false)"}) {
      const auto f = parse_formula(text, ctx);
      CHECK(parse_formula(pretty_print(f), ctx) == f);
    }
  }
}
