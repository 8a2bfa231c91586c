#include "doctest.h"

#include <algorithm>
#include <set>

#include "axcheck/enumeration.hpp"
#include "support.hpp"

using namespace axcheck;

namespace {

const SugarContext kBinary{axtest::binary_signature(), {}, {}};

AxiomSystem binary_system(std::initializer_list<const char*> axioms) {
  std::vector<Formula> fs;
  for (const char* a : axioms) fs.push_back(parse_formula(a, kBinary));
  return axtest::make_system("t", axtest::binary_signature(), fs);
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("admissible model counts") {
    CHECK(AdmissibleModels(Universe(2), axtest::binary_signature()).size() == 16);
    const Signature ab{{"A", parse_type("rel(ind)")}, {"b", SimpleType::ind()}};
    CHECK(AdmissibleModels(Universe(1), ab).size() == 2);
    CHECK(admissible_models(Universe(1), ab).size() == 2);
    const Signature hs{{"U", parse_type("rel(rel(ind),ind)")}};
    CHECK(AdmissibleModels(Universe(2), hs).size() == 256);
  }

  TEST_CASE("admissible models are the canonical cartesian product") {
    Universe u(2);
    const Signature sig{{"A", parse_type("rel(ind)")}, {"b", SimpleType::ind()}, {"R", parse_type("rel(ind,ind)")}};
    const auto all = admissible_models(u, sig);
    REQUIRE(all.size() == 4 * 2 * 16);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    const AdmissibleModels view(u, sig);
    for (std::uint64_t i = 0; i < all.size(); ++i) {
      REQUIRE(view.at(i) == all[i]);
      REQUIRE(view.index_of(all[i]) == i);
      REQUIRE(is_admissible(u, sig, all[i]));
    }
    CHECK_THROWS(view.at(all.size()));
  }

  TEST_CASE("admissible enumeration respects the cap") {
    const Signature hs{{"U", parse_type("rel(rel(ind),ind)")}};
    CHECK_THROWS_AS(AdmissibleModels(Universe(3), hs), CapExceeded);
    CHECK_NOTHROW(AdmissibleModels(Universe(3, 24), hs));
  }

  TEST_CASE("strict total order at n=2 has two models") {
    Universe u(2);
    const auto ms = models_of(u, axtest::load_corpus("total_order"));
    REQUIRE(ms.size() == 2);
    CHECK(format_model(u, ms.signature, ms.models[0]) == "R={(0,1)}");
    CHECK(format_model(u, ms.signature, ms.models[1]) == "R={(1,0)}");
  }

  TEST_CASE("BA has no models up to n=3") {
    for (std::uint32_t n = 1; n <= 3; ++n) CHECK(models_of(Universe(n), axtest::load_corpus("ba")).empty());
  }

  TEST_CASE("Hausdorff at n=1 contains U1") {
    Universe u(1);
    const auto h = axtest::load_corpus("hausdorff");
    const auto ms = models_of(u, h);
    CHECK_FALSE(ms.empty());
    CHECK(ms.contains(parse_model("U={({0},0)}", h.signature, u)));
  }

  TEST_CASE("models_of agrees with brute-force oracles") {
    const auto h = axtest::load_corpus("hausdorff");
    for (std::uint32_t n = 1; n <= 2; ++n) {
      Universe u(n);
      std::vector<ModelAssignment> expected;
      for (const auto& m : admissible_models(u, h.signature)) {
        if (axtest::hausdorff_oracle(u, m)) expected.push_back(m);
      }
      CHECK(models_of(u, h).models == expected);
    }
    for (const auto& name : axtest::corpus_names()) {
      const auto sys = axtest::load_corpus(name);
      for (std::uint32_t n = 1; n <= 3; ++n) {
        Universe u(n);
        try {
          const auto ms = models_of(u, sys);
          std::vector<ModelAssignment> expected;
          for (const auto& m : admissible_models(u, sys.signature)) {
            if (satisfies(u, sys, m)) expected.push_back(m);
          }
          CHECK(ms.models == expected);
          CHECK(std::is_sorted(ms.models.begin(), ms.models.end()));
        } catch (const CapExceeded&) {
          CHECK(name == "hausdorff");
        }
      }
    }
  }

  TEST_CASE("binary systems agree with the naive evaluator") {
    for (const char* name : {"total_order", "equiv", "reflexive", "full_relation"}) {
      const auto sys = axtest::load_corpus(name);
      const auto f = sys.conjunction();
      for (std::uint32_t n = 1; n <= 3; ++n) {
        std::vector<ModelAssignment> expected;
        for (std::uint64_t g = 0; g < (std::uint64_t{1} << (n * n)); ++g) {
          if (axtest::naive_eval(f, g, n)) expected.push_back(axtest::binary_model(g));
        }
        std::sort(expected.begin(), expected.end());
        CHECK(models_of(Universe(n), sys).models == expected);
      }
    }
    CHECK(models_of(Universe(2), axtest::load_corpus("reflexive")).size() == 4);
    CHECK(models_of(Universe(3), axtest::load_corpus("reflexive")).size() == 64);
    CHECK(models_of(Universe(3), axtest::load_corpus("total_order")).size() == 6);
    CHECK(models_of(Universe(3), axtest::load_corpus("equiv")).size() == 5);
  }

  TEST_CASE("parallel enumeration matches serial") {
    const auto h = axtest::load_corpus("hausdorff");
    const auto serial = models_of(Universe(2), h);
    for (unsigned p : {2U, 3U, 4U, 8U}) CHECK(models_of(Universe(2), h, {p}).models == serial.models);
    const auto eq = axtest::load_corpus("reflexive");
    CHECK(models_of(Universe(3), eq, {4}).models == models_of(Universe(3), eq).models);
  }

  TEST_CASE("submodel examples") {
    const auto p = axtest::binary_model(0b0010);
    CHECK(is_submodel(p, p));
    CHECK(is_submodel(axtest::binary_model(0), axtest::binary_model(0b0110)));
    CHECK_FALSE(is_submodel(axtest::binary_model(0b0010), axtest::binary_model(0b0100)));
    CHECK_THROWS_AS(is_submodel(p, ModelAssignment{}), SignatureMismatch);
    CHECK_THROWS_AS(is_submodel(p, ModelAssignment{{Value::individual(0)}}), SignatureMismatch);
    const ModelAssignment a{{Value::relation(1), Value::individual(0)}};
    const ModelAssignment b{{Value::relation(3), Value::individual(1)}};
    CHECK_FALSE(is_submodel(a, b));
    CHECK(is_submodel(a, ModelAssignment{{Value::relation(3), Value::individual(0)}}));
  }

  TEST_CASE("submodel is a partial order") {
    for (std::uint32_t n = 1; n <= 2; ++n) {
      const auto all = admissible_models(Universe(n), axtest::binary_signature());
      for (const auto& p : all) {
        REQUIRE(is_submodel(p, p));
        for (const auto& q : all) {
          if (is_submodel(p, q) && is_submodel(q, p)) REQUIRE(p == q);
          for (const auto& r : all) {
            if (is_submodel(p, q) && is_submodel(q, r)) REQUIRE(is_submodel(p, r));
          }
        }
      }
    }
  }

  TEST_CASE("extremal examples") {
    Universe u(2);
    const auto trivial = binary_system({"R = R"});
    CHECK(is_maximal(u, trivial, axtest::binary_model(0b1111)));
    const auto transitive = binary_system({"forall x, y, z. R(x,y) & R(y,z) -> R(x,z)"});
    CHECK(is_minimal(u, transitive, axtest::binary_model(0)));
    const auto reflexive = axtest::load_corpus("reflexive");
    const auto diagonal = axtest::binary_model(0b1001);
    CHECK(is_minimal(u, reflexive, diagonal));
    CHECK_FALSE(is_maximal(u, reflexive, diagonal));
    CHECK_THROWS_AS(is_maximal(u, reflexive, axtest::binary_model(0)), NotAModel);
    CHECK_THROWS_AS(is_minimal(models_of(u, reflexive), axtest::binary_model(0)), NotAModel);
  }

  TEST_CASE("maximality matches a direct double loop") {
    for (const auto& name : {"reflexive", "equiv", "total_order", "full_relation"}) {
      for (std::uint32_t n = 1; n <= 3; ++n) {
        Universe u(n);
        const auto sys = axtest::load_corpus(name);
        const auto ms = models_of(u, sys);
        bool all_max = true;
        for (const auto& p : ms.models) {
          bool max = true;
          bool min = true;
          for (const auto& q : ms.models) {
            if (q == p) continue;
            if ((p.values[0].graph() & ~q.values[0].graph()) == 0) max = false;
            if ((q.values[0].graph() & ~p.values[0].graph()) == 0) min = false;
          }
          REQUIRE(is_maximal(u, sys, p) == max);
          REQUIRE(is_maximal(ms, p) == max);
          REQUIRE(is_minimal(u, sys, p) == min);
          all_max = all_max && max;
        }
        CHECK(is_hilbert_complete(u, sys).complete == all_max);
      }
    }
  }

  TEST_CASE("Hilbert completeness examples") {
    Universe u(2);
    CHECK(is_hilbert_complete(u, axtest::load_corpus("full_relation")).complete);
    const auto refl = is_hilbert_complete(u, axtest::load_corpus("reflexive"));
    REQUIRE_FALSE(refl.complete);
    REQUIRE(refl.counterexample.has_value());
    CHECK(refl.counterexample->first == axtest::binary_model(0b1001));
    CHECK(refl.counterexample->second == axtest::binary_model(0b1111));
    CHECK(is_submodel(refl.counterexample->first, refl.counterexample->second));
    const auto ba = is_hilbert_complete(u, axtest::load_corpus("ba"));
    CHECK(ba.complete);
    CHECK_FALSE(ba.counterexample.has_value());
  }

  TEST_CASE("adding an axiom never enlarges the model class") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
      const auto a = axtest::random_formula(rng, 4);
      const auto b = axtest::random_formula(rng, 4);
      for (std::uint32_t n = 1; n <= 2; ++n) {
        Universe u(n);
        const auto one = models_of(u, axtest::make_system("one", axtest::binary_signature(), {a}));
        const auto two = models_of(u, axtest::make_system("two", axtest::binary_signature(), {a, b}));
        for (const auto& m : two.models) REQUIRE(one.contains(m));
      }
    }
  }
}
