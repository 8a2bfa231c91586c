#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "axcheck/report.hpp"
#include "support.hpp"

using namespace axcheck;

namespace {

Report equiv_report(bool deterministic) {
  Universe u(2);
  const auto sys = axtest::load_corpus("equiv");
  const Analysis a(u, sys);
  Report r;
  r.command = "meta";
  r.config.deterministic = deterministic;
  r.config.parallelism = 4;
  r.system_name = sys.name;
  r.system_hash = content_hash(axtest::read_text(axtest::corpus_path("equiv")));
  for (const auto& j : a.all()) r.judgments.push_back(judgment_json(u, sys.signature, j));
  r.timing_ms = 1.5;
  return r;
}

const Json& judgment_named(const Json& record, const std::string& property) {
  for (const auto& j : record.at("judgments")) {
    if (j.at("property") == property) return j;
  }
  FAIL("no judgment " << property);
  static const Json none;
  return none;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("config defaults") {
    const RunConfig c;
    CHECK(c.n == 2);
    CHECK(c.mode == IsoMode::tarski);
    CHECK(c.cap == 16);
    CHECK(c.bound == 9);
    CHECK(c.limit == 50);
    CHECK(c.format == OutputFormat::text);
    CHECK_NOTHROW(c.validate());
  }

  TEST_CASE("config keys") {
    RunConfig c;
    c.apply("n", "3");
    c.apply("mode", "carnap");
    c.apply("cap", "20");
    c.apply("bound", "7");
    c.apply("limit", "5");
    c.apply("parallelism", "4");
    c.apply("format", "json");
    c.apply("deterministic", "true");
    CHECK(c.n == 3);
    CHECK(c.mode == IsoMode::carnap);
    CHECK(c.cap == 20);
    CHECK(c.bound == 7);
    CHECK(c.limit == 5);
    CHECK(c.parallelism == 4);
    CHECK(c.format == OutputFormat::json);
    CHECK(c.deterministic);
    CHECK_THROWS_AS(c.apply("colour", "red"), std::invalid_argument);
    CHECK_THROWS_AS(c.apply("n", "two"), std::invalid_argument);
    CHECK_THROWS_AS(c.apply("n", "3x"), std::invalid_argument);
    CHECK_THROWS_AS(c.apply("mode", "quine"), std::invalid_argument);
    CHECK_THROWS_AS(c.apply("format", "xml"), std::invalid_argument);
  }

  TEST_CASE("config validation") {
    RunConfig c;
    c.n = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = RunConfig{};
    c.cap = 25;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.cap = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = RunConfig{};
    c.bound = 33;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  }

  TEST_CASE("config text and files") {
    RunConfig c;
    c.apply_config_text("# universe\nn=3\n\n  mode = carnap  # inline\nbound=5\n");
    CHECK(c.n == 3);
    CHECK(c.mode == IsoMode::carnap);
    CHECK(c.bound == 5);
    CHECK_THROWS_AS(c.apply_config_text("n"), std::invalid_argument);

    const std::string path = "/tmp/axcheck_report_test.uni";
    {
      std::ofstream out(path);
      out << "n=1\nlimit=3\n";
    }
    RunConfig base;
    base.mode = IsoMode::carnap;
    const auto loaded = load_config_file(path, base);
    CHECK(loaded.n == 1);
    CHECK(loaded.limit == 3);
    CHECK(loaded.mode == IsoMode::carnap);
    std::remove(path.c_str());
    CHECK_THROWS(load_config_file("/nonexistent/axcheck.uni"));
  }

  TEST_CASE("content hash is SHA-256") {
    CHECK(content_hash("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(content_hash("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  }

  TEST_CASE("evidence kinds") {
    Universe u(2);
    const auto sig = axtest::binary_signature();
    const auto m = evidence_json(u, sig, axtest::binary_model(0b1001));
    CHECK(m.at("kind") == "model");
    CHECK(m.at("value") == "R={(0,0),(1,1)}");

    const auto pair = evidence_json(
        u, sig, ModelPair{axtest::binary_model(0b0010), axtest::binary_model(0b0100), Correlator(IsoMode::tarski, {1U, 0U})});
    CHECK(pair.at("kind") == "pair");
    CHECK(pair.at("first") == "R={(0,1)}");
    CHECK(pair.at("correlator").at("map") == Json::parse("[[0,1],[1,0]]"));
    const auto bare = evidence_json(u, sig, ModelPair{axtest::binary_model(1), axtest::binary_model(2), std::nullopt});
    CHECK_FALSE(bare.contains("correlator"));

    const auto f = evidence_json(u, sig, parse_formula("forall x. R(x,x)", {sig, {}, {}}));
    CHECK(f.at("kind") == "formula");
    CHECK(f.at("value") == "forall x:ind. R(x,x)");

    const auto h = evidence_json(u, sig, IsoClassPredicate{sig, axtest::binary_model(0b1001), IsoMode::carnap});
    CHECK(h.at("kind") == "iso_class");
    CHECK(h.at("representative") == "R={(0,0),(1,1)}");
    CHECK(h.at("mode") == "carnap");

    const auto p = evidence_json(u, sig, PartitionSummary{3, {{axtest::binary_model(0b1001), 1}, {axtest::binary_model(0b1111), 2}}});
    CHECK(p.at("kind") == "partition");
    CHECK(p.at("models") == 3);
    CHECK(p.at("classes").size() == 2);
  }

  TEST_CASE("judgment records") {
    const auto record = to_json(equiv_report(true));
    const auto& fork = judgment_named(record, "forkable");
    CHECK(fork.at("absolute") == true);
    CHECK(fork.at("constructive") == true);
    CHECK(fork.at("witness").at("h").at("kind") == "iso_class");
    const auto& mono = judgment_named(record, "monomorphic");
    CHECK(mono.at("absolute") == false);
    CHECK(mono.at("counterexample").at("pair").at("second") == "R={(0,0),(0,1),(1,0),(1,1)}");
    CHECK(mono.at("conjuncts").is_array());
    const auto& syn = judgment_named(record, "forkable_syntactic");
    CHECK(syn.at("witness").at("g").at("value") == "forall x1:ind. forall x2:ind. R(x1,x2)");
    const auto& dec = judgment_named(record, "decidable");
    CHECK(dec.at("provenance").at("n") == 2);
    CHECK(dec.at("notes").dump().find("finite-universe-trivial") != std::string::npos);
  }

  TEST_CASE("deterministic records omit timing and parallelism") {
    const auto det = to_json(equiv_report(true));
    CHECK_FALSE(det.contains("timing_ms"));
    CHECK_FALSE(det.at("config").contains("parallelism"));
    CHECK(det.at("system").at("name") == "equiv");
    CHECK(det.at("system").at("hash").get<std::string>().size() == 64);
    const auto live = to_json(equiv_report(false));
    CHECK(live.at("timing_ms") == 1.5);
    CHECK(live.at("config").at("parallelism") == 4);
    CHECK(det.dump() == to_json(equiv_report(true)).dump());
  }

  TEST_CASE("JSON round-trips") {
    const auto record = to_json(equiv_report(true));
    const auto text = record.dump(2);
    CHECK(Json::parse(text) == record);
    CHECK(Json::parse(text).dump(2) == text);
  }

  TEST_CASE("model listings") {
    Report r = equiv_report(true);
    r.command = "models";
    r.judgments.clear();
    r.models = ModelListing{5, {"R={(0,0),(1,1)}"}};
    const auto record = to_json(r);
    CHECK(record.at("models").at("count") == 5);
    CHECK(record.at("models").at("shown").size() == 1);
    CHECK(record.at("models").at("truncated") == true);
    const auto text = render_text(record);
    CHECK(text.find("models: 5") != std::string::npos);
    CHECK(text.find("  R={(0,0),(1,1)}\n") != std::string::npos);
    CHECK(text.find("... 4 more") != std::string::npos);
  }

  TEST_CASE("text view is rendered from the record") {
    const auto text = render_text(to_json(equiv_report(false)));
    CHECK(text.find("axcheck meta: system equiv") != std::string::npos);
    CHECK(text.find("universe: n=2 mode=tarski cap=16 bound=9") != std::string::npos);
    CHECK(text.find("monomorphic: false") != std::string::npos);
    CHECK(text.find("forkable: true") != std::string::npos);
    CHECK(text.find("time: 1.5 ms") != std::string::npos);
    CHECK(render_text(to_json(equiv_report(true))).find("time:") == std::string::npos);
  }
}
