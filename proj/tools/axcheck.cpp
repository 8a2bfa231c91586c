#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "axcheck/errors.hpp"
#include "axcheck/metatheory.hpp"
#include "axcheck/parser.hpp"
#include "axcheck/report.hpp"

using namespace axcheck;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kParse = 2, kCap = 3, kUsage = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string file;
  std::string config_path;
  std::uint32_t n = 0;
  std::string mode;
  std::uint64_t cap = 0;
  std::size_t bound = 0;
  std::size_t limit = 0;
  unsigned parallelism = 0;
  bool json = false;
  bool deterministic = false;
  std::string g;
  std::string pair;
  std::string left;
  std::string right;
  std::map<std::string, CLI::Option*> given;
};

void add_common(CLI::App& cmd, Flags& f) {
  cmd.add_option("file", f.file, "axiom system (.axs)")->required();
  f.given["n"] = cmd.add_option("--n", f.n, "number of individuals");
  f.given["mode"] = cmd.add_option("--mode", f.mode, "isomorphism mode: carnap or tarski");
  f.given["cap"] = cmd.add_option("--cap", f.cap, "largest tuple space a quantifier may range over");
  f.given["bound"] = cmd.add_option("--bound", f.bound, "size bound for formula synthesis");
  f.given["limit"] = cmd.add_option("--limit", f.limit, "models listed in full");
  f.given["parallelism"] = cmd.add_option("--parallelism", f.parallelism, "enumeration threads");
  f.given["json"] = cmd.add_flag("--json", f.json, "emit JSON");
  f.given["deterministic"] = cmd.add_flag("--deterministic", f.deterministic, "omit timing and thread count");
  cmd.add_option("--config", f.config_path, "key=value configuration file (.uni)");
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (!f.config_path.empty()) cfg = load_config_file(f.config_path, cfg);
  auto given = [&](const char* key) { return f.given.at(key)->count() > 0; };
  if (given("n")) cfg.n = f.n;
  if (given("mode")) cfg.mode = parse_iso_mode(f.mode);
  if (given("cap")) cfg.cap = f.cap;
  if (given("bound")) cfg.bound = f.bound;
  if (given("limit")) cfg.limit = f.limit;
  if (given("parallelism")) cfg.parallelism = f.parallelism;
  if (given("json")) cfg.format = f.json ? OutputFormat::json : OutputFormat::text;
  if (given("deterministic")) cfg.deterministic = f.deterministic;
  cfg.validate();
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t parse_index(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("not a model index: " + text);
  return v;
}

ModelListing listing(const Universe& u, const ModelSet& ms, std::size_t limit) {
  ModelListing out;
  out.count = ms.size();
  for (std::size_t i = 0; i < ms.size() && i < limit; ++i) {
    out.shown.push_back(std::to_string(i) + ": " + format_model(u, ms.signature, ms.models[i]));
  }
  return out;
}

int run(const std::string& command, const Flags& f) {
  const auto start = std::chrono::steady_clock::now();
  const std::string source = read_file(f.file);
  const RunConfig cfg = resolve(f);
  const AxiomSystem system = parse_axiom_system(source);
  const Universe universe(cfg.n, cfg.cap);
  const Analysis analysis(universe, system,
                          {.mode = cfg.mode, .size_bound = cfg.bound, .enumeration = {cfg.parallelism}});
  const auto& sig = system.signature;

  Report report;
  report.command = command;
  report.config = cfg;
  report.system_name = system.name;
  report.system_hash = content_hash(source);
  auto add = [&](const Judgment& j) { report.judgments.push_back(judgment_json(universe, sig, j)); };

  if (command == "models") {
    report.models = listing(universe, analysis.models(), cfg.limit);
  } else if (command == "meta" || command == "report") {
    if (command == "report") report.models = listing(universe, analysis.models(), cfg.limit);
    for (const auto& j : analysis.all()) add(j);
  } else if (command == "iso") {
    ModelAssignment p;
    ModelAssignment q;
    if (!f.pair.empty()) {
      const auto comma = f.pair.find(',');
      if (comma == std::string::npos) throw UsageError("--pair expects i,j");
      const auto i = parse_index(f.pair.substr(0, comma));
      const auto j = parse_index(f.pair.substr(comma + 1));
      const auto& ms = analysis.models();
      if (i >= ms.size() || j >= ms.size()) {
        throw UsageError("model index out of range: the system has " + std::to_string(ms.size()) + " model(s)");
      }
      p = ms.models[i];
      q = ms.models[j];
    } else if (!f.left.empty() && !f.right.empty()) {
      p = parse_model(f.left, sig, universe);
      q = parse_model(f.right, sig, universe);
    } else {
      throw UsageError("iso needs --pair i,j or both --left and --right");
    }
    Judgment j;
    j.property = "isomorphic";
    j.provenance = {universe.base_size(), cfg.mode, universe.quantifier_cap(), cfg.bound};
    const auto c = are_isomorphic(universe, sig, p, q, cfg.mode);
    j.absolute = c.has_value();
    if (c) {
      j.witness.push_back({"correlator", ModelPair{p, q, c}});
    } else {
      j.counterexample.push_back({"pair", ModelPair{p, q, std::nullopt}});
      j.notes.push_back("not isomorphic");
    }
    add(j);
  } else if (command == "fork") {
    if (!f.g.empty()) {
      add(analysis.forkable_at(parse_formula(f.g, SugarContext::of(system))));
    } else {
      const auto synthesized = analysis.forkable_syntactic();
      add(synthesized);
      if (const auto* e = synthesized.find("g")) add(analysis.forkable_at(std::get<Formula>(e->value)));
    }
  }

  report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const Json record = to_json(report);
  if (cfg.format == OutputFormat::json) {
    std::cout << record.dump(2) << "\n";
  } else {
    std::cout << render_text(record);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-universe analysis of axiom systems in simple type theory"};
  app.require_subcommand(1);
  std::map<std::string, Flags> flags;
  auto* models = app.add_subcommand("models", "list the models of a system");
  auto* meta = app.add_subcommand("meta", "decide the metatheoretic properties of a system");
  auto* iso = app.add_subcommand("iso", "search for an isomorphism between two models");
  auto* fork = app.add_subcommand("fork", "check forkability at a formula, or synthesize one");
  auto* report = app.add_subcommand("report", "models and metatheory in one record");
  for (auto* cmd : {models, meta, iso, fork, report}) add_common(*cmd, flags[cmd->get_name()]);
  iso->add_option("--pair", flags["iso"].pair, "model indices i,j into the model list");
  iso->add_option("--left", flags["iso"].left, "first model, e.g. \"R={(0,1)}\"");
  iso->add_option("--right", flags["iso"].right, "second model");
  fork->add_option("--g", flags["fork"].g, "formula over the system's primitive signs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, flags.at(command));
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kParse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
