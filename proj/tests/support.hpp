#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "axcheck/enumeration.hpp"
#include "axcheck/evaluator.hpp"
#include "axcheck/formula.hpp"
#include "axcheck/isomorphism.hpp"
#include "axcheck/metatheory.hpp"
#include "axcheck/model.hpp"
#include "axcheck/parser.hpp"
#include "axcheck/report.hpp"
#include "axcheck/universe.hpp"

namespace axtest {

std::string read_text(const std::string& path);
std::string corpus_path(const std::string& name);
axcheck::AxiomSystem load_corpus(const std::string& name);
const std::vector<std::string>& corpus_names();

axcheck::Signature binary_signature();
axcheck::AxiomSystem make_system(const std::string& name, const axcheck::Signature& signature,
                                 const std::vector<axcheck::Formula>& axioms);
axcheck::AxiomSystem system_from(const std::string& text);

// R over n individuals as a bitmask; bit x*n+y holds (x,y).
axcheck::ModelAssignment binary_model(std::uint64_t graph);
inline bool holds(std::uint64_t graph, std::uint32_t n, std::uint32_t x, std::uint32_t y) {
  return (graph >> (x * n + y)) & 1U;
}

// Values rebuilt as plain nested sets of tuples, independent of the bitmask
// encoding used by the library.
struct Structural {
  int individual = -1;
  std::vector<std::vector<Structural>> tuples;  // sorted, unique

  friend bool operator<(const Structural& a, const Structural& b);
  friend bool operator==(const Structural& a, const Structural& b);
};

Structural decode(const axcheck::Universe& u, const axcheck::SimpleType& type, axcheck::Value v);
std::vector<Structural> decode_model(const axcheck::Universe& u, const axcheck::Signature& sig,
                                     const axcheck::ModelAssignment& m);
// Relabels individuals; throws std::out_of_range when an individual is unmapped.
Structural relabel(const Structural& s, const std::vector<int>& pi);
void collect_individuals(const Structural& s, std::vector<int>& out);

// Brute-force isomorphism: tries base bijections in lexicographic order and
// compares relabelled structures directly.
std::optional<std::vector<int>> naive_isomorphism(const axcheck::Universe& u, const axcheck::Signature& sig,
                                                  const axcheck::ModelAssignment& p,
                                                  const axcheck::ModelAssignment& q, axcheck::IsoMode mode);

// Closed formulas over R:rel(ind,ind); literals only when `allow_literals`.
axcheck::Formula random_formula(std::mt19937_64& rng, int depth, bool allow_literals = false,
                                std::uint32_t n = 2);

// Hand-coded Hausdorff axioms over a decoded neighbourhood relation.
bool hausdorff_oracle(const axcheck::Universe& u, const axcheck::ModelAssignment& m);

// Direct recursive evaluation of a formula over R:rel(ind,ind), without
// compilation; `graph` uses bit x*n+y for (x,y).
bool naive_eval(const axcheck::Formula& f, std::uint64_t graph, std::uint32_t n);

struct CliResult {
  int exit_code = -1;
  std::string out;
};
CliResult run_cli(const std::string& args);

}  // namespace axtest
