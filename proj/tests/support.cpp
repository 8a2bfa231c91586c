#include "support.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace axtest {

using namespace axcheck;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string corpus_path(const std::string& name) { return std::string(AXCHECK_CORPUS_DIR) + "/" + name + ".axs"; }

AxiomSystem load_corpus(const std::string& name) { return parse_axiom_system(read_text(corpus_path(name))); }

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"hausdorff", "pa", "ba", "total_order", "equiv", "reflexive",
                                              "full_relation"};
  return names;
}

Signature binary_signature() { return {{"R", SimpleType::rel({SimpleType::ind(), SimpleType::ind()})}}; }

AxiomSystem make_system(const std::string& name, const Signature& signature, const std::vector<Formula>& axioms) {
  AxiomSystem s;
  s.name = name;
  s.signature = signature;
  for (std::size_t i = 0; i < axioms.size(); ++i) s.axioms.push_back({"A" + std::to_string(i + 1), axioms[i], false});
  return s;
}

AxiomSystem system_from(const std::string& text) { return parse_axiom_system(text); }

ModelAssignment binary_model(std::uint64_t graph) { return {{Value::relation(graph)}}; }

bool operator<(const Structural& a, const Structural& b) {
  if (a.individual != b.individual) return a.individual < b.individual;
  return a.tuples < b.tuples;
}

bool operator==(const Structural& a, const Structural& b) {
  return a.individual == b.individual && a.tuples == b.tuples;
}

Structural decode(const Universe& u, const SimpleType& type, Value v) {
  Structural s;
  if (type.is_ind()) {
    s.individual = static_cast<int>(v.index());
    return s;
  }
  for (const auto& tuple : u.tuples(type, v)) {
    std::vector<Structural> row;
    for (std::size_t i = 0; i < tuple.size(); ++i) row.push_back(decode(u, type.component(i), tuple[i]));
    s.tuples.push_back(std::move(row));
  }
  std::sort(s.tuples.begin(), s.tuples.end());
  return s;
}

std::vector<Structural> decode_model(const Universe& u, const Signature& sig, const ModelAssignment& m) {
  std::vector<Structural> out;
  for (std::size_t i = 0; i < sig.size(); ++i) out.push_back(decode(u, sig[i].type, m.values[i]));
  return out;
}

Structural relabel(const Structural& s, const std::vector<int>& pi) {
  Structural out;
  if (s.individual >= 0) {
    const int target = pi.at(static_cast<std::size_t>(s.individual));
    if (target < 0) throw std::out_of_range("unmapped individual");
    out.individual = target;
    return out;
  }
  for (const auto& row : s.tuples) {
    std::vector<Structural> mapped;
    for (const auto& c : row) mapped.push_back(relabel(c, pi));
    out.tuples.push_back(std::move(mapped));
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  out.tuples.erase(std::unique(out.tuples.begin(), out.tuples.end()), out.tuples.end());
  return out;
}

void collect_individuals(const Structural& s, std::vector<int>& out) {
  if (s.individual >= 0) out.push_back(s.individual);
  for (const auto& row : s.tuples) {
    for (const auto& c : row) collect_individuals(c, out);
  }
}

std::optional<std::vector<int>> naive_isomorphism(const Universe& u, const Signature& sig, const ModelAssignment& p,
                                                  const ModelAssignment& q, IsoMode mode) {
  const auto sp = decode_model(u, sig, p);
  const auto sq = decode_model(u, sig, q);
  const int n = static_cast<int>(u.base_size());
  std::vector<int> sources;
  std::vector<int> targets;
  if (mode == IsoMode::tarski) {
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), 0);
    targets = sources;
  } else {
    for (const auto& s : sp) collect_individuals(s, sources);
    for (const auto& s : sq) collect_individuals(s, targets);
    for (auto* v : {&sources, &targets}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    if (sources.size() != targets.size()) return std::nullopt;
  }
  do {
    std::vector<int> pi(n, -1);
    for (std::size_t i = 0; i < sources.size(); ++i) pi[sources[i]] = targets[i];
    bool all = true;
    for (std::size_t i = 0; i < sp.size() && all; ++i) all = relabel(sp[i], pi) == sq[i];
    if (all) return pi;
  } while (std::next_permutation(targets.begin(), targets.end()));
  return std::nullopt;
}

namespace {

Formula random_formula_in(std::mt19937_64& rng, int depth, std::vector<std::string>& scope, bool literals,
                          std::uint32_t n) {
  auto pick = [&](std::size_t k) { return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng); };
  auto term = [&]() {
    if (literals && pick(4) == 0) return Formula::literal(static_cast<std::uint32_t>(pick(n)));
    return Formula::variable(scope[pick(scope.size())]);
  };
  const bool must_bind = scope.empty();
  const std::size_t choice = must_bind ? 7 + pick(3) : depth <= 0 ? pick(2) : pick(10);
  switch (choice) {
    case 0:
      return Formula::apply(Formula::variable("R"), {term(), term()});
    case 1:
      return Formula::equal(term(), term());
    case 2:
      return Formula::negation(random_formula_in(rng, depth - 1, scope, literals, n));
    case 3:
    case 4:
    case 5:
    case 6: {
      constexpr FormulaKind kinds[] = {FormulaKind::conjunction, FormulaKind::disjunction,
                                       FormulaKind::implication, FormulaKind::equivalence};
      Formula lhs = random_formula_in(rng, depth - 1, scope, literals, n);
      Formula rhs = random_formula_in(rng, depth - 1, scope, literals, n);
      return Formula::binary(kinds[choice - 3], lhs, rhs);
    }
    default: {
      constexpr FormulaKind kinds[] = {FormulaKind::forall, FormulaKind::exists, FormulaKind::exists_unique};
      const std::string name = "v" + std::to_string(scope.size());
      scope.push_back(name);
      Formula body = random_formula_in(rng, depth - 1, scope, literals, n);
      scope.pop_back();
      return Formula::quantifier(kinds[choice - 7], name, SimpleType::ind(), body);
    }
  }
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, int depth, bool allow_literals, std::uint32_t n) {
  std::vector<std::string> scope;
  return random_formula_in(rng, depth, scope, allow_literals, n);
}

bool hausdorff_oracle(const Universe& u, const ModelAssignment& m) {
  const std::uint32_t n = u.base_size();
  const std::uint32_t sets = 1U << n;
  std::vector<std::vector<bool>> nb(sets, std::vector<bool>(n, false));
  const auto s = decode(u, SimpleType::rel({SimpleType::set(SimpleType::ind()), SimpleType::ind()}), m.values.at(0));
  for (const auto& row : s.tuples) {
    std::uint32_t mask = 0;
    for (const auto& element : row[0].tuples) mask |= 1U << element[0].individual;
    nb[mask][row[1].individual] = true;
  }
  auto in = [](std::uint32_t x, std::uint32_t a) { return ((a >> x) & 1U) != 0; };
  auto neighbourhood = [&](std::uint32_t a) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (nb[a][x]) return true;
    }
    return false;
  };
  auto point = [&](std::uint32_t x) {
    for (std::uint32_t a = 0; a < sets; ++a) {
      if (nb[a][x]) return true;
    }
    return false;
  };
  for (std::uint32_t a = 0; a < sets; ++a) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (neighbourhood(a) && in(x, a) && !point(x)) return false;  // Ax1a
      if (nb[a][x] && !in(x, a)) return false;                      // Ax1b
      if (neighbourhood(a) && in(x, a)) {                           // Ax3
        bool found = false;
        for (std::uint32_t c = 0; c < sets && !found; ++c) found = nb[c][x] && (c & ~a) == 0;
        if (!found) return false;
      }
      for (std::uint32_t b = 0; b < sets; ++b) {  // Ax2
        if (!(nb[a][x] && nb[b][x])) continue;
        bool found = false;
        for (std::uint32_t c = 0; c < sets && !found; ++c) found = nb[c][x] && (c & ~(a & b)) == 0;
        if (!found) return false;
      }
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {  // Ax4
    for (std::uint32_t y = 0; y < n; ++y) {
      if (x == y || !point(x) || !point(y)) continue;
      bool found = false;
      for (std::uint32_t a = 0; a < sets && !found; ++a) {
        for (std::uint32_t b = 0; b < sets && !found; ++b) found = nb[a][x] && nb[b][y] && (a & b) == 0;
      }
      if (!found) return false;
    }
  }
  return true;
}

namespace {

std::uint32_t naive_term(const Formula& t, const std::map<std::string, std::uint32_t>& env) {
  if (t.kind() == FormulaKind::literal) return t.literal_value();
  return env.at(t.name());
}

bool naive_eval_in(const Formula& f, std::uint64_t graph, std::uint32_t n,
                   std::map<std::string, std::uint32_t>& env) {
  switch (f.kind()) {
    case FormulaKind::truth:
      return true;
    case FormulaKind::falsity:
      return false;
    case FormulaKind::apply:
      return holds(graph, n, naive_term(f.child(1), env), naive_term(f.child(2), env));
    case FormulaKind::equal:
      return naive_term(f.child(0), env) == naive_term(f.child(1), env);
    case FormulaKind::negation:
      return !naive_eval_in(f.child(0), graph, n, env);
    case FormulaKind::conjunction:
      return naive_eval_in(f.child(0), graph, n, env) && naive_eval_in(f.child(1), graph, n, env);
    case FormulaKind::disjunction:
      return naive_eval_in(f.child(0), graph, n, env) || naive_eval_in(f.child(1), graph, n, env);
    case FormulaKind::implication:
      return !naive_eval_in(f.child(0), graph, n, env) || naive_eval_in(f.child(1), graph, n, env);
    case FormulaKind::equivalence:
      return naive_eval_in(f.child(0), graph, n, env) == naive_eval_in(f.child(1), graph, n, env);
    case FormulaKind::forall:
    case FormulaKind::exists:
    case FormulaKind::exists_unique: {
      auto saved = env.find(f.name()) == env.end() ? std::optional<std::uint32_t>{} : env[f.name()];
      std::uint32_t count = 0;
      for (std::uint32_t x = 0; x < n; ++x) {
        env[f.name()] = x;
        if (naive_eval_in(f.body(), graph, n, env)) ++count;
      }
      if (saved) {
        env[f.name()] = *saved;
      } else {
        env.erase(f.name());
      }
      if (f.kind() == FormulaKind::forall) return count == n;
      if (f.kind() == FormulaKind::exists) return count > 0;
      return count == 1;
    }
    default:
      throw std::logic_error("naive_eval: unsupported node");
  }
}

}  // namespace

bool naive_eval(const Formula& f, std::uint64_t graph, std::uint32_t n) {
  std::map<std::string, std::uint32_t> env;
  return naive_eval_in(f, graph, n, env);
}

CliResult run_cli(const std::string& args) {
  CliResult r;
  const std::string command = std::string("\"") + AXCHECK_CLI + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace axtest
