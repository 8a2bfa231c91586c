#include "axcheck/universe.hpp"

#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "axcheck/errors.hpp"

namespace axcheck {
namespace {

using BinomialTable = std::array<std::array<std::uint64_t, 65>, 65>;

const BinomialTable& binomials() {
  static const BinomialTable table = [] {
    BinomialTable t{};
    for (unsigned n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (unsigned k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

std::uint64_t choose(unsigned n, unsigned k) { return k > n ? 0 : binomials()[n][k]; }

// Returns nullopt on overflow past 2^63.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > (std::uint64_t{1} << 63) / a) return std::nullopt;
  return a * b;
}

}  // namespace

std::uint64_t subset_rank(std::uint64_t mask, unsigned width) {
  const unsigned k = static_cast<unsigned>(std::popcount(mask));
  std::uint64_t rank = 0;
  for (unsigned j = 0; j < k; ++j) rank += choose(width, j);
  unsigned i = 0;
  int previous = -1;
  for (unsigned pos = 0; pos < width; ++pos) {
    if (!((mask >> pos) & 1U)) continue;
    ++i;
    for (int v = previous + 1; v < static_cast<int>(pos); ++v) {
      rank += choose(width - 1 - static_cast<unsigned>(v), k - i);
    }
    previous = static_cast<int>(pos);
  }
  return rank;
}

std::uint64_t subset_unrank(std::uint64_t rank, unsigned width) {
  unsigned k = 0;
  while (k <= width && rank >= choose(width, k)) {
    rank -= choose(width, k);
    ++k;
  }
  if (k > width) throw std::out_of_range("subset rank out of range");
  std::uint64_t mask = 0;
  unsigned v = 0;
  for (unsigned i = 1; i <= k; ++i) {
    for (;; ++v) {
      const std::uint64_t block = choose(width - 1 - v, k - i);
      if (rank < block) break;
      rank -= block;
    }
    mask |= std::uint64_t{1} << v;
    ++v;
  }
  return mask;
}

struct Universe::Cache {
  std::mutex mutex;
  std::map<SimpleType, std::unique_ptr<const std::vector<Value>>> domains;
};

Universe::Universe(std::uint32_t base_size, std::uint64_t quantifier_cap)
    : base_size_(base_size), cap_(quantifier_cap), cache_(std::make_shared<Cache>()) {
  if (base_size == 0) throw std::invalid_argument("universe needs at least one individual");
  if (quantifier_cap == 0 || quantifier_cap > kMaxQuantifierCap) {
    throw std::invalid_argument("quantifier cap must be in [1, " +
                                std::to_string(kMaxQuantifierCap) + "]");
  }
}

std::optional<std::uint64_t> Universe::domain_size(const SimpleType& type) const {
  if (type.is_ind()) return base_size_;
  std::uint64_t space = 1;
  for (const auto& c : type.components()) {
    auto size = domain_size(c);
    if (!size) return std::nullopt;
    auto product = checked_mul(space, *size);
    if (!product) return std::nullopt;
    space = *product;
  }
  if (space >= 63) return std::nullopt;
  return std::uint64_t{1} << space;
}

std::uint64_t Universe::tuple_space(const SimpleType& rel) const {
  std::uint64_t space = 1;
  bool overflow = false;
  for (const auto& c : rel.components()) {
    auto size = domain_size(c);
    auto product = size ? checked_mul(space, *size) : std::nullopt;
    if (!product) {
      overflow = true;
      break;
    }
    space = *product;
  }
  if (overflow || space > kMaxTupleSpace) {
    throw CapExceeded(rel.to_string(), overflow ? UINT64_MAX : space, kMaxTupleSpace);
  }
  return space;
}

const std::vector<Value>& Universe::type_domain(const SimpleType& type) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->domains.find(type); it != cache_->domains.end()) return *it->second;
  }
  auto values = std::make_unique<std::vector<Value>>();
  if (type.is_ind()) {
    values->reserve(base_size_);
    for (std::uint32_t i = 0; i < base_size_; ++i) values->push_back(Value::individual(i));
  } else {
    const std::uint64_t space = tuple_space(type);
    if (space > cap_) throw CapExceeded(type.to_string(), space, cap_);
    const std::uint64_t count = std::uint64_t{1} << space;
    values->reserve(count);
    const auto width = static_cast<unsigned>(space);
    for (std::uint64_t r = 0; r < count; ++r) values->push_back(Value::relation(subset_unrank(r, width)));
  }
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->domains.emplace(type, std::move(values));
  return *it->second;
}

std::uint64_t Universe::index_of(const SimpleType& type, Value v) const {
  if (type.is_ind()) return v.index();
  return subset_rank(v.graph(), static_cast<unsigned>(tuple_space(type)));
}

Value Universe::value_at(const SimpleType& type, std::uint64_t index) const {
  if (type.is_ind()) return Value::individual(static_cast<std::uint32_t>(index));
  return Value::relation(subset_unrank(index, static_cast<unsigned>(tuple_space(type))));
}

bool Universe::admits(const SimpleType& type, Value v) const {
  if (type.is_ind()) return v.is_individual() && v.index() < base_size_;
  if (!v.is_relation()) return false;
  std::uint64_t space = 0;
  try {
    space = tuple_space(type);
  } catch (const CapExceeded&) {
    return false;
  }
  return space == 64 || (v.graph() >> space) == 0;
}

std::uint64_t Universe::tuple_position(const SimpleType& rel,
                                       std::span<const std::uint64_t> component_indices) const {
  std::uint64_t position = 0;
  for (std::size_t i = 0; i < rel.arity(); ++i) {
    position = position * *domain_size(rel.component(i)) + component_indices[i];
  }
  return position;
}

std::vector<std::uint64_t> Universe::tuple_components(const SimpleType& rel,
                                                      std::uint64_t position) const {
  std::vector<std::uint64_t> out(rel.arity());
  for (std::size_t i = rel.arity(); i-- > 0;) {
    const std::uint64_t size = *domain_size(rel.component(i));
    out[i] = position % size;
    position /= size;
  }
  return out;
}

std::vector<std::vector<Value>> Universe::tuples(const SimpleType& rel, Value v) const {
  std::vector<std::vector<Value>> out;
  for (std::uint64_t bits = v.graph(); bits; bits &= bits - 1) {
    const auto position = static_cast<std::uint64_t>(std::countr_zero(bits));
    auto indices = tuple_components(rel, position);
    std::vector<Value> tuple;
    tuple.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
      tuple.push_back(value_at(rel.component(i), indices[i]));
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

Value Universe::make_relation(const SimpleType& rel,
                              std::span<const std::vector<Value>> tuples) const {
  tuple_space(rel);
  std::uint64_t graph = 0;
  for (const auto& tuple : tuples) {
    if (tuple.size() != rel.arity()) throw std::invalid_argument("tuple arity mismatch");
    std::vector<std::uint64_t> indices;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (!admits(rel.component(i), tuple[i])) {
        throw std::invalid_argument("tuple component is not a value of " +
                                    rel.component(i).to_string());
      }
      indices.push_back(index_of(rel.component(i), tuple[i]));
    }
    graph |= std::uint64_t{1} << tuple_position(rel, indices);
  }
  return Value::relation(graph);
}

std::vector<std::uint32_t> Universe::support(const SimpleType& type, Value v) const {
  if (type.is_ind()) return {v.index()};
  std::uint64_t seen = 0;  // base domains beyond 64 cannot carry a relation anyway
  std::vector<std::uint32_t> out;
  for (const auto& tuple : tuples(type, v)) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      for (auto x : support(type.component(i), tuple[i])) seen |= std::uint64_t{1} << x;
    }
  }
  for (std::uint32_t i = 0; i < 64; ++i) {
    if ((seen >> i) & 1U) out.push_back(i);
  }
  return out;
}

std::string Universe::format(const SimpleType& type, Value v) const {
  if (type.is_ind()) return std::to_string(v.index());
  std::string out = "{";
  bool first = true;
  for (const auto& tuple : tuples(type, v)) {
    if (!first) out += ',';
    first = false;
    if (tuple.size() == 1) {
      out += format(type.component(0), tuple[0]);
      continue;
    }
    out += '(';
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) out += ',';
      out += format(type.component(i), tuple[i]);
    }
    out += ')';
  }
  out += '}';
  return out;
}

}  // namespace axcheck
