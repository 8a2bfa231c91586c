#include "axcheck/synthesis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace axcheck {

namespace {

void collect_components(const SimpleType& t, std::set<SimpleType>& out) {
  if (t.is_ind()) return;
  for (const auto& c : t.components()) {
    out.insert(c);
    collect_components(c, out);
  }
}

struct Term {
  Formula formula;
  SimpleType type;
  std::uint64_t mask;
};

}  // namespace

PureFormulaEnumerator::PureFormulaEnumerator(Signature signature, std::size_t max_size)
    : signature_(std::move(signature)), max_size_(max_size) {
  if (max_size_ > 63) throw std::invalid_argument("size bound must be below 64");
  std::set<SimpleType> types{SimpleType::ind()};
  for (const auto& v : signature_) collect_components(v.type, types);
  quantified_types_.assign(types.begin(), types.end());
  std::ranges::stable_sort(quantified_types_, [](const SimpleType& a, const SimpleType& b) {
    return type_level(a) < type_level(b);
  });
  for (std::size_t i = 1; bound_names_.size() < max_size_; ++i) {
    std::string name = "x" + std::to_string(i);
    if (!find_variable(signature_, name)) bound_names_.push_back(std::move(name));
  }
}

const std::vector<PureFormulaEnumerator::Entry>& PureFormulaEnumerator::formulas(
    const std::vector<SimpleType>& context, std::size_t size) const {
  std::lock_guard lock(mutex_);
  Key key{context, size};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto generated = generate(context, size);
  return memo_.emplace(std::move(key), std::move(generated)).first->second;
}

std::vector<PureFormulaEnumerator::Entry> PureFormulaEnumerator::generate(
    const std::vector<SimpleType>& context, std::size_t size) const {
  std::vector<Entry> out;
  if (size == 0) return out;

  std::vector<Term> terms;
  for (const auto& v : signature_) terms.push_back({Formula::variable(v.name), v.type, 0});
  for (std::size_t d = 0; d < context.size(); ++d) {
    terms.push_back({Formula::variable(bound_names_[d]), context[d], std::uint64_t{1} << d});
  }

  // Applications: head plus arity arguments.
  for (const auto& head : terms) {
    if (!head.type.is_rel() || head.type.arity() + 2 != size) continue;
    const std::size_t k = head.type.arity();
    std::vector<std::vector<const Term*>> choices(k);
    bool possible = true;
    for (std::size_t i = 0; i < k; ++i) {
      for (const auto& t : terms) {
        if (t.type == head.type.component(i)) choices[i].push_back(&t);
      }
      possible = possible && !choices[i].empty();
    }
    if (!possible) continue;
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      std::vector<Formula> args;
      std::uint64_t mask = head.mask;
      for (std::size_t i = 0; i < k; ++i) {
        args.push_back(choices[i][pick[i]]->formula);
        mask |= choices[i][pick[i]]->mask;
      }
      out.push_back({Formula::apply(head.formula, std::move(args)), mask});
      std::size_t i = k;
      while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }

  if (size == 3) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        if (terms[i].type != terms[j].type) continue;
        out.push_back({Formula::equal(terms[i].formula, terms[j].formula), terms[i].mask | terms[j].mask});
      }
    }
  }

  if (size >= 2) {
    for (const auto& e : formulas(context, size - 1)) {
      if (e.formula.kind() == FormulaKind::negation) continue;
      out.push_back({Formula::negation(e.formula), e.free_mask});
    }
  }

  if (size >= 3) {
    constexpr FormulaKind kinds[] = {FormulaKind::conjunction, FormulaKind::disjunction,
                                     FormulaKind::implication, FormulaKind::equivalence};
    for (auto kind : kinds) {
      const bool ordered = kind != FormulaKind::implication;
      for (std::size_t a = 1; a + 2 <= size; ++a) {
        const std::size_t b = size - 1 - a;
        if (ordered && a > b) break;
        const auto& left = formulas(context, a);
        const auto& right = formulas(context, b);
        for (std::size_t i = 0; i < left.size(); ++i) {
          std::size_t j0 = ordered && a == b ? i + 1 : 0;
          for (std::size_t j = j0; j < right.size(); ++j) {
            if (!ordered && a == b && i == j) continue;
            out.push_back({Formula::binary(kind, left[i].formula, right[j].formula),
                           left[i].free_mask | right[j].free_mask});
          }
        }
      }
    }
  }

  if (size >= 2 && context.size() < bound_names_.size()) {
    const std::size_t depth = context.size();
    const std::uint64_t bit = std::uint64_t{1} << depth;
    for (auto kind : {FormulaKind::forall, FormulaKind::exists}) {
      for (const auto& t : quantified_types_) {
        auto inner = context;
        inner.push_back(t);
        for (const auto& e : formulas(inner, size - 1)) {
          if (!(e.free_mask & bit)) continue;
          out.push_back({Formula::quantifier(kind, bound_names_[depth], t, e.formula), e.free_mask & ~bit});
        }
      }
    }
  }
  return out;
}

bool PureFormulaEnumerator::for_each(const std::function<bool(const Formula&)>& visit) const {
  for (std::size_t s = 1; s <= max_size_; ++s) {
    for (const auto& e : formulas({}, s)) {
      if (!visit(e.formula)) return false;
    }
  }
  return true;
}

std::uint64_t PureFormulaEnumerator::count_of_size(std::size_t size) const {
  return size == 0 || size > max_size_ ? 0 : formulas({}, size).size();
}

std::uint64_t PureFormulaEnumerator::count() const {
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= max_size_; ++s) total += count_of_size(s);
  return total;
}

}  // namespace axcheck
