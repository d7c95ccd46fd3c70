#include "talbot/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "talbot/errors.hpp"

namespace talbot {

Subgroup::Subgroup(std::size_t degree, std::vector<Permutation> elements,
                   std::vector<Permutation> generators)
    : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto& e : elements_) {
    if (e.degree() != degree_) throw InvalidArgument("Subgroup: element degree mismatch");
  }
}

bool Subgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return degree_ == other.degree_ &&
         std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::vector<Permutation> Subgroup::conjugate_elements(const Permutation& g) const {
  const Permutation g_inv = g.inverse();
  std::vector<Permutation> out;
  out.reserve(elements_.size());
  for (const auto& h : elements_) out.push_back(g * h * g_inv);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  if (n < 1 || n > 12) throw InvalidArgument("conjugacy_classes: n must lie in [1, 12]");
  const std::uint64_t order = factorial(n);
  std::vector<ConjugacyClass> out;
  for (const auto& type : class_order(n)) {
    std::uint64_t centralizer = 1;
    for (int i = 1; i <= n; ++i) {
      const int m = type.multiplicity(i);
      for (int k = 0; k < m; ++k) centralizer *= static_cast<std::uint64_t>(i);
      centralizer *= factorial(m);
    }
    out.push_back({type, order / centralizer});
  }
  return out;
}

Subgroup closure(std::size_t degree, std::span<const Permutation> generators) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("closure: generator degree mismatch");
  }
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    const Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = g * current;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return Subgroup(degree, {seen.begin(), seen.end()},
                  std::vector<Permutation>(generators.begin(), generators.end()));
}

Subgroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<std::size_t> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = i;
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return Subgroup(n, all_permutations(n), std::move(gens));
}

Subgroup alternating_group(std::size_t n) {
  std::vector<Permutation> even;
  for (auto& p : all_permutations(n)) {
    if (p.sign() == 1) even.push_back(std::move(p));
  }
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return Subgroup(n, std::move(even), std::move(gens));
}

Subgroup normalizer(const Subgroup& h, const Subgroup& ambient) {
  if (!h.is_subset_of(ambient)) throw InvalidArgument("normalizer: subgroup is not contained in ambient group");
  std::vector<Permutation> out;
  for (const auto& g : ambient.elements()) {
    if (h.conjugate_elements(g) == h.elements()) out.push_back(g);
  }
  return Subgroup(h.degree(), std::move(out), {});
}

std::vector<Subgroup> sylow5_subgroups() {
  std::vector<Subgroup> out;
  for (const auto& p : all_permutations(5)) {
    if (p.cycle_type() != Partition{5}) continue;
    const Permutation gens[] = {p};
    Subgroup s = closure(5, gens);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.elements() < b.elements(); });
  return out;
}

Permutation conjugation_action(const Permutation& g, std::span<const Subgroup> sylows) {
  std::vector<std::size_t> images(sylows.size());
  for (std::size_t i = 0; i < sylows.size(); ++i) {
    const auto conj = sylows[i].conjugate_elements(g);
    auto it = std::find_if(sylows.begin(), sylows.end(),
                           [&](const Subgroup& s) { return s.elements() == conj; });
    if (it == sylows.end()) throw InvariantViolation("conjugation_action: conjugate subgroup not in list");
    images[i] = static_cast<std::size_t>(it - sylows.begin());
  }
  return Permutation(std::move(images));
}

}  // namespace talbot
