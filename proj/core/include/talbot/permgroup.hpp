#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "talbot/partition.hpp"
#include "talbot/permutation.hpp"

namespace talbot {

/// A finite permutation group stored as an explicit sorted element list.
class Subgroup {
public:
  Subgroup(std::size_t degree, std::vector<Permutation> elements,
           std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  bool contains(const Permutation& p) const;
  bool is_subset_of(const Subgroup& other) const;

  /// g H g^-1 as a sorted element list.
  std::vector<Permutation> conjugate_elements(const Permutation& g) const;

  /// Groups compare by element set only; generators are bookkeeping.
  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

private:
  std::size_t degree_;
  std::vector<Permutation> elements_;  // sorted, unique
  std::vector<Permutation> generators_;
};

struct ConjugacyClass {
  Partition cycle_type;
  std::uint64_t size;
};

/// One entry per partition of n, in class_order(n), with
/// size n! / prod_i (i^{m_i} m_i!). Requires 1 <= n <= 12.
std::vector<ConjugacyClass> conjugacy_classes(int n);

/// Smallest subgroup of S_degree containing `generators`, by breadth-first
/// product saturation. An empty generator set gives the trivial group.
Subgroup closure(std::size_t degree, std::span<const Permutation> generators);

Subgroup symmetric_group(std::size_t n);
Subgroup alternating_group(std::size_t n);

/// {g in ambient : g h g^-1 = h}. Throws InvalidArgument if h is not in ambient.
Subgroup normalizer(const Subgroup& h, const Subgroup& ambient);

/// The six Sylow 5-subgroups of S_5, ordered lexicographically by sorted element list.
std::vector<Subgroup> sylow5_subgroups();

/// sigma with g P_i g^-1 = P_{sigma(i)}. The map g -> sigma is a homomorphism
/// S_5 -> S_6 when `sylows` is the list from sylow5_subgroups().
Permutation conjugation_action(const Permutation& g, std::span<const Subgroup> sylows);

}  // namespace talbot
