#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "talbot/partition.hpp"
#include "talbot/permgroup.hpp"
#include "talbot/permutation.hpp"

namespace talbot {

using Rational = boost::rational<std::int64_t>;

/// Integer-valued class function of S_n, one value per class in class_order(n).
class ClassFunction {
public:
  ClassFunction() = default;
  /// Throws InvalidArgument if `values` has the wrong length for n.
  ClassFunction(int n, std::vector<std::int64_t> values);

  static ClassFunction constant(int n, std::int64_t value);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::int64_t operator[](std::size_t c) const { return values_[c]; }

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  /// Pointwise product (the character of the tensor product).
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(std::int64_t k, const ClassFunction& a);

  bool operator==(const ClassFunction&) const = default;

private:
  int n_ = 0;
  std::vector<std::int64_t> values_;
};

/// Exact character table of S_n.
///
/// Rows are irreps in partitions_descending(n) (trivial first); columns are
/// classes in class_order(n) (identity first). Values come from the
/// Murnaghan-Nakayama rule.
class CharacterTable {
public:
  int n() const noexcept { return n_; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  const std::vector<Partition>& irreps() const noexcept { return irreps_; }
  std::int64_t value(std::size_t irrep, std::size_t cls) const { return values_[irrep][cls]; }

  std::size_t irrep_index(const Partition& lambda) const;
  std::size_t class_index(const Partition& cycle_type) const;

  ClassFunction row(const Partition& lambda) const;
  ClassFunction row(std::size_t irrep) const;
  std::int64_t dimension(const Partition& lambda) const;

  ClassFunction trivial() const;
  ClassFunction sign() const;
  /// n! as an exact integer.
  std::uint64_t group_order() const noexcept { return group_order_; }

private:
  friend CharacterTable character_table(int n);
  int n_ = 0;
  std::uint64_t group_order_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<Partition> irreps_;
  std::vector<std::vector<std::int64_t>> values_;
};

/// Requires 1 <= n <= 10.
CharacterTable character_table(int n);

/// chi_lambda at a class of the given cycle type, via Murnaghan-Nakayama
/// (memoized on remaining shape and remaining cycle type).
std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& cycle_type);

/// (1/n!) sum_c |c| a(c) b(c), exactly.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Multiplicities of each irrep in a character, aligned with table.irreps().
struct Decomposition {
  std::vector<std::pair<Partition, std::int64_t>> multiplicities;

  std::int64_t multiplicity(const Partition& lambda) const;
  /// Only the nonzero entries.
  std::vector<std::pair<Partition, std::int64_t>> support() const;
};

/// Throws NotACharacter if any multiplicity is negative or non-integral,
/// or if the reconstruction sum_lambda m_lambda chi_lambda differs from f.
Decomposition decompose(const ClassFunction& f, const CharacterTable& table);

/// Number of points fixed by each class representative under `action`.
ClassFunction perm_character(const std::function<std::int64_t(const Permutation&)>& fixed_points,
                             const CharacterTable& table);

/// Characters of Sym^2 and Lambda^2: (chi(g)^2 +/- chi(g^2)) / 2.
/// Throw NotACharacter if the halving is not exact.
ClassFunction sym2_character(const ClassFunction& chi);
ClassFunction alt2_character(const ClassFunction& chi);

/// Pointwise product with the sign character.
ClassFunction tensor_sign(const ClassFunction& chi);

}  // namespace talbot
