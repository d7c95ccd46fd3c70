#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "talbot/partition.hpp"

namespace talbot {

/// A bijection of {0, ..., n-1}, stored as its image list.
///
/// `p(i)` is `images()[i]`. Composition follows function notation:
/// `(p * q)(i) == p(q(i))`.
class Permutation {
public:
  Permutation() = default;

  /// Throws InvalidArgument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  /// Builds a permutation from 0-based cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  /// A fixed representative of the conjugacy class with the given cycle type:
  /// cycles are laid out on consecutive points in the order of the parts.
  static Permutation class_representative(const Partition& cycle_type);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  int sign() const;
  Partition cycle_type() const;
  std::vector<std::vector<std::size_t>> cycles() const;

  /// 1-based image list, e.g. "[1,5,2,3,4]".
  std::string to_string_one_based() const;
  /// 1-based cycle notation, e.g. "(1 2)(3 4 5)"; identity prints "()".
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

private:
  std::vector<std::size_t> images_;
};

/// (p o q)(i) = p(q(i)). Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// All n! permutations of degree n in lexicographic order of image lists.
std::vector<Permutation> all_permutations(std::size_t n);

/// Position of `p` in the lexicographic order of all_permutations(p.degree()).
std::size_t lexicographic_rank(const Permutation& p);

}  // namespace talbot
