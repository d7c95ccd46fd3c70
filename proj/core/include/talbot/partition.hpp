#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace talbot {

/// Integer partition with weakly decreasing positive parts.
///
/// Labels both irreducible characters and cycle types. The default ordering
/// is lexicographic on the parts, so (3,2) > (3,1,1).
class Partition {
public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;  // n = sum of parts
  std::size_t length() const noexcept { return parts_.size(); }
  int operator[](std::size_t k) const { return parts_[k]; }

  /// Transposed Young diagram.
  Partition conjugate() const;
  /// Multiplicity of part value `i`.
  int multiplicity(int i) const;

  /// "(3,2)", "(2,2,1)", "(1)"; the empty partition prints "()".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/// True when `parts` is weakly decreasing and positive.
bool is_partition(const std::vector<int>& parts);

/// Partitions of n in descending lexicographic order: (n), (n-1,1), ..., (1^n).
/// This is the irrep order of every CharacterTable.
std::vector<Partition> partitions_descending(int n);

/// Partitions of n in ascending lexicographic order: (1^n), ..., (n).
/// This is the conjugacy-class (column) order of every CharacterTable and
/// ClassFunction, with the identity class first.
std::vector<Partition> class_order(int n);

/// Cycle type of g^2 given the cycle type of g.
Partition square_cycle_type(const Partition& cycle_type);

/// Sign of any permutation with this cycle type: (-1)^(n - #parts).
int cycle_type_sign(const Partition& cycle_type);

}  // namespace talbot
