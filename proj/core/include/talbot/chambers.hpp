#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "talbot/hermrep.hpp"
#include "talbot/permutation.hpp"

namespace talbot {

inline constexpr double kDefaultTolerance = 1e-9;

/// The g of a chamber T(g) = { z : |z_{g(0)}|^2 >= ... >= |z_{g(n-1)}|^2 }.
struct ChamberLabel {
  Permutation perm;

  bool operator==(const ChamberLabel&) const = default;
  auto operator<=>(const ChamberLabel&) const = default;
};

/// Unordered index pair {i, j}, stored with i < j.
struct IndexPair {
  std::size_t i;
  std::size_t j;

  IndexPair(std::size_t a, std::size_t b) : i(a < b ? a : b), j(a < b ? b : a) {}
  bool operator==(const IndexPair&) const = default;
  auto operator<=>(const IndexPair&) const = default;
};

struct Classification {
  ChamberLabel label;
  std::vector<IndexPair> ties;  // pairs adjacent in the sorted order, equal within tol
  bool interior = true;
};

/// (g.z)_i = z_{g^-1(i)}.
PointV act_point(const Permutation& g, const PointV& z);

/// Stable descending argsort of |z_i|^2 (ties broken by ascending index).
/// Throws DegenerateDimension for n <= 2 and ZeroPoint for z = 0.
Classification classify(const PointV& z, double tol = kDefaultTolerance);

/// Whether z satisfies |z_{g(0)}|^2 >= ... >= |z_{g(n-1)}|^2 for g = label.
bool satisfies_chamber(const PointV& z, const ChamberLabel& label);

/// (g^-1 . z, g) with g = classify(z).label; the point lies in T(identity).
std::pair<PointV, ChamberLabel> canonical_representative(const PointV& z,
                                                          double tol = kDefaultTolerance);

/// n independent standard complex Gaussians (E|z_i|^2 = 1), mean subtracted.
/// Deterministic for a given seed on a given platform.
PointV sample_point(std::size_t n, std::uint64_t seed);

/// Per-sample seed used by the sharded samplers: a splitmix64 mix of the
/// master seed and the sample index, so results do not depend on the number
/// of workers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct PartitionOptions {
  double tol = kDefaultTolerance;
  /// Test every one of the n! label systems per sample (n <= 7 only).
  bool exhaustive_labels = true;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
};

struct PartitionReport {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  bool exhaustive_labels = false;
  std::map<ChamberLabel, std::size_t> occupancy;
  std::size_t boundary_hits = 0;
  /// Interior samples satisfying a number of label systems other than one
  /// (exhaustive mode), or violating their own label's inequalities.
  std::size_t partition_violations = 0;
  std::size_t chambers_total = 0;  // n!
  std::size_t chambers_occupied = 0;
  /// max/min occupancy over all n! chambers; infinity if one is empty.
  double occupancy_ratio = 0.0;
};

/// Samples points of V and checks that each interior sample lies in exactly
/// one chamber. Requires n >= 3; exhaustive_labels requires n <= 7.
PartitionReport verify_partition(std::size_t n, std::size_t samples, std::uint64_t seed,
                                 const PartitionOptions& options = {});

struct OrbitBijection {
  bool bijective = false;
  /// Two group elements whose images share a chamber, when not bijective.
  std::optional<std::pair<Permutation, Permutation>> collision;
};

/// Checks that w -> classify(w.z).label is a bijection of S_n. Requires an
/// interior z and n <= 7; throws InvalidArgument otherwise.
OrbitBijection orbit_bijection(const PointV& z, double tol = kDefaultTolerance);

/// All pairs {i,j} with ||z_i|^2 - |z_j|^2| <= tol * max_k |z_k|^2.
std::vector<IndexPair> active_walls(const PointV& z, double tol = kDefaultTolerance);

/// True iff the label sequences differ by one swap of adjacent positions.
bool adjacent_labels(const ChamberLabel& a, const ChamberLabel& b);

struct AdjacencySummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool connected = false;
};

/// The graph on all n! chamber labels with edges from adjacent_labels.
/// Built by brute force over all pairs; requires 1 <= n <= 6.
AdjacencySummary chamber_adjacency(std::size_t n);

}  // namespace talbot
