#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "talbot/chambers.hpp"
#include "talbot/hermrep.hpp"
#include "talbot/permgroup.hpp"

namespace talbot {

/// How the two free parameters of the stabilizer-fixed form were pinned.
struct SylowNormalization {
  std::uint64_t seed = 0;
  int attempts = 0;  // seeds drawn before a non-degenerate one
  /// k_i = P/6 + U_i; the trivial part is fixed by sum k_i = P.
  double trivial_coefficient = 1.0 / 6.0;
  /// ||U_i||_F, set equal to ||P/6||_F.
  double component_norm = 0.0;
  /// U_1 is negated if needed so that <U_1, b> > 0, where b is the first
  /// FormSpace basis vector with a nonzero component on the stabilizer-fixed line.
  std::size_t sign_reference = 0;
  int sign_flip = 1;
};

/// Six hermitian forms on V (n = 5) permuted by A_5 like its Sylow 5-subgroups.
struct SylowBasis {
  std::vector<Subgroup> subgroups;    // canonical order from sylow5_subgroups()
  std::vector<HermitianForm> forms;   // k_1..k_6, k_i attached to subgroups[i]
  SylowNormalization normalization;
  std::shared_ptr<const FormSpace> space;
};

/// Seeds a random form, projects it into the 1 + V_(3,2) isotypic component,
/// averages over N_{A_5}(P_1), fixes the trivial part and the scale and sign of
/// the V_(3,2) part, then transports along even coset representatives.
/// Throws ConstructionFailure if 16 consecutive seeds are degenerate.
SylowBasis build_sylow_basis(std::uint64_t seed = 0);

/// Coefficient matrix A with g.k_j = sum_i A_ij k_i (least squares on the
/// Gram matrix). Entries within 1e-9 of an integer are rounded.
Eigen::MatrixXd basis_action_matrix(const SylowBasis& basis, const Permutation& g);

struct TwistEntry {
  std::string name;
  Permutation generator;
  int parity = 1;
  Eigen::MatrixXd matrix;
  bool is_permutation_matrix = false;
  /// conjugation_action(generator) on the six subgroups.
  Permutation conjugation;
};

struct SignTwistReport {
  std::vector<TwistEntry> entries;  // identity, 5-cycle (0 1 2 3 4), transposition (0 1)
  /// Trace of the action on span{k_i} per class (class_order(5)).
  std::vector<double> class_traces;
  /// chi_(5) + chi_(3,2) in the same order.
  std::vector<std::int64_t> expected_traces;
};

SignTwistReport sign_twist_report(const SylowBasis& basis);

struct SignCharacterIdentity {
  bool twist_matches = false;            // tensor_sign(chi_(3,2)) == chi_(2,2,1)
  bool permutation_character_ok = false; // decompose(pi) == {(5):1, (2,2,1):1}
  bool trivial_not_self_twisted = false; // chi_(5) * sgn == chi_(1^5) != chi_(5)
  ClassFunction sylow_permutation_character;

  bool ok() const { return twist_matches && permutation_character_ok && trivial_not_self_twisted; }
};

/// Exact character-level content of the sign twist between V_(3,2) and
/// the six-letter permutation representation.
SignCharacterIdentity sign_character_identity();

struct RegionClassification {
  Permutation order;  // degree 6, descending stable argsort of k_i(z,z)
  std::vector<double> values;
  std::vector<IndexPair> ties;
  bool interior = true;
};

/// Throws ZeroPoint for z = 0 and InvalidArgument unless z has degree 5.
RegionClassification classify_region(const PointV& z, const SylowBasis& basis,
                                     double tol = kDefaultTolerance);

struct RegionOrbit {
  Permutation representative;  // smallest ordering in the orbit
  std::size_t observed = 0;    // distinct observed orderings in the orbit
  std::size_t samples = 0;
  std::size_t min_occupancy = 0;  // over observed members
  std::size_t max_occupancy = 0;
  /// Pearson chi-square of the member counts against their mean (all 60
  /// members, unobserved ones counting zero), with 59 degrees of freedom.
  double chi_square = 0.0;
  double p_value = 1.0;
};

struct RegionReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  std::map<Permutation, std::size_t> occupancy;
  std::size_t distinct_orderings = 0;  // out of 720
  std::size_t boundary_samples = 0;
  std::map<IndexPair, std::size_t> wall_incidence;  // Z(k_i - k_j) hits
  std::vector<RegionOrbit> orbits;  // orbits of observed orderings under A_5 in S_6
  /// Largest max/min occupancy ratio over orbits with every member observed.
  double max_orbit_ratio = 0.0;
  /// Smallest per-orbit p-value, and whether it clears 1e-3 / #orbits.
  double min_orbit_p_value = 1.0;
  bool orbits_consistent = true;
};

RegionReport region_statistics(std::size_t samples, std::uint64_t seed, const SylowBasis& basis,
                               double tol = kDefaultTolerance, unsigned workers = 1);

struct SylowCheck {
  std::string name;
  bool passed = false;
  double measured = 0.0;  // residual, rank or count depending on the check
  std::string detail;
};

/// Runs the basis invariants: isotypic residual, sum = P, Gram rank 6,
/// A_5 permutation action, class traces, and the representation property
/// of the action matrices.
std::vector<SylowCheck> verify_sylow_basis(const SylowBasis& basis, std::uint64_t seed = 0);

}  // namespace talbot
