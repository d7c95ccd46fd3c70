#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "talbot/chartab.hpp"
#include "talbot/partition.hpp"
#include "talbot/permutation.hpp"

namespace talbot {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// A point of the standard representation V = {z in C^n : sum z_i = 0}.
class PointV {
public:
  /// Throws InvalidArgument if the coordinates do not sum to zero
  /// (absolute tolerance 1e-12, scaled by max(1, max |z_i|)).
  explicit PointV(std::vector<Complex> coords);

  /// Subtracts the mean so the result lies in V.
  static PointV project(std::vector<Complex> coords);

  std::size_t degree() const noexcept { return coords_.size(); }
  const std::vector<Complex>& coords() const noexcept { return coords_; }
  Complex operator[](std::size_t i) const { return coords_[i]; }

  /// |z_i|^2 for every coordinate.
  std::vector<double> moduli_squared() const;
  double norm_squared() const;
  bool is_zero() const;

  PointV scaled(Complex lambda) const;
  ComplexVector to_vector() const;

private:
  struct Unchecked {};
  PointV(Unchecked, std::vector<Complex> coords) : coords_(std::move(coords)) {}
  std::vector<Complex> coords_;
};

/// A hermitian form on V, stored as the n x n matrix P H P where
/// P = I - J/n is the orthogonal projector of C^n onto V.
class HermitianForm {
public:
  /// Returns P (H + H^*)/2 P. Throws InvalidArgument if `raw` is not square
  /// or is more than 1e-9 (relative to max(1, max|H_ij|)) away from hermitian.
  static HermitianForm canonicalize(const ComplexMatrix& raw);

  /// The zero form on V of degree n.
  static HermitianForm zero(std::size_t n);

  std::size_t degree() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  HermitianForm operator+(const HermitianForm& other) const;
  HermitianForm operator-(const HermitianForm& other) const;
  HermitianForm operator*(double s) const;

private:
  explicit HermitianForm(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
  friend HermitianForm act(const Permutation& g, const HermitianForm& h);
};

/// P = I - J/n.
ComplexMatrix projector_onto_v(std::size_t n);
/// The canonical invariant form P, i.e. the standard inner product restricted to V.
HermitianForm invariant_form(std::size_t n);

/// h_i = P E_ii P, so that h_i(z, z) = |z_i|^2 on V. Requires n >= 2.
std::vector<HermitianForm> perm_form_basis(std::size_t n);

/// g.h = M_g H M_g^T with M_g e_i = e_{g(i)}, i.e. (g.h)(u,v) = h(g^-1 u, g^-1 v).
HermitianForm act(const Permutation& g, const HermitianForm& h);

/// u^* H v.
Complex evaluate(const HermitianForm& h, const PointV& u, const PointV& v);
/// h(z, z), which is real.
double evaluate_diagonal(const HermitianForm& h, const PointV& z);

/// Real Frobenius inner product Re tr(A^* B).
double frobenius_inner(const HermitianForm& a, const HermitianForm& b);
double frobenius_distance(const HermitianForm& a, const HermitianForm& b);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Number of singular values at or above rel_tol * max(sigma_max, 1).
std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8);

/// Real Gram matrix G_ij = <f_i, f_j>_F.
Eigen::MatrixXd gram_matrix(std::span<const HermitianForm> forms);

/// Herm(V) as a real vector space of dimension (n-1)^2.
///
/// The basis is obtained by canonicalizing the elementary forms E_ii,
/// E_ij + E_ji and i(E_ij - E_ji) (i < j, in row-major order) and running
/// two passes of modified Gram-Schmidt, so it is orthonormal for the
/// Frobenius inner product and fully deterministic.
class FormSpace {
public:
  explicit FormSpace(std::size_t n);

  std::size_t degree() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<HermitianForm>& basis() const noexcept { return basis_; }

  Eigen::VectorXd coordinates(const HermitianForm& h) const;
  HermitianForm form(const Eigen::VectorXd& coords) const;

  /// Matrix of h -> g.h in this basis (orthogonal, d x d).
  Eigen::MatrixXd action_matrix(const Permutation& g) const;

private:
  std::size_t n_;
  std::vector<HermitianForm> basis_;
};

/// Character of S_n acting on Herm(V): per class, the trace of the action
/// matrix of the class representative, rounded to an integer. Throws
/// NumericalFailure if any trace is 1e-9 or more from an integer. n <= 8.
ClassFunction herm_rep_character(int n);

/// pi_lambda = (dim lambda / n!) sum_g chi_lambda(g) rho(g) acting on a FormSpace.
class IsotypicProjector {
public:
  IsotypicProjector(Partition label, std::shared_ptr<const FormSpace> space,
                    Eigen::MatrixXd op);

  const Partition& label() const noexcept { return label_; }
  const FormSpace& space() const noexcept { return *space_; }
  const Eigen::MatrixXd& matrix() const noexcept { return op_; }

  HermitianForm apply(const HermitianForm& h) const;
  std::size_t rank(double rel_tol = 1e-8) const;

private:
  Partition label_;
  std::shared_ptr<const FormSpace> space_;
  Eigen::MatrixXd op_;
};

/// Requires n <= 7 (the sum runs over all n! elements).
IsotypicProjector isotypic_projector(const Partition& lambda, int n);
IsotypicProjector isotypic_projector(const Partition& lambda, const CharacterTable& table,
                                     std::shared_ptr<const FormSpace> space);

/// The summands (n), (n-1,1), (n-2,2), (n-2,1,1) that exist as partitions of n.
/// For n = 3 the (n-2,2) slot is absent.
std::vector<Partition> lemma_summands(int n);

struct IsotypicEntry {
  Partition label;
  std::size_t rank;
  std::int64_t expected_dimension;  // irrep dimension for summands, 0 otherwise
  bool lemma_summand;
};

struct IsotypicReport {
  int n = 0;
  std::vector<IsotypicEntry> entries;  // one per irrep, table order
  std::size_t total_rank = 0;
  std::size_t expected_total = 0;      // (n-1)^2
  bool n_minus_2_2_absent = false;     // the (n-2,2) label is not a partition (n = 3)
  bool passed = false;
};

/// Builds every isotypic projector on Herm(V) and compares ranks with the
/// four-summand decomposition. Requires 3 <= n <= 7. A mismatch yields
/// passed = false rather than an exception.
IsotypicReport verify_lemma(int n);

}  // namespace talbot
