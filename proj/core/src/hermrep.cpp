#include "talbot/hermrep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "talbot/errors.hpp"

namespace talbot {

// --- PointV -------------------------------------------------------------------

namespace {

double max_abs(const std::vector<Complex>& z) {
  double m = 0.0;
  for (const auto& c : z) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

PointV::PointV(std::vector<Complex> coords) : coords_(std::move(coords)) {
  const Complex sum = std::accumulate(coords_.begin(), coords_.end(), Complex{});
  if (std::abs(sum) > 1e-12 * std::max(1.0, max_abs(coords_))) {
    throw InvalidArgument("PointV: coordinates must sum to zero (use project() for arbitrary input)");
  }
}

PointV PointV::project(std::vector<Complex> coords) {
  if (!coords.empty()) {
    const Complex mean = std::accumulate(coords.begin(), coords.end(), Complex{}) /
                         static_cast<double>(coords.size());
    for (auto& c : coords) c -= mean;
  }
  return PointV(Unchecked{}, std::move(coords));
}

std::vector<double> PointV::moduli_squared() const {
  std::vector<double> out(coords_.size());
  std::transform(coords_.begin(), coords_.end(), out.begin(), [](Complex c) { return std::norm(c); });
  return out;
}

double PointV::norm_squared() const {
  double s = 0.0;
  for (const auto& c : coords_) s += std::norm(c);
  return s;
}

bool PointV::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Complex c) { return c == Complex{}; });
}

PointV PointV::scaled(Complex lambda) const {
  std::vector<Complex> out(coords_);
  for (auto& c : out) c *= lambda;
  return PointV(Unchecked{}, std::move(out));
}

ComplexVector PointV::to_vector() const {
  ComplexVector v(static_cast<Eigen::Index>(coords_.size()));
  for (std::size_t i = 0; i < coords_.size(); ++i) v(static_cast<Eigen::Index>(i)) = coords_[i];
  return v;
}

// --- HermitianForm ----------------------------------------------------------

ComplexMatrix projector_onto_v(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  ComplexMatrix p = ComplexMatrix::Identity(k, k);
  p.array() -= Complex(1.0 / static_cast<double>(n), 0.0);
  return p;
}

HermitianForm HermitianForm::canonicalize(const ComplexMatrix& raw) {
  if (raw.rows() != raw.cols() || raw.rows() == 0) {
    throw InvalidArgument("canonicalize: matrix must be square and nonempty");
  }
  const double scale = std::max(1.0, raw.cwiseAbs().maxCoeff());
  const double asym = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-9 * scale) {
    throw InvalidArgument("canonicalize: matrix is not hermitian (max |H - H^*| = " +
                          std::to_string(asym) + ")");
  }
  const ComplexMatrix p = projector_onto_v(static_cast<std::size_t>(raw.rows()));
  ComplexMatrix h = p * (0.5 * (raw + raw.adjoint())) * p;
  h = 0.5 * (h + h.adjoint()).eval();
  return HermitianForm(std::move(h));
}

HermitianForm HermitianForm::zero(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return HermitianForm(ComplexMatrix::Zero(k, k));
}

HermitianForm HermitianForm::operator+(const HermitianForm& other) const {
  if (degree() != other.degree()) throw InvalidArgument("form degree mismatch");
  return HermitianForm(matrix_ + other.matrix_);
}

HermitianForm HermitianForm::operator-(const HermitianForm& other) const {
  if (degree() != other.degree()) throw InvalidArgument("form degree mismatch");
  return HermitianForm(matrix_ - other.matrix_);
}

HermitianForm HermitianForm::operator*(double s) const { return HermitianForm(matrix_ * s); }

HermitianForm invariant_form(std::size_t n) { return HermitianForm::canonicalize(projector_onto_v(n)); }

std::vector<HermitianForm> perm_form_basis(std::size_t n) {
  if (n < 2) throw InvalidArgument("perm_form_basis: n must be at least 2");
  std::vector<HermitianForm> out;
  const auto k = static_cast<Eigen::Index>(n);
  for (Eigen::Index i = 0; i < k; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(k, k);
    e(i, i) = 1.0;
    out.push_back(HermitianForm::canonicalize(e));
  }
  return out;
}

HermitianForm act(const Permutation& g, const HermitianForm& h) {
  const std::size_t n = h.degree();
  if (g.degree() != n) throw InvalidArgument("act: permutation and form differ in degree");
  ComplexMatrix out(h.matrix().rows(), h.matrix().cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(static_cast<Eigen::Index>(g(i)), static_cast<Eigen::Index>(g(j))) =
          h.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return HermitianForm(std::move(out));
}

Complex evaluate(const HermitianForm& h, const PointV& u, const PointV& v) {
  if (u.degree() != h.degree() || v.degree() != h.degree()) {
    throw InvalidArgument("evaluate: point and form differ in degree");
  }
  return u.to_vector().dot(h.matrix() * v.to_vector());  // dot() conjugates the left side
}

double evaluate_diagonal(const HermitianForm& h, const PointV& z) { return evaluate(h, z, z).real(); }

double frobenius_inner(const HermitianForm& a, const HermitianForm& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("frobenius_inner: degree mismatch");
  return (a.matrix().adjoint() * b.matrix()).trace().real();
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm(); }

double frobenius_distance(const HermitianForm& a, const HermitianForm& b) {
  return frobenius_distance(a.matrix(), b.matrix());
}

std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double largest = s.size() ? s(0) : 0.0;
  if (largest < 1e-12) return 0;
  return static_cast<std::size_t>((s.array() >= rel_tol * largest).count());
}

Eigen::MatrixXd gram_matrix(std::span<const HermitianForm> forms) {
  const auto k = static_cast<Eigen::Index>(forms.size());
  Eigen::MatrixXd g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      g(i, j) = frobenius_inner(forms[static_cast<std::size_t>(i)], forms[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

// --- FormSpace --------------------------------------------------------------

namespace {

// Real coordinates of a hermitian matrix in R^{n^2}, isometric for the
// Frobenius inner product: diagonal entries, then sqrt2*Re and sqrt2*Im of
// the strict upper triangle in row-major order.
Eigen::VectorXd vectorize(const ComplexMatrix& h) {
  const Eigen::Index n = h.rows();
  Eigen::VectorXd v(n * n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) v(k++) = h(i, i).real();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      v(k++) = std::sqrt(2.0) * h(i, j).real();
      v(k++) = std::sqrt(2.0) * h(i, j).imag();
    }
  }
  return v;
}

ComplexMatrix devectorize(const Eigen::VectorXd& v, std::size_t size) {
  const auto n = static_cast<Eigen::Index>(size);
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = v(k++);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double re = v(k++) / std::sqrt(2.0);
      const double im = v(k++) / std::sqrt(2.0);
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  }
  return h;
}

// Rows of Pi_g B, where Pi_g is the signed coordinate permutation induced by
// H -> M_g H M_g^T on vectorize() coordinates.
Eigen::MatrixXd permute_rows(const Permutation& g, const Eigen::MatrixXd& b) {
  const std::size_t n = g.degree();
  Eigen::MatrixXd out(b.rows(), b.cols());
  auto offdiag_index = [n](std::size_t i, std::size_t j) {
    // position of the (i, j), i < j, real part
    return static_cast<Eigen::Index>(n + 2 * (i * n - i * (i + 1) / 2 + (j - i - 1)));
  };
  for (std::size_t i = 0; i < n; ++i) {
    out.row(static_cast<Eigen::Index>(g(i))) = b.row(static_cast<Eigen::Index>(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Eigen::Index src = offdiag_index(i, j);
      const std::size_t gi = g(i);
      const std::size_t gj = g(j);
      if (gi < gj) {
        const Eigen::Index dst = offdiag_index(gi, gj);
        out.row(dst) = b.row(src);
        out.row(dst + 1) = b.row(src + 1);
      } else {
        // lands below the diagonal: the stored upper entry is the conjugate
        const Eigen::Index dst = offdiag_index(gj, gi);
        out.row(dst) = b.row(src);
        out.row(dst + 1) = -b.row(src + 1);
      }
    }
  }
  return out;
}

}  // namespace

FormSpace::FormSpace(std::size_t n) : n_(n) {
  if (n < 2) throw InvalidArgument("FormSpace: n must be at least 2");
  const auto k = static_cast<Eigen::Index>(n);
  std::vector<ComplexMatrix> candidates;
  for (Eigen::Index i = 0; i < k; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(k, k);
    e(i, i) = 1.0;
    candidates.push_back(e);
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      ComplexMatrix sym = ComplexMatrix::Zero(k, k);
      sym(i, j) = sym(j, i) = 1.0;
      candidates.push_back(sym);
      ComplexMatrix anti = ComplexMatrix::Zero(k, k);
      anti(i, j) = Complex(0.0, 1.0);
      anti(j, i) = Complex(0.0, -1.0);
      candidates.push_back(anti);
    }
  }

  std::vector<Eigen::VectorXd> accepted;
  for (const auto& c : candidates) {
    Eigen::VectorXd v = vectorize(HermitianForm::canonicalize(c).matrix());
    const double initial = v.norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : accepted) v -= b.dot(v) * b;
    }
    if (v.norm() > 1e-8 * std::max(initial, 1.0)) accepted.push_back(v / v.norm());
  }
  for (const auto& v : accepted) basis_.push_back(HermitianForm::canonicalize(devectorize(v, n)));
}

Eigen::VectorXd FormSpace::coordinates(const HermitianForm& h) const {
  if (h.degree() != n_) throw InvalidArgument("FormSpace::coordinates: degree mismatch");
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    c(static_cast<Eigen::Index>(a)) = frobenius_inner(basis_[a], h);
  }
  return c;
}

HermitianForm FormSpace::form(const Eigen::VectorXd& coords) const {
  if (static_cast<std::size_t>(coords.size()) != basis_.size()) {
    throw InvalidArgument("FormSpace::form: coordinate vector has wrong length");
  }
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
  for (std::size_t a = 0; a < basis_.size(); ++a) m += coords(static_cast<Eigen::Index>(a)) * basis_[a].matrix();
  return HermitianForm::canonicalize(m);
}

namespace {

Eigen::MatrixXd basis_columns(const FormSpace& space) {
  const auto& basis = space.basis();
  const auto rows = static_cast<Eigen::Index>(space.degree() * space.degree());
  Eigen::MatrixXd b(rows, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a) b.col(static_cast<Eigen::Index>(a)) = vectorize(basis[a].matrix());
  return b;
}

}  // namespace

Eigen::MatrixXd FormSpace::action_matrix(const Permutation& g) const {
  if (g.degree() != n_) throw InvalidArgument("FormSpace::action_matrix: degree mismatch");
  const Eigen::MatrixXd b = basis_columns(*this);
  return b.transpose() * permute_rows(g, b);
}

// --- Characters and isotypic projectors ---------------------------------------

ClassFunction herm_rep_character(int n) {
  if (n < 2 || n > 8) throw InvalidArgument("herm_rep_character: n must lie in [2, 8]");
  const FormSpace space(static_cast<std::size_t>(n));
  std::vector<std::int64_t> values;
  for (const auto& type : class_order(n)) {
    const double trace = space.action_matrix(Permutation::class_representative(type)).trace();
    const double rounded = std::round(trace);
    if (std::abs(trace - rounded) >= 1e-9) {
      throw NumericalFailure("herm_rep_character: trace " + std::to_string(trace) +
                             " is not within 1e-9 of an integer");
    }
    values.push_back(static_cast<std::int64_t>(rounded));
  }
  return ClassFunction(n, std::move(values));
}

IsotypicProjector::IsotypicProjector(Partition label, std::shared_ptr<const FormSpace> space,
                                     Eigen::MatrixXd op)
    : label_(std::move(label)), space_(std::move(space)), op_(std::move(op)) {}

HermitianForm IsotypicProjector::apply(const HermitianForm& h) const {
  return space_->form(op_ * space_->coordinates(h));
}

std::size_t IsotypicProjector::rank(double rel_tol) const { return numerical_rank(op_, rel_tol); }

IsotypicProjector isotypic_projector(const Partition& lambda, const CharacterTable& table,
                                     std::shared_ptr<const FormSpace> space) {
  const int n = table.n();
  if (n > 7) throw InvalidArgument("isotypic_projector: n must be at most 7");
  if (lambda.size() != n) throw InvalidArgument("isotypic_projector: partition size differs from n");
  if (space->degree() != static_cast<std::size_t>(n)) throw InvalidArgument("isotypic_projector: space degree differs from n");

  const std::size_t row = table.irrep_index(lambda);
  const Eigen::MatrixXd b = basis_columns(*space);
  Eigen::MatrixXd accumulated = Eigen::MatrixXd::Zero(b.rows(), b.cols());
  // Fixed (lexicographic) summation order keeps the result reproducible.
  for (const auto& g : all_permutations(static_cast<std::size_t>(n))) {
    const std::int64_t chi = table.value(row, table.class_index(g.cycle_type()));
    if (chi == 0) continue;
    accumulated += static_cast<double>(chi) * permute_rows(g, b);
  }
  const double scale = static_cast<double>(table.dimension(lambda)) / static_cast<double>(table.group_order());
  return IsotypicProjector(lambda, std::move(space), scale * (b.transpose() * accumulated));
}

IsotypicProjector isotypic_projector(const Partition& lambda, int n) {
  if (n < 2 || n > 7) throw InvalidArgument("isotypic_projector: n must lie in [2, 7]");
  return isotypic_projector(lambda, character_table(n),
                            std::make_shared<const FormSpace>(static_cast<std::size_t>(n)));
}

std::vector<Partition> lemma_summands(int n) {
  std::vector<Partition> out;
  const std::vector<std::vector<int>> shapes = {{n}, {n - 1, 1}, {n - 2, 2}, {n - 2, 1, 1}};
  for (const auto& s : shapes) {
    if (is_partition(s)) {
      Partition p(s);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  }
  return out;
}

IsotypicReport verify_lemma(int n) {
  if (n < 3 || n > 7) throw InvalidArgument("verify_lemma: n must lie in [3, 7]");
  const CharacterTable table = character_table(n);
  auto space = std::make_shared<const FormSpace>(static_cast<std::size_t>(n));
  const auto summands = lemma_summands(n);

  IsotypicReport report;
  report.n = n;
  report.expected_total = static_cast<std::size_t>((n - 1) * (n - 1));
  report.n_minus_2_2_absent = !is_partition({n - 2, 2});
  bool ok = true;
  for (const auto& lambda : table.irreps()) {
    const bool summand = std::find(summands.begin(), summands.end(), lambda) != summands.end();
    const std::size_t rank = isotypic_projector(lambda, table, space).rank();
    const std::int64_t expected = summand ? table.dimension(lambda) : 0;
    report.entries.push_back({lambda, rank, expected, summand});
    report.total_rank += rank;
    ok = ok && static_cast<std::int64_t>(rank) == expected;
  }
  report.passed = ok && report.total_rank == report.expected_total;
  return report;
}

}  // namespace talbot
