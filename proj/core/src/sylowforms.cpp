#include "talbot/sylowforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "talbot/chartab.hpp"
#include "talbot/errors.hpp"

namespace talbot {

namespace {

constexpr std::size_t kDegree = 5;
constexpr std::size_t kLetters = 6;
constexpr int kMaxAttempts = 16;

HermitianForm random_form(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto k = static_cast<Eigen::Index>(kDegree);
  ComplexMatrix x(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      x(i, j) = Complex(re, im);
    }
  }
  return HermitianForm::canonicalize(x + x.adjoint());
}

std::vector<Permutation> even_permutations() { return alternating_group(kDegree).elements(); }

Eigen::MatrixXd coordinate_columns(const SylowBasis& basis) {
  Eigen::MatrixXd k(static_cast<Eigen::Index>(basis.space->dimension()),
                    static_cast<Eigen::Index>(basis.forms.size()));
  for (std::size_t i = 0; i < basis.forms.size(); ++i) {
    k.col(static_cast<Eigen::Index>(i)) = basis.space->coordinates(basis.forms[i]);
  }
  return k;
}

Eigen::MatrixXd raw_action_matrix(const SylowBasis& basis, const Eigen::MatrixXd& k,
                                  const Permutation& g) {
  Eigen::MatrixXd y(k.rows(), k.cols());
  for (std::size_t j = 0; j < basis.forms.size(); ++j) {
    y.col(static_cast<Eigen::Index>(j)) = basis.space->coordinates(act(g, basis.forms[j]));
  }
  return (k.transpose() * k).ldlt().solve(k.transpose() * y);
}

Eigen::MatrixXd round_near_integers(Eigen::MatrixXd m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double r = std::round(m(i, j));
      if (std::abs(m(i, j) - r) < 1e-9) m(i, j) = r == 0.0 ? 0.0 : r;
    }
  }
  return m;
}

bool is_permutation_matrix(const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int ones = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 1.0) {
        ++ones;
      } else if (m(i, j) != 0.0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return (m.colwise().sum().array() == 1.0).all();
}

}  // namespace

SylowBasis build_sylow_basis(std::uint64_t seed) {
  SylowBasis basis;
  basis.subgroups = sylow5_subgroups();
  basis.space = std::make_shared<const FormSpace>(kDegree);
  const CharacterTable table = character_table(static_cast<int>(kDegree));
  const auto trivial_projector = isotypic_projector(Partition{5}, table, basis.space);
  const auto component_projector = isotypic_projector(Partition{3, 2}, table, basis.space);
  const Subgroup a5 = alternating_group(kDegree);
  const Subgroup stabilizer = normalizer(basis.subgroups[0], a5);

  const HermitianForm trivial_part = invariant_form(kDegree) * (1.0 / static_cast<double>(kLetters));
  const double target_norm = trivial_part.matrix().norm();

  // First basis vector whose projection onto the fixed line is nonzero.
  auto fixed_line = [&](const HermitianForm& h) {
    HermitianForm avg = HermitianForm::zero(kDegree);
    for (const auto& g : stabilizer.elements()) avg = avg + act(g, h);
    return component_projector.apply(avg * (1.0 / static_cast<double>(stabilizer.order())));
  };
  std::size_t reference = 0;
  while (reference < basis.space->dimension() &&
         fixed_line(basis.space->basis()[reference]).matrix().norm() < 1e-6) {
    ++reference;
  }
  if (reference == basis.space->dimension()) {
    throw InvariantViolation("build_sylow_basis: stabilizer-fixed line in V_(3,2) is empty");
  }

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const HermitianForm raw = random_form(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    const HermitianForm seeded = trivial_projector.apply(raw) + component_projector.apply(raw);

    HermitianForm averaged = HermitianForm::zero(kDegree);
    for (const auto& g : stabilizer.elements()) averaged = averaged + act(g, seeded);
    averaged = averaged * (1.0 / static_cast<double>(stabilizer.order()));

    // The stabilizer-fixed part of 1 + V_(3,2) is two-dimensional: the trivial
    // line and one line in V_(3,2). Sum k_i = P pins the first; the second is
    // pinned by its norm and by the sign of its overlap with a fixed reference.
    HermitianForm component = component_projector.apply(averaged);
    const double norm = component.matrix().norm();
    if (norm < 1e-6 * std::max(1.0, seeded.matrix().norm())) continue;
    component = component * (target_norm / norm);
    const double overlap = frobenius_inner(component, basis.space->basis()[reference]);
    const int sign = overlap > 0 ? 1 : -1;
    component = component * static_cast<double>(sign);
    const HermitianForm first = trivial_part + component;

    std::vector<std::optional<HermitianForm>> forms(kLetters);
    for (const auto& g : a5.elements()) {
      const std::size_t target = conjugation_action(g, basis.subgroups)(0);
      if (!forms[target]) forms[target] = act(g, first);
    }
    basis.forms.clear();
    for (auto& f : forms) {
      if (!f) throw InvariantViolation("build_sylow_basis: A_5 is not transitive on Sylow subgroups");
      basis.forms.push_back(std::move(*f));
    }
    if (numerical_rank(gram_matrix(basis.forms)) != kLetters) continue;

    basis.normalization.seed = seed;
    basis.normalization.attempts = attempt + 1;
    basis.normalization.trivial_coefficient = 1.0 / static_cast<double>(kLetters);
    basis.normalization.component_norm = target_norm;
    basis.normalization.sign_reference = reference;
    basis.normalization.sign_flip = sign;
    return basis;
  }
  throw ConstructionFailure("build_sylow_basis: no non-degenerate seed after " +
                            std::to_string(kMaxAttempts) + " attempts");
}

Eigen::MatrixXd basis_action_matrix(const SylowBasis& basis, const Permutation& g) {
  return round_near_integers(raw_action_matrix(basis, coordinate_columns(basis), g));
}

SignTwistReport sign_twist_report(const SylowBasis& basis) {
  SignTwistReport report;
  const Eigen::MatrixXd k = coordinate_columns(basis);
  const std::vector<std::pair<std::string, Permutation>> generators = {
      {"identity", Permutation::identity(kDegree)},
      {"5-cycle (1 2 3 4 5)", Permutation::from_cycles(kDegree, {{0, 1, 2, 3, 4}})},
      {"transposition (1 2)", Permutation::from_cycles(kDegree, {{0, 1}})},
  };
  for (const auto& [name, g] : generators) {
    TwistEntry e;
    e.name = name;
    e.generator = g;
    e.parity = g.sign();
    e.matrix = round_near_integers(raw_action_matrix(basis, k, g));
    e.is_permutation_matrix = is_permutation_matrix(e.matrix);
    e.conjugation = conjugation_action(g, basis.subgroups);
    report.entries.push_back(std::move(e));
  }
  const CharacterTable table = character_table(static_cast<int>(kDegree));
  const ClassFunction expected = table.row(Partition{5}) + table.row(Partition{3, 2});
  for (std::size_t c = 0; c < table.classes().size(); ++c) {
    const auto rep = Permutation::class_representative(table.classes()[c].cycle_type);
    report.class_traces.push_back(raw_action_matrix(basis, k, rep).trace());
    report.expected_traces.push_back(expected[c]);
  }
  return report;
}

SignCharacterIdentity sign_character_identity() {
  const CharacterTable table = character_table(static_cast<int>(kDegree));
  const auto sylows = sylow5_subgroups();
  SignCharacterIdentity out;
  out.twist_matches = tensor_sign(table.row(Partition{3, 2})) == table.row(Partition{2, 2, 1});
  out.sylow_permutation_character = perm_character(
      [&](const Permutation& g) {
        const Permutation sigma = conjugation_action(g, sylows);
        std::int64_t fixed = 0;
        for (std::size_t i = 0; i < sigma.degree(); ++i) fixed += sigma(i) == i ? 1 : 0;
        return fixed;
      },
      table);
  try {
    const auto support = decompose(out.sylow_permutation_character, table).support();
    const std::vector<std::pair<Partition, std::int64_t>> expected = {{Partition{5}, 1},
                                                                      {Partition{2, 2, 1}, 1}};
    out.permutation_character_ok = support == expected;
  } catch (const NotACharacter&) {
    out.permutation_character_ok = false;
  }
  const ClassFunction twisted_trivial = tensor_sign(table.trivial());
  out.trivial_not_self_twisted =
      twisted_trivial == table.row(Partition{1, 1, 1, 1, 1}) && twisted_trivial != table.trivial();
  return out;
}

RegionClassification classify_region(const PointV& z, const SylowBasis& basis, double tol) {
  if (z.degree() != kDegree) throw InvalidArgument("classify_region: point must have degree 5");
  if (z.is_zero()) throw ZeroPoint("classify_region: the zero point has no region (regions live in PV)");
  RegionClassification out;
  for (const auto& k : basis.forms) out.values.push_back(evaluate_diagonal(k, z));
  double scale = 0.0;
  for (double v : out.values) scale = std::max(scale, std::abs(v));

  std::vector<std::size_t> order(out.values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return out.values[a] > out.values[b]; });
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    if (std::abs(out.values[order[k]] - out.values[order[k + 1]]) <= tol * scale) {
      out.ties.emplace_back(order[k], order[k + 1]);
    }
  }
  std::sort(out.ties.begin(), out.ties.end());
  out.interior = out.ties.empty();
  out.order = Permutation(std::move(order));
  return out;
}

namespace {

struct RegionShard {
  std::map<Permutation, std::size_t> occupancy;
  std::map<IndexPair, std::size_t> walls;
  std::size_t boundary = 0;
};

}  // namespace

RegionReport region_statistics(std::size_t samples, std::uint64_t seed, const SylowBasis& basis,
                               double tol, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, samples)));
  std::vector<RegionShard> shards(workers);
  auto run = [&](unsigned w) {
    auto& shard = shards[w];
    for (std::size_t s = w; s < samples; s += workers) {
      const PointV z = sample_point(kDegree, derive_seed(seed, s));
      const auto r = classify_region(z, basis, tol);
      double scale = 0.0;
      for (double v : r.values) scale = std::max(scale, std::abs(v));
      for (std::size_t i = 0; i < kLetters; ++i) {
        for (std::size_t j = i + 1; j < kLetters; ++j) {
          if (std::abs(r.values[i] - r.values[j]) <= tol * scale) ++shard.walls[IndexPair(i, j)];
        }
      }
      if (r.interior) {
        ++shard.occupancy[r.order];
      } else {
        ++shard.boundary;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  RegionReport report;
  report.samples = samples;
  report.seed = seed;
  report.tol = tol;
  for (const auto& shard : shards) {
    for (const auto& [order, count] : shard.occupancy) report.occupancy[order] += count;
    for (const auto& [pair, count] : shard.walls) report.wall_incidence[pair] += count;
    report.boundary_samples += shard.boundary;
  }
  report.distinct_orderings = report.occupancy.size();

  std::vector<Permutation> image;
  for (const auto& g : even_permutations()) image.push_back(conjugation_action(g, basis.subgroups));

  std::map<Permutation, RegionOrbit> orbits;
  for (const auto& [order, count] : report.occupancy) {
    Permutation rep = order;
    for (const auto& h : image) rep = std::min(rep, h * order);
    auto [it, inserted] = orbits.try_emplace(rep);
    auto& orbit = it->second;
    if (inserted) {
      orbit.representative = rep;
      orbit.min_occupancy = count;
    }
    ++orbit.observed;
    orbit.samples += count;
    orbit.min_occupancy = std::min(orbit.min_occupancy, count);
    orbit.max_occupancy = std::max(orbit.max_occupancy, count);
  }
  const double orbit_size = static_cast<double>(image.size());
  const boost::math::chi_squared_distribution<double> chi2(orbit_size - 1.0);
  for (auto& [rep, orbit] : orbits) {
    if (orbit.observed == image.size() && orbit.min_occupancy > 0) {
      report.max_orbit_ratio =
          std::max(report.max_orbit_ratio,
                   static_cast<double>(orbit.max_occupancy) / static_cast<double>(orbit.min_occupancy));
    }
    const double mean = static_cast<double>(orbit.samples) / orbit_size;
    double stat = mean * static_cast<double>(image.size() - orbit.observed);  // unobserved members
    for (const auto& h : image) {
      auto it = report.occupancy.find(h * rep);
      if (it == report.occupancy.end()) continue;
      const double d = static_cast<double>(it->second) - mean;
      stat += d * d / mean;
    }
    orbit.chi_square = stat;
    orbit.p_value = boost::math::cdf(boost::math::complement(chi2, stat));
    report.min_orbit_p_value = std::min(report.min_orbit_p_value, orbit.p_value);
    report.orbits.push_back(orbit);
  }
  if (!report.orbits.empty()) {
    report.orbits_consistent =
        report.min_orbit_p_value >= 1e-3 / static_cast<double>(report.orbits.size());
  }
  return report;
}

std::vector<SylowCheck> verify_sylow_basis(const SylowBasis& basis, std::uint64_t seed) {
  std::vector<SylowCheck> checks;
  auto add = [&](std::string name, bool passed, double measured, std::string detail) {
    checks.push_back({std::move(name), passed, measured, std::move(detail)});
  };

  bool orders_ok = basis.subgroups.size() == kLetters;
  for (const auto& s : basis.subgroups) orders_ok = orders_ok && s.order() == 5;
  add("sylow_subgroups", orders_ok, static_cast<double>(basis.subgroups.size()),
      "six subgroups of order 5");

  const Subgroup s5 = symmetric_group(kDegree);
  std::size_t kernel = 0;
  for (const auto& g : s5.elements()) kernel += conjugation_action(g, basis.subgroups).is_identity() ? 1 : 0;
  add("conjugation_injective", kernel == 1, static_cast<double>(kernel),
      "elements of S_5 acting trivially on the six subgroups");

  add("character_identities", sign_character_identity().ok(), 0.0,
      "chi_(3,2) x sgn = chi_(2,2,1); Sylow permutation character = 1 + V_(2,2,1)");

  const CharacterTable table = character_table(static_cast<int>(kDegree));
  const auto pi5 = isotypic_projector(Partition{5}, table, basis.space);
  const auto pi32 = isotypic_projector(Partition{3, 2}, table, basis.space);
  double residual = 0.0;
  for (const auto& k : basis.forms) {
    residual = std::max(residual, frobenius_distance(k, pi5.apply(k) + pi32.apply(k)));
  }
  add("isotypic_residual", residual < 1e-9, residual, "max_i ||k_i - (pi_(5) + pi_(3,2)) k_i||_F");

  HermitianForm sum = HermitianForm::zero(kDegree);
  for (const auto& k : basis.forms) sum = sum + k;
  const double sum_error = frobenius_distance(sum, invariant_form(kDegree));
  add("sum_equals_invariant_form", sum_error < 1e-9, sum_error, "||sum_i k_i - P||_F");

  const auto rank = numerical_rank(gram_matrix(basis.forms));
  add("gram_rank", rank == kLetters, static_cast<double>(rank), "rank of the 6x6 Gram matrix");

  double a5_error = 0.0;
  for (const auto& g : even_permutations()) {
    const Permutation sigma = conjugation_action(g, basis.subgroups);
    for (std::size_t i = 0; i < kLetters; ++i) {
      a5_error = std::max(a5_error, frobenius_distance(act(g, basis.forms[i]), basis.forms[sigma(i)]));
    }
  }
  add("a5_permutation_action", a5_error < 1e-9, a5_error,
      "max over 60 even g and all i of ||g.k_i - k_sigma(i)||_F");

  const auto twist = sign_twist_report(basis);
  double trace_error = 0.0;
  for (std::size_t c = 0; c < twist.class_traces.size(); ++c) {
    trace_error = std::max(trace_error, std::abs(twist.class_traces[c] -
                                                 static_cast<double>(twist.expected_traces[c])));
  }
  add("class_traces", trace_error < 1e-9, trace_error, "traces vs chi_(5) + chi_(3,2)");

  const Eigen::MatrixXd k = coordinate_columns(basis);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, s5.order() - 1);
  double rep_error = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto& g = s5.elements()[pick(rng)];
    const auto& h = s5.elements()[pick(rng)];
    const Eigen::MatrixXd lhs = raw_action_matrix(basis, k, g) * raw_action_matrix(basis, k, h);
    rep_error = std::max(rep_error, (lhs - raw_action_matrix(basis, k, g * h)).cwiseAbs().maxCoeff());
  }
  add("representation_property", rep_error < 1e-8, rep_error, "max |M(g)M(h) - M(gh)| on 20 random pairs");

  return checks;
}

}  // namespace talbot
