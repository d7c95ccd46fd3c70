#pragma once

// Independent brute-force oracles for the test suites. Nothing here calls the
// Murnaghan-Nakayama code, the isotypic projectors or the classifiers whose
// output it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "talbot/hermrep.hpp"
#include "talbot/partition.hpp"
#include "talbot/permutation.hpp"

namespace talbot::testing {

inline std::vector<std::vector<std::size_t>> raw_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> raw_cycle_type(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < p.size(); ++s) {
    int len = 0;
    for (std::size_t i = s; !seen[i]; i = p[i]) {
      seen[i] = true;
      ++len;
    }
    if (len) lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

/// Class sizes by enumerating all n! permutations.
inline std::map<std::vector<int>, std::uint64_t> brute_class_sizes(std::size_t n) {
  std::map<std::vector<int>, std::uint64_t> out;
  for (const auto& p : raw_permutations(n)) ++out[raw_cycle_type(p)];
  return out;
}

inline std::int64_t fixed_points(const std::vector<std::size_t>& p) {
  std::int64_t f = 0;
  for (std::size_t i = 0; i < p.size(); ++i) f += p[i] == i ? 1 : 0;
  return f;
}

/// Number of 2-element subsets fixed setwise by p.
inline std::int64_t fixed_pairs(const std::vector<std::size_t>& p) {
  std::int64_t f = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const auto a = std::min(p[i], p[j]);
      const auto b = std::max(p[i], p[j]);
      f += (a == i && b == j) ? 1 : 0;
    }
  }
  return f;
}

/// Apply f to one representative (first in enumeration) of each cycle type,
/// returning values in ascending class order.
template <typename F>
std::vector<std::int64_t> per_class(std::size_t n, F f) {
  std::map<std::vector<int>, std::int64_t> values;
  for (const auto& p : raw_permutations(n)) {
    auto type = raw_cycle_type(p);
    if (!values.count(type)) values[type] = f(p);
  }
  std::vector<std::int64_t> out;
  for (const auto& type : class_order(static_cast<int>(n))) out.push_back(values.at(type.parts()));
  return out;
}

/// dim V_lambda = n! / prod(hook lengths).
inline std::int64_t hook_length_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  double denom = 1.0;
  for (std::size_t r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      const int arm = lambda[r] - c - 1;
      const int leg = conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
      denom *= arm + leg + 1;
    }
  }
  double num = 1.0;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  return static_cast<std::int64_t>(std::llround(num / denom));
}

/// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Permutation permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng_);
    return Permutation(std::move(p));
  }

  std::complex<double> complex() {
    std::normal_distribution<double> d(0.0, 1.0);
    const double re = d(rng_);
    const double im = d(rng_);
    return {re, im};
  }

  std::complex<double> nonzero_complex() {
    std::complex<double> z;
    do {
      z = complex();
    } while (std::abs(z) < 1e-3);
    return z;
  }

  PointV point(std::size_t n) {
    std::vector<std::complex<double>> c(n);
    for (auto& v : c) v = complex();
    return PointV::project(std::move(c));
  }

  HermitianForm form(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    ComplexMatrix x(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) x(i, j) = complex();
    }
    return HermitianForm::canonicalize(x + x.adjoint());
  }

  std::size_t index(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// A point of V whose moduli tie on exactly {i, j}: start from a generic
/// point, rescale z_j to |z_i|, then rebalance a third coordinate m so the
/// sum stays zero. Also returns the perturbations z_i -> (1 +/- eps) z_i
/// (rebalanced through z_m), with eps small against every other modulus gap.
struct WallStraddle {
  PointV on_wall;
  PointV plus;
  PointV minus;
  std::size_t i;
  std::size_t j;
};

inline WallStraddle straddle_wall(std::size_t n, Gen& gen) {
  for (;;) {
    std::vector<std::complex<double>> z;
    {
      const PointV base = gen.point(n);
      z = base.coords();
    }
    const std::size_t i = gen.index(n);
    std::size_t j = gen.index(n);
    while (j == i) j = gen.index(n);
    std::size_t m = 0;
    while (m == i || m == j) ++m;

    z[j] *= std::abs(z[i]) / std::abs(z[j]);
    std::complex<double> rest{};
    for (std::size_t k = 0; k < n; ++k) {
      if (k != m) rest += z[k];
    }
    z[m] = -rest;

    std::vector<double> mod(n);
    for (std::size_t k = 0; k < n; ++k) mod[k] = std::norm(z[k]);
    const double scale = *std::max_element(mod.begin(), mod.end());
    double gap = scale;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if ((a == i && b == j) || (a == j && b == i)) continue;
        gap = std::min(gap, std::abs(mod[a] - mod[b]));
      }
    }
    if (gap < 1e-6 * scale) continue;  // a second near-tie; draw again

    const double eps = 0.05 * gap / (mod[i] + std::abs(z[m]) * std::abs(z[i]) + 1e-300);
    auto perturbed = [&](double s) {
      auto w = z;
      w[i] *= 1.0 + s * eps;
      w[m] -= s * eps * z[i];
      return PointV(std::move(w));
    };
    return {PointV(z), perturbed(+1.0), perturbed(-1.0), i, j};
  }
}

}  // namespace talbot::testing
