#include "talbot/chambers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "talbot/errors.hpp"

namespace talbot {

PointV act_point(const Permutation& g, const PointV& z) {
  if (g.degree() != z.degree()) throw InvalidArgument("act_point: permutation and point differ in degree");
  std::vector<Complex> out(z.degree());
  for (std::size_t i = 0; i < z.degree(); ++i) out[g(i)] = z[i];
  return PointV(std::move(out));
}

namespace {

void require_classifiable(const PointV& z) {
  if (z.degree() <= 2) {
    throw DegenerateDimension("classify: n <= 2 has no chamber interiors (|z_1| = |z_2| on all of V)");
  }
  if (z.is_zero()) {
    throw ZeroPoint("classify: the zero point has no chamber (chambers live in PV)");
  }
}

std::vector<std::size_t> descending_order(const std::vector<double>& keys) {
  std::vector<std::size_t> idx(keys.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
  return idx;
}

}  // namespace

Classification classify(const PointV& z, double tol) {
  require_classifiable(z);
  const auto moduli = z.moduli_squared();
  const double scale = *std::max_element(moduli.begin(), moduli.end());
  auto order = descending_order(moduli);

  Classification out;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    if (std::abs(moduli[order[k]] - moduli[order[k + 1]]) <= tol * scale) {
      out.ties.emplace_back(order[k], order[k + 1]);
    }
  }
  std::sort(out.ties.begin(), out.ties.end());
  out.interior = out.ties.empty();
  out.label.perm = Permutation(std::move(order));
  return out;
}

bool satisfies_chamber(const PointV& z, const ChamberLabel& label) {
  if (label.perm.degree() != z.degree()) throw InvalidArgument("satisfies_chamber: degree mismatch");
  const auto moduli = z.moduli_squared();
  for (std::size_t k = 0; k + 1 < moduli.size(); ++k) {
    if (moduli[label.perm(k)] < moduli[label.perm(k + 1)]) return false;
  }
  return true;
}

std::pair<PointV, ChamberLabel> canonical_representative(const PointV& z, double tol) {
  auto c = classify(z, tol);
  return {act_point(c.label.perm.inverse(), z), c.label};
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  auto splitmix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return splitmix(master ^ splitmix(index));
}

PointV sample_point(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<Complex> coords(n);
  for (auto& c : coords) {
    const double re = normal(rng);
    const double im = normal(rng);
    c = Complex(re, im);
  }
  return PointV::project(std::move(coords));
}

namespace {

struct PartitionShard {
  std::map<ChamberLabel, std::size_t> occupancy;
  std::size_t boundary_hits = 0;
  std::size_t violations = 0;
};

unsigned resolve_workers(unsigned requested, std::size_t samples) {
  unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(w, samples)));
}

}  // namespace

PartitionReport verify_partition(std::size_t n, std::size_t samples, std::uint64_t seed,
                                 const PartitionOptions& options) {
  if (n < 3) throw DegenerateDimension("verify_partition: n must be at least 3");
  if (options.exhaustive_labels && n > 7) {
    throw InvalidArgument("verify_partition: exhaustive label checks are capped at n <= 7");
  }
  const std::vector<Permutation> labels =
      options.exhaustive_labels ? all_permutations(n) : std::vector<Permutation>{};

  const unsigned workers = resolve_workers(options.workers, samples);
  std::vector<PartitionShard> shards(workers);
  auto run = [&](unsigned w) {
    auto& shard = shards[w];
    for (std::size_t s = w; s < samples; s += workers) {
      const PointV z = sample_point(n, derive_seed(seed, s));
      const auto c = classify(z, options.tol);
      if (!c.interior) {
        ++shard.boundary_hits;
        continue;
      }
      ++shard.occupancy[c.label];
      if (options.exhaustive_labels) {
        std::size_t satisfied = 0;
        for (const auto& g : labels) satisfied += satisfies_chamber(z, ChamberLabel{g}) ? 1 : 0;
        if (satisfied != 1) ++shard.violations;
      } else if (!satisfies_chamber(z, c.label)) {
        ++shard.violations;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  PartitionReport report;
  report.n = n;
  report.samples = samples;
  report.seed = seed;
  report.tol = options.tol;
  report.exhaustive_labels = options.exhaustive_labels;
  for (const auto& shard : shards) {
    for (const auto& [label, count] : shard.occupancy) report.occupancy[label] += count;
    report.boundary_hits += shard.boundary_hits;
    report.partition_violations += shard.violations;
  }
  std::size_t total = 1;
  for (std::size_t k = 2; k <= n; ++k) total *= k;
  report.chambers_total = total;
  report.chambers_occupied = report.occupancy.size();
  if (report.chambers_occupied < total || report.occupancy.empty()) {
    report.occupancy_ratio = std::numeric_limits<double>::infinity();
  } else {
    std::size_t lo = std::numeric_limits<std::size_t>::max();
    std::size_t hi = 0;
    for (const auto& [label, count] : report.occupancy) {
      lo = std::min(lo, count);
      hi = std::max(hi, count);
    }
    report.occupancy_ratio = static_cast<double>(hi) / static_cast<double>(lo);
  }
  return report;
}

OrbitBijection orbit_bijection(const PointV& z, double tol) {
  if (z.degree() > 7) throw InvalidArgument("orbit_bijection: exhaustive check is capped at n <= 7");
  if (!classify(z, tol).interior) throw InvalidArgument("orbit_bijection: z lies on a chamber wall");
  std::map<ChamberLabel, Permutation> seen;
  OrbitBijection out;
  for (const auto& w : all_permutations(z.degree())) {
    auto label = classify(act_point(w, z), tol).label;
    auto [it, inserted] = seen.emplace(std::move(label), w);
    if (!inserted) {
      out.collision = std::make_pair(it->second, w);
      return out;
    }
  }
  // |S_n| distinct labels out of n! possible: the map is onto as well.
  out.bijective = true;
  return out;
}

std::vector<IndexPair> active_walls(const PointV& z, double tol) {
  if (z.is_zero()) throw ZeroPoint("active_walls: the zero point lies on every wall");
  const auto moduli = z.moduli_squared();
  const double scale = *std::max_element(moduli.begin(), moduli.end());
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      if (std::abs(moduli[i] - moduli[j]) <= tol * scale) out.emplace_back(i, j);
    }
  }
  return out;
}

bool adjacent_labels(const ChamberLabel& a, const ChamberLabel& b) {
  const std::size_t n = a.perm.degree();
  if (b.perm.degree() != n) throw InvalidArgument("adjacent_labels: degree mismatch");
  std::vector<std::size_t> diff;
  for (std::size_t k = 0; k < n; ++k) {
    if (a.perm(k) != b.perm(k)) diff.push_back(k);
  }
  return diff.size() == 2 && diff[1] == diff[0] + 1 && a.perm(diff[0]) == b.perm(diff[1]) &&
         a.perm(diff[1]) == b.perm(diff[0]);
}

AdjacencySummary chamber_adjacency(std::size_t n) {
  if (n < 1 || n > 6) throw InvalidArgument("chamber_adjacency: n must lie in [1, 6]");
  const auto labels = all_permutations(n);
  std::vector<std::vector<std::size_t>> neighbours(labels.size());
  AdjacencySummary out;
  out.vertices = labels.size();
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (adjacent_labels(ChamberLabel{labels[a]}, ChamberLabel{labels[b]})) {
        neighbours[a].push_back(b);
        neighbours[b].push_back(a);
        ++out.edges;
      }
    }
  }
  out.min_degree = labels.size();
  for (const auto& nb : neighbours) {
    out.min_degree = std::min(out.min_degree, nb.size());
    out.max_degree = std::max(out.max_degree, nb.size());
  }
  std::vector<bool> seen(labels.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : neighbours[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  out.connected = reached == labels.size();
  return out;
}

}  // namespace talbot
