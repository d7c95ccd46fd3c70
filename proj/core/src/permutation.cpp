#include "talbot/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "talbot/errors.hpp"

namespace talbot {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidArgument("permutation images must be a bijection of {0..n-1}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const std::size_t a = cycle[k];
      if (a >= n || used[a]) throw InvalidArgument("from_cycles: cycles must be disjoint and in range");
      used[a] = true;
      images[a] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::class_representative(const Partition& cycle_type) {
  const auto n = static_cast<std::size_t>(cycle_type.size());
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t next = 0;
  for (int len : cycle_type.parts()) {
    std::vector<std::size_t> cycle(static_cast<std::size_t>(len));
    std::iota(cycle.begin(), cycle.end(), next);
    next += static_cast<std::size_t>(len);
    cycles.push_back(std::move(cycle));
  }
  return from_cycles(n, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::sign() const {
  const auto n_cycles = cycles().size();
  return (images_.size() - n_cycles) % 2 == 0 ? 1 : -1;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

std::string Permutation::to_string_one_based() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << images_[i] + 1;
  }
  os << ']';
  return os.str();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k] + 1;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()) + ")");
  }
  std::vector<std::size_t> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q(i));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::size_t lexicographic_rank(const Permutation& p) {
  // Lehmer code read as a factorial-base number.
  const std::size_t n = p.degree();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p(j) < p(i)) ++smaller_after;
    }
    rank = rank * (n - i) + smaller_after;
  }
  return rank;
}

}  // namespace talbot
