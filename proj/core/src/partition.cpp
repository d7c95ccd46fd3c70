#include "talbot/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "talbot/errors.hpp"

namespace talbot {

bool is_partition(const std::vector<int>& parts) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 1) return false;
    if (k + 1 < parts.size() && parts[k] < parts[k + 1]) return false;
  }
  return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_partition(parts_)) {
    throw InvalidArgument("partition parts must be positive and weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition{};
  for (int col = 1; col <= parts_.front(); ++col) {
    int height = 0;
    for (int p : parts_) {
      if (p >= col) ++height;
    }
    out.push_back(height);
  }
  return Partition(std::move(out));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) os << ',';
    os << parts_[k];
  }
  os << ')';
  return os.str();
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_descending(int n) {
  if (n < 0) throw InvalidArgument("partitions_descending: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  return out;
}

std::vector<Partition> class_order(int n) {
  auto out = partitions_descending(n);
  std::reverse(out.begin(), out.end());
  return out;
}

Partition square_cycle_type(const Partition& cycle_type) {
  std::vector<int> parts;
  for (int len : cycle_type.parts()) {
    if (len % 2 == 0) {
      parts.push_back(len / 2);
      parts.push_back(len / 2);
    } else {
      parts.push_back(len);
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int cycle_type_sign(const Partition& cycle_type) {
  const int parity = (cycle_type.size() - static_cast<int>(cycle_type.length())) % 2;
  return parity == 0 ? 1 : -1;
}

}  // namespace talbot
