#include "talbot/chartab.hpp"

#include <algorithm>
#include <map>

#include "talbot/errors.hpp"

namespace talbot {

ClassFunction::ClassFunction(int n, std::vector<std::int64_t> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1) throw InvalidArgument("ClassFunction: n must be positive");
  if (values_.size() != class_order(n).size()) {
    throw InvalidArgument("ClassFunction: expected one value per conjugacy class of S_" +
                          std::to_string(n));
  }
}

ClassFunction ClassFunction::constant(int n, std::int64_t value) {
  return ClassFunction(n, std::vector<std::int64_t>(class_order(n).size(), value));
}

namespace {

void require_compatible(const ClassFunction& a, const ClassFunction& b) {
  if (a.n() != b.n() || a.size() != b.size()) {
    throw InvalidArgument("class functions of different degrees");
  }
}

template <typename Op>
ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b, Op op) {
  require_compatible(a, b);
  std::vector<std::int64_t> out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = op(a[c], b[c]);
  return ClassFunction(a.n(), std::move(out));
}

}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, std::plus<>());
}
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, std::minus<>());
}
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, std::multiplies<>());
}
ClassFunction operator*(std::int64_t k, const ClassFunction& a) {
  std::vector<std::int64_t> out(a.values());
  for (auto& v : out) v *= k;
  return ClassFunction(a.n(), std::move(out));
}

// --- Murnaghan-Nakayama -----------------------------------------------------

namespace {

// Beta-set (first-column hook lengths) of a partition, in decreasing order.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + len - 1 - i;
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

using MnKey = std::pair<std::vector<int>, std::size_t>;
using MnMemo = std::map<MnKey, std::int64_t>;

// chi_shape evaluated at the cycle type cycles[next..].
std::int64_t mn_recurse(const std::vector<int>& shape, const std::vector<int>& cycles,
                        std::size_t next, MnMemo& memo) {
  if (next == cycles.size()) return shape.empty() ? 1 : 0;
  const MnKey key{shape, next};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Removing a k-border strip moves one bead of the beta-set down by k; the
  // strip height is the number of beads jumped over.
  const int k = cycles[next];
  const std::vector<int> beta = beta_set(shape);
  std::int64_t total = 0;
  for (std::size_t b = 0; b < beta.size(); ++b) {
    const int target = beta[b] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int other : beta) {
      if (other > target && other < beta[b]) ++height;
    }
    std::vector<int> moved = beta;
    moved[b] = target;
    const std::int64_t sub = mn_recurse(from_beta_set(std::move(moved)), cycles, next + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(key, total);
  return total;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace

std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size()) {
    throw InvalidArgument("murnaghan_nakayama: shape and cycle type have different sizes");
  }
  MnMemo memo;
  return mn_recurse(lambda.parts(), cycle_type.parts(), 0, memo);
}

CharacterTable character_table(int n) {
  if (n < 1 || n > 10) throw InvalidArgument("character_table: n must lie in [1, 10]");
  CharacterTable t;
  t.n_ = n;
  t.group_order_ = factorial(n);
  t.classes_ = conjugacy_classes(n);
  t.irreps_ = partitions_descending(n);
  // One memo per cycle type: keys are (shape, position in that cycle type).
  t.values_.assign(t.irreps_.size(), std::vector<std::int64_t>(t.classes_.size(), 0));
  for (std::size_t c = 0; c < t.classes_.size(); ++c) {
    MnMemo memo;
    const auto& cycles = t.classes_[c].cycle_type.parts();
    for (std::size_t r = 0; r < t.irreps_.size(); ++r) {
      t.values_[r][c] = mn_recurse(t.irreps_[r].parts(), cycles, 0, memo);
    }
  }
  return t;
}

std::size_t CharacterTable::irrep_index(const Partition& lambda) const {
  auto it = std::find(irreps_.begin(), irreps_.end(), lambda);
  if (it == irreps_.end()) throw InvalidArgument("no irrep " + lambda.to_string() + " in table");
  return static_cast<std::size_t>(it - irreps_.begin());
}

std::size_t CharacterTable::class_index(const Partition& cycle_type) const {
  auto it = std::find_if(classes_.begin(), classes_.end(),
                         [&](const ConjugacyClass& c) { return c.cycle_type == cycle_type; });
  if (it == classes_.end()) throw InvalidArgument("no class " + cycle_type.to_string() + " in table");
  return static_cast<std::size_t>(it - classes_.begin());
}

ClassFunction CharacterTable::row(std::size_t irrep) const { return ClassFunction(n_, values_.at(irrep)); }
ClassFunction CharacterTable::row(const Partition& lambda) const { return row(irrep_index(lambda)); }
std::int64_t CharacterTable::dimension(const Partition& lambda) const {
  return values_[irrep_index(lambda)][0];
}
ClassFunction CharacterTable::trivial() const { return ClassFunction::constant(n_, 1); }
ClassFunction CharacterTable::sign() const {
  std::vector<std::int64_t> v;
  for (const auto& c : classes_) v.push_back(cycle_type_sign(c.cycle_type));
  return ClassFunction(n_, std::move(v));
}

// --- Inner products and decompositions ---------------------------------------

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_compatible(a, b);
  const auto classes = conjugacy_classes(a.n());
  std::int64_t sum = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    sum += static_cast<std::int64_t>(classes[c].size) * a[c] * b[c];
  }
  return Rational(sum, static_cast<std::int64_t>(factorial(a.n())));
}

std::int64_t Decomposition::multiplicity(const Partition& lambda) const {
  for (const auto& [label, m] : multiplicities) {
    if (label == lambda) return m;
  }
  return 0;
}

std::vector<std::pair<Partition, std::int64_t>> Decomposition::support() const {
  std::vector<std::pair<Partition, std::int64_t>> out;
  for (const auto& entry : multiplicities) {
    if (entry.second != 0) out.push_back(entry);
  }
  return out;
}

Decomposition decompose(const ClassFunction& f, const CharacterTable& table) {
  if (f.n() != table.n()) throw InvalidArgument("decompose: class function and table differ in n");
  Decomposition d;
  ClassFunction rebuilt = ClassFunction::constant(f.n(), 0);
  for (std::size_t r = 0; r < table.irreps().size(); ++r) {
    const ClassFunction chi = table.row(r);
    const Rational m = inner_product(f, chi);
    if (m.denominator() != 1 || m.numerator() < 0) {
      throw NotACharacter("not a character: multiplicity of " + table.irreps()[r].to_string() +
                          " is " + std::to_string(m.numerator()) + "/" +
                          std::to_string(m.denominator()));
    }
    d.multiplicities.emplace_back(table.irreps()[r], m.numerator());
    rebuilt = rebuilt + m.numerator() * chi;
  }
  if (rebuilt != f) throw NotACharacter("not a character: reconstruction does not reproduce f");
  return d;
}

ClassFunction perm_character(const std::function<std::int64_t(const Permutation&)>& fixed_points,
                             const CharacterTable& table) {
  std::vector<std::int64_t> v;
  for (const auto& c : table.classes()) {
    v.push_back(fixed_points(Permutation::class_representative(c.cycle_type)));
  }
  return ClassFunction(table.n(), std::move(v));
}

namespace {

ClassFunction power_combination(const ClassFunction& chi, int sign_of_square_term) {
  const auto types = class_order(chi.n());
  std::vector<std::int64_t> out(chi.size());
  for (std::size_t c = 0; c < chi.size(); ++c) {
    const Partition sq = square_cycle_type(types[c]);
    const auto sq_index =
        static_cast<std::size_t>(std::find(types.begin(), types.end(), sq) - types.begin());
    const std::int64_t twice = chi[c] * chi[c] + sign_of_square_term * chi[sq_index];
    if (twice % 2 != 0) throw NotACharacter("symmetric/alternating square is not integral");
    out[c] = twice / 2;
  }
  return ClassFunction(chi.n(), std::move(out));
}

}  // namespace

ClassFunction sym2_character(const ClassFunction& chi) { return power_combination(chi, +1); }
ClassFunction alt2_character(const ClassFunction& chi) { return power_combination(chi, -1); }

ClassFunction tensor_sign(const ClassFunction& chi) {
  const auto types = class_order(chi.n());
  std::vector<std::int64_t> out(chi.size());
  for (std::size_t c = 0; c < chi.size(); ++c) out[c] = cycle_type_sign(types[c]) * chi[c];
  return ClassFunction(chi.n(), std::move(out));
}

}  // namespace talbot
