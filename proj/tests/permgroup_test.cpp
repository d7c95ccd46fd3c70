#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "talbot/errors.hpp"
#include "talbot/permgroup.hpp"

namespace talbot {
namespace {

using testing::Gen;

Permutation perm(std::vector<std::size_t> images) { return Permutation(std::move(images)); }

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(perm({0, 0, 1}), InvalidArgument);
  EXPECT_THROW(perm({0, 3, 1}), InvalidArgument);
}

TEST(Permutation, ComposeExamples) {
  EXPECT_EQ(compose(perm({1, 0, 2}), perm({0, 2, 1})), perm({1, 2, 0}));
  const auto q = perm({3, 1, 4, 0, 2});
  EXPECT_EQ(compose(Permutation::identity(5), q), q);
  const auto c = perm({1, 2, 3, 4, 0});
  EXPECT_TRUE(compose(c, c.inverse()).is_identity());
}

TEST(Permutation, ComposeDegreeMismatchThrows) {
  EXPECT_THROW(compose(Permutation::identity(3), Permutation::identity(4)), InvalidArgument);
}

TEST(Permutation, Sign) {
  EXPECT_EQ(perm({1, 0, 2, 3, 4}).sign(), -1);
  EXPECT_EQ(perm({1, 2, 3, 4, 0}).sign(), 1);
  EXPECT_EQ(Permutation::identity(5).sign(), 1);
}

TEST(Permutation, CycleType) {
  EXPECT_EQ(perm({1, 0, 3, 2, 4}).cycle_type(), (Partition{2, 2, 1}));
  EXPECT_EQ(Permutation::identity(5).cycle_type(), (Partition{1, 1, 1, 1, 1}));
  EXPECT_EQ(perm({1, 2, 3, 4, 0}).cycle_type(), (Partition{5}));
}

TEST(Permutation, OneBasedRendering) {
  EXPECT_EQ(perm({0, 4, 1, 2, 3}).to_string_one_based(), "[1,5,2,3,4]");
  EXPECT_EQ(perm({1, 0, 2}).to_cycle_string(), "(1 2)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
}

TEST(Permutation, LexicographicRankMatchesEnumeration) {
  const auto all = all_permutations(5);
  for (std::size_t k = 0; k < all.size(); ++k) EXPECT_EQ(lexicographic_rank(all[k]), k);
}

TEST(Permutation, ConjugationPreservesCycleType) {
  Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen.index(8);
    const auto p = gen.permutation(n);
    const auto q = gen.permutation(n);
    EXPECT_EQ((p * q * p.inverse()).cycle_type(), q.cycle_type());
  }
}

TEST(Permutation, ClassRepresentativeHasRequestedType) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& type : class_order(n)) {
      EXPECT_EQ(Permutation::class_representative(type).cycle_type(), type);
    }
  }
}

TEST(ConjugacyClasses, FiveMatchesEnumeration) {
  const auto oracle = testing::brute_class_sizes(5);
  const auto classes = conjugacy_classes(5);
  const std::vector<std::uint64_t> frozen = {1, 10, 15, 20, 20, 30, 24};
  ASSERT_EQ(classes.size(), frozen.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    EXPECT_EQ(classes[c].size, frozen[c]);
    EXPECT_EQ(classes[c].size, oracle.at(classes[c].cycle_type.parts()));
  }
  EXPECT_EQ(classes[0].cycle_type, (Partition{1, 1, 1, 1, 1}));
  EXPECT_EQ(classes.back().cycle_type, (Partition{5}));
}

TEST(ConjugacyClasses, SmallCases) {
  const auto one = conjugacy_classes(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].cycle_type, (Partition{1}));
  EXPECT_EQ(one[0].size, 1u);

  const auto three = conjugacy_classes(3);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0].size, 1u);
  EXPECT_EQ(three[1].size, 3u);
  EXPECT_EQ(three[2].size, 2u);
}

TEST(ConjugacyClasses, SizesSumToFactorial) {
  std::uint64_t factorial = 1;
  for (int n = 1; n <= 12; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    std::uint64_t total = 0;
    for (const auto& c : conjugacy_classes(n)) total += c.size;
    EXPECT_EQ(total, factorial) << "n = " << n;
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto oracle = testing::brute_class_sizes(n);
    for (const auto& c : conjugacy_classes(static_cast<int>(n))) {
      EXPECT_EQ(c.size, oracle.at(c.cycle_type.parts()));
    }
  }
}

TEST(ConjugacyClasses, RangeErrors) {
  EXPECT_THROW(conjugacy_classes(0), InvalidArgument);
  EXPECT_THROW(conjugacy_classes(13), InvalidArgument);
}

TEST(Closure, Examples) {
  const Permutation five_cycle = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  const Permutation cyc[] = {five_cycle};
  EXPECT_EQ(closure(5, cyc).order(), 5u);

  const auto trivial = closure(5, std::span<const Permutation>{});
  ASSERT_EQ(trivial.order(), 1u);
  EXPECT_TRUE(trivial.elements()[0].is_identity());

  const Permutation pair[] = {Permutation::from_cycles(5, {{0, 1}}), five_cycle};
  EXPECT_EQ(closure(5, pair).order(), 120u);
}

TEST(Closure, DegreeMismatchThrows) {
  const Permutation gens[] = {Permutation::identity(4)};
  EXPECT_THROW(closure(5, gens), InvalidArgument);
}

TEST(Closure, IsIdempotentAndClosed) {
  Gen gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + gen.index(3);
    const Permutation gens[] = {gen.permutation(n)};
    const auto h = closure(n, gens);
    EXPECT_EQ(closure(n, h.elements()), h);
    EXPECT_EQ(testing::raw_permutations(n).size() % h.order(), 0u);
    for (const auto& a : h.elements()) {
      EXPECT_TRUE(h.contains(a.inverse()));
      for (const auto& b : h.elements()) EXPECT_TRUE(h.contains(a * b));
    }
  }
}

TEST(Sylow, SixSubgroupsOfOrderFive) {
  const auto sylows = sylow5_subgroups();
  ASSERT_EQ(sylows.size(), 6u);
  std::set<Permutation> five_cycles;
  for (std::size_t i = 0; i < sylows.size(); ++i) {
    EXPECT_EQ(sylows[i].order(), 5u);
    for (const auto& e : sylows[i].elements()) {
      if (!e.is_identity()) five_cycles.insert(e);
    }
    for (std::size_t j = i + 1; j < sylows.size(); ++j) {
      std::size_t common = 0;
      for (const auto& e : sylows[i].elements()) common += sylows[j].contains(e) ? 1 : 0;
      EXPECT_EQ(common, 1u);
    }
    if (i + 1 < sylows.size()) EXPECT_LT(sylows[i].elements(), sylows[i + 1].elements());
  }
  // Oracle: every 5-cycle of S_5, by enumeration.
  std::size_t oracle = 0;
  for (const auto& p : testing::raw_permutations(5)) oracle += testing::raw_cycle_type(p) == std::vector<int>{5};
  EXPECT_EQ(oracle, 24u);
  EXPECT_EQ(five_cycles.size(), oracle);
}

TEST(Normalizer, SylowNormalizers) {
  const auto sylows = sylow5_subgroups();
  const auto s5 = symmetric_group(5);
  const auto a5 = alternating_group(5);
  EXPECT_EQ(s5.order(), 120u);
  EXPECT_EQ(a5.order(), 60u);

  // Oracle: g normalizes <c> iff g c g^-1 is a power of c.
  const auto& c = *std::find_if(sylows[0].elements().begin(), sylows[0].elements().end(),
                                [](const Permutation& p) { return !p.is_identity(); });
  std::size_t in_s5 = 0;
  std::size_t in_a5 = 0;
  for (const auto& g : s5.elements()) {
    if (sylows[0].contains(g * c * g.inverse())) {
      ++in_s5;
      in_a5 += g.sign() == 1 ? 1 : 0;
    }
  }
  EXPECT_EQ(in_s5, 20u);
  EXPECT_EQ(in_a5, 10u);
  EXPECT_EQ(normalizer(sylows[0], s5).order(), in_s5);
  EXPECT_EQ(normalizer(sylows[0], a5).order(), in_a5);

  const auto trivial = closure(5, std::span<const Permutation>{});
  EXPECT_EQ(normalizer(trivial, s5).order(), 120u);
}

TEST(Normalizer, ContainmentViolationThrows) {
  const Permutation gens[] = {Permutation::from_cycles(5, {{0, 1}})};
  const auto odd = closure(5, gens);
  EXPECT_THROW(normalizer(odd, alternating_group(5)), InvalidArgument);
}

TEST(ConjugationAction, IdentityAndHomomorphism) {
  const auto sylows = sylow5_subgroups();
  EXPECT_TRUE(conjugation_action(Permutation::identity(5), sylows).is_identity());
  Gen gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = gen.permutation(5);
    const auto h = gen.permutation(5);
    EXPECT_EQ(conjugation_action(g, sylows) * conjugation_action(h, sylows),
              conjugation_action(g * h, sylows));
  }
}

TEST(ConjugationAction, FiveCycleFixesOneSubgroup) {
  const auto sylows = sylow5_subgroups();
  const auto sigma = conjugation_action(Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), sylows);
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    // independent count: does conjugation preserve the subgroup's element set?
    const Permutation g = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
    fixed += sylows[i].conjugate_elements(g) == sylows[i].elements() ? 1 : 0;
    EXPECT_EQ(sigma(i) == i, sylows[i].conjugate_elements(g) == sylows[i].elements());
  }
  EXPECT_EQ(fixed, 1u);
}

TEST(ConjugationAction, TransitiveAndFaithful) {
  const auto sylows = sylow5_subgroups();
  std::set<std::size_t> orbit;
  std::size_t kernel = 0;
  for (const auto& g : all_permutations(5)) {
    const auto sigma = conjugation_action(g, sylows);
    orbit.insert(sigma(0));
    kernel += sigma.is_identity() ? 1 : 0;
  }
  EXPECT_EQ(orbit.size(), 6u);
  EXPECT_EQ(kernel, 1u);
}

}  // namespace
}  // namespace talbot
