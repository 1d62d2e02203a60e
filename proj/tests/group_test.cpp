#include <gtest/gtest.h>

#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "distinguish/action.hpp"
#include "distinguish/catalog.hpp"
#include "distinguish/error.hpp"
#include "distinguish/group.hpp"
#include "distinguish/random.hpp"

namespace distinguish {
namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// n! / prod(k^{m_k} m_k!) for a cycle type with m_k cycles of length k.
std::size_t class_size_formula(std::size_t n, const std::vector<std::size_t>& type) {
  std::map<std::size_t, std::size_t> multiplicity;
  for (std::size_t k : type)
    ++multiplicity[k];
  std::size_t denominator = 1;
  for (auto [k, m] : multiplicity) {
    for (std::size_t i = 0; i < m; ++i)
      denominator *= k;
    denominator *= factorial(m);
  }
  return factorial(n) / denominator;
}

TEST(PermTest, ComposeAppliesRightFactorFirst) {
  Perm p = Perm::from_cycles(3, "(1 2)");
  Perm q = Perm::from_cycles(3, "(2 3)");
  // p(q(0)) = p(0) = 1, p(q(1)) = p(2) = 2, p(q(2)) = p(1) = 0.
  EXPECT_EQ(compose(p, q), Perm({1, 2, 0}));
  EXPECT_EQ(compose(p, q).cycle_notation(), "(1 2 3)");
}

TEST(PermTest, CycleNotationRoundTrip) {
  for (const char* text : {"()", "(1 2)", "(1 3 2)", "(1 2)(3 4)", "(1 4 2 3)"}) {
    Perm p = Perm::from_cycles(4, text);
    EXPECT_EQ(Perm::from_cycles(4, p.cycle_notation()), p) << text;
  }
  EXPECT_EQ(Perm::identity(4).cycle_notation(), "()");
}

TEST(PermTest, RejectsInvalidInput) {
  EXPECT_THROW(Perm({0, 0, 1}), InputError);
  EXPECT_THROW(Perm({0, 3, 1}), InputError);
  EXPECT_THROW(Perm::from_cycles(3, "(1 4)"), InputError);
  EXPECT_THROW(Perm::from_cycles(3, "(1 2)(2 3)"), InputError);
  EXPECT_THROW(compose(Perm::identity(2), Perm::identity(3)), InputError);
}

TEST(PermTest, OrderAndInverse) {
  Perm p = Perm::from_cycles(5, "(1 2)(3 4 5)");
  EXPECT_EQ(p.order(), 6U);
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_EQ(cycle_type(p), (std::vector<std::size_t>{3, 2}));
}

TEST(GroupTest, SymmetricGroupOrders) {
  for (std::size_t n = 0; n <= 6; ++n)
    EXPECT_EQ(symmetric_group(n).order(), factorial(n)) << n;
}

TEST(GroupTest, CyclicGroup) {
  PermGroup z6 = cyclic_group(6);
  EXPECT_EQ(z6.order(), 6U);
  EXPECT_TRUE(z6.is_closed());
}

TEST(GroupTest, IdentityComesFirstAndLookupWorks) {
  PermGroup s4 = symmetric_group(4);
  EXPECT_EQ(s4.identity_index(), 0U);
  EXPECT_TRUE(s4.element(0).is_identity());
  for (std::size_t i = 0; i < s4.order(); ++i)
    EXPECT_EQ(s4.index_of(s4.element(i)), i);
  EXPECT_FALSE(s4.contains(Perm::identity(5)));
}

TEST(GroupTest, ElementCapRaises) {
  try {
    PermGroup s6 = symmetric_group(6);
    PermGroup::generate(6, std::vector<Perm>(s6.generators().begin(), s6.generators().end()), 100);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.cap(), 100U);
    EXPECT_EQ(e.cap_name(), "group element cap");
  }
}

TEST(GroupTest, ConjugacyClassSizesOfS4) {
  PermGroup s4 = symmetric_group(4);
  std::map<std::vector<std::size_t>, std::size_t> classes;
  for (const Perm& p : s4.elements())
    ++classes[cycle_type(p)];
  std::multiset<std::size_t> sizes;
  for (auto [type, count] : classes)
    sizes.insert(count);
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 6, 3, 8, 6}));
}

TEST(GroupTest, FromElementsComputesGenerators) {
  PermGroup s4 = symmetric_group(4);
  std::vector<Perm> elements(s4.elements().begin(), s4.elements().end());
  PermGroup rebuilt = PermGroup::from_elements(4, elements);
  EXPECT_EQ(rebuilt.order(), 24U);
  PermGroup regenerated = PermGroup::generate(
      4, std::vector<Perm>(rebuilt.generators().begin(), rebuilt.generators().end()));
  EXPECT_EQ(regenerated.order(), 24U);
}

TEST(GroupPropertyTest, RandomGroupsAreClosedWithInverses) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    GroupAction a = random_action(rng);
    const PermGroup& g = a.group();
    ASSERT_TRUE(g.is_closed());
    for (const Perm& p : g.elements())
      ASSERT_TRUE(g.contains(p.inverse()));
    ASSERT_EQ(factorial(g.degree()) % g.order(), 0U) << "Lagrange";
  }
}

TEST(ActionTest, OrbitsOfConjugationAreCycleTypeClasses) {
  for (std::size_t n = 3; n <= 5; ++n) {
    GroupAction conj = conjugation_action(n);
    auto partition = orbit_partition(conj);
    std::size_t total = 0;
    for (const auto& block : partition.blocks) {
      auto type = cycle_type(conj.group().element(block.front()));
      EXPECT_EQ(block.size(), class_size_formula(n, type));
      for (Point x : block)
        EXPECT_EQ(cycle_type(conj.group().element(x)), type);
      total += block.size();
    }
    EXPECT_EQ(total, factorial(n));
  }
}

TEST(ActionTest, KernelOfS4OnPairPartitionsIsKleinFour) {
  // {12|34}, {13|24}, {14|23}
  const std::vector<std::array<std::pair<Point, Point>, 2>> partitions = {
      {{{0, 1}, {2, 3}}}, {{{0, 2}, {1, 3}}}, {{{0, 3}, {1, 2}}}};
  auto normal = [](std::pair<Point, Point> a, std::pair<Point, Point> b) {
    if (a.first > a.second)
      std::swap(a.first, a.second);
    if (b.first > b.second)
      std::swap(b.first, b.second);
    return std::pair(std::min(a, b), std::max(a, b));
  };
  GroupAction action = GroupAction::from_element_map(symmetric_group(4), 3, [&](const Perm& g) {
    std::vector<Point> image(3);
    for (std::size_t i = 0; i < 3; ++i) {
      auto [a, b] = partitions[i];
      auto target = normal({g(a.first), g(a.second)}, {g(b.first), g(b.second)});
      for (std::size_t j = 0; j < 3; ++j)
        if (normal(partitions[j][0], partitions[j][1]) == target)
          image[i] = static_cast<Point>(j);
    }
    return Perm(image);
  });
  PermGroup kernel = action_kernel(action);
  EXPECT_EQ(kernel.order(), 4U);
  EXPECT_FALSE(action.is_faithful());
  for (const Perm& k : kernel.elements())
    EXPECT_TRUE(k.is_identity() || cycle_type(k) == (std::vector<std::size_t>{2, 2}));
}

TEST(ActionTest, GeneratorImagesMustDefineHomomorphism) {
  PermGroup s3 = symmetric_group(3);
  // Sending the 3-cycle generator to a transposition breaks t^3 = 1.
  std::vector<Perm> images;
  for (const Perm& g : s3.generators())
    images.push_back(g.order() == 3 ? Perm({1, 0}) : Perm::identity(2));
  EXPECT_THROW(GroupAction::from_generator_images(s3, 2, images), InputError);

  std::vector<Perm> sign;
  for (const Perm& g : s3.generators())
    sign.push_back(g.order() == 2 ? Perm({1, 0}) : Perm::identity(2));
  GroupAction action = GroupAction::from_generator_images(s3, 2, sign);
  EXPECT_TRUE(action.is_homomorphism_exhaustive());
  EXPECT_EQ(action.kernel_indices().size(), 3U);
}

TEST(ActionTest, OrbitRejectsOutOfRangePoint) {
  EXPECT_THROW(orbit(GroupAction::natural(symmetric_group(3)), 3), InputError);
}

TEST(ActionTest, RestrictToSubsetRequiresInvariance) {
  GroupAction action = natural_action(3, 2);
  std::vector<Point> moving = {0, 1, 2};
  EXPECT_EQ(action.restrict_to_subset(moving).domain_size(), 3U);
  std::vector<Point> broken = {0, 3};
  EXPECT_THROW(action.restrict_to_subset(broken), PreconditionError);
}

TEST(ActionPropertyTest, OrbitStabilizerOnRandomActions) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    GroupAction a = random_action(rng);
    for (Point x = 0; x < a.domain_size(); ++x) {
      auto stab = pointwise_stabilizer(a, std::vector<Point>{x});
      ASSERT_EQ(orbit(a, x).size() * stab.order(), a.order());
      ASSERT_TRUE(stab.is_closed());
    }
    ASSERT_TRUE(a.is_homomorphism_exhaustive());
    auto partition = orbit_partition(a);
    std::size_t covered = 0;
    for (const auto& block : partition.blocks)
      covered += block.size();
    ASSERT_EQ(covered, a.domain_size());
  }
}

}  // namespace
}  // namespace distinguish
