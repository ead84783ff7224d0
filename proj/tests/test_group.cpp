#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sdt/group.hpp"

using namespace sdt;

TEST(SemiDihedral, RejectsSmallN) {
  EXPECT_THROW(SemiDihedral(1), std::invalid_argument);
  EXPECT_THROW(SemiDihedral(0), std::invalid_argument);
  EXPECT_THROW(conjugacy_classes(-3), std::invalid_argument);
}

TEST(SemiDihedral, DefiningRelations) {
  for (int n = 2; n <= 8; ++n) {
    const SemiDihedral G(n);
    const auto a = SDElement::a(), b = SDElement::b();
    EXPECT_EQ(G.power(a, 4 * n), SDElement::identity());
    EXPECT_NE(G.power(a, 2 * n), SDElement::identity());
    EXPECT_EQ(G.multiply(b, b), SDElement::identity());
    EXPECT_EQ(G.multiply(G.multiply(b, a), b), G.power(a, 2 * n - 1));
    EXPECT_EQ(G.elements().size(), static_cast<std::size_t>(8 * n));
  }
}

TEST(SemiDihedral, NormalFormMultiplication) {
  const SemiDihedral G(2);
  // a^3 * b = b a^{3*3} = b a
  EXPECT_EQ(G.multiply(SDElement::a(3), SDElement::b()), G.element(1, 1));
  EXPECT_EQ(G.inverse(G.element(1, 1)), G.element(1, 5));
  EXPECT_EQ(G.element(0, -1), SDElement::a(7));
}

TEST(SemiDihedral, AssociativityAndInversesExhaustive) {
  for (int n : {2, 3}) {
    const SemiDihedral G(n);
    const auto E = G.elements();
    for (auto x : E) {
      EXPECT_EQ(G.multiply(x, G.inverse(x)), SDElement::identity());
      EXPECT_EQ(G.multiply(G.inverse(x), x), SDElement::identity());
      for (auto y : E)
        for (auto z : E) ASSERT_EQ(G.multiply(G.multiply(x, y), z), G.multiply(x, G.multiply(y, z)));
    }
  }
}

TEST(SemiDihedral, IndexRoundTripAndNames) {
  const SemiDihedral G(2);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(G.index(G.at(i)), i);
  EXPECT_EQ(G.name(SDElement::identity()), "1");
  EXPECT_EQ(G.name(SDElement::a()), "a");
  EXPECT_EQ(G.name(SDElement::a(3)), "a^3");
  EXPECT_EQ(G.name(SDElement::b()), "b");
  EXPECT_EQ(G.name(G.element(1, 5)), "ba^5");
}

TEST(ConjugacyClasses, SD16) {
  const auto rep = conjugacy_classes(2);
  ASSERT_EQ(rep.classes.size(), 7u);
  std::map<SDElement, std::size_t> sizes;
  for (const auto& c : rep.classes) sizes[c.representative] = c.members.size();
  EXPECT_EQ(sizes[SDElement::identity()], 1u);
  EXPECT_EQ(sizes[SDElement::a(4)], 1u);
  EXPECT_EQ(sizes[SDElement::a(1)], 2u);
  EXPECT_EQ(sizes[SDElement::b()], 4u);
  EXPECT_EQ(sizes[(SDElement{1, 1})], 4u);
}

TEST(ConjugacyClasses, CountsAndPartition) {
  for (int n = 2; n <= 9; ++n) {
    const SemiDihedral G(n);
    const auto rep = conjugacy_classes(n);
    EXPECT_EQ(static_cast<int>(rep.classes.size()), expected_class_count(n));
    EXPECT_EQ(expected_class_count(n), n % 2 == 0 ? 2 * n + 3 : 2 * n + 6);
    std::set<SDElement> seen;
    for (const auto& c : rep.classes) {
      EXPECT_EQ(c.representative, c.members.front());
      for (auto g : c.members) {
        EXPECT_TRUE(seen.insert(g).second);
        // closed under conjugation
        for (auto x : G.elements())
          EXPECT_TRUE(std::binary_search(c.members.begin(), c.members.end(), G.conjugate(g, x)));
      }
    }
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(8 * n));
  }
}

TEST(ConjugacyClasses, OddNHasFourCentralElements) {
  const auto rep = conjugacy_classes(3);
  int central = 0;
  for (const auto& c : rep.classes) central += c.members.size() == 1;
  EXPECT_EQ(central, 4);
}

TEST(Subgroups, CyclicIntersection) {
  const SemiDihedral G(2);
  const std::vector<SDElement> trivial{SDElement::identity()};
  EXPECT_EQ(cyclic_intersection(G, trivial).r, 0);
  EXPECT_FALSE(cyclic_intersection(G, trivial).proper);

  const std::vector<SDElement> rot{SDElement::identity(), SDElement::a(2), SDElement::a(4), SDElement::a(6)};
  EXPECT_EQ(cyclic_intersection(G, rot).r, 2);
  EXPECT_FALSE(cyclic_intersection(G, rot).proper);

  const std::vector<SDElement> refl{SDElement::identity(), SDElement::b()};
  EXPECT_TRUE(is_subgroup(G, refl));
  EXPECT_EQ(cyclic_intersection(G, refl).r, 0);
  EXPECT_TRUE(cyclic_intersection(G, refl).proper);

  const std::vector<SDElement> bogus{SDElement::identity(), SDElement::a(1)};
  EXPECT_FALSE(is_subgroup(G, bogus));
  EXPECT_THROW(cyclic_intersection(G, bogus), std::invalid_argument);
}
