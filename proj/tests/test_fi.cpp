#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dialg/fi.hpp"
#include "dialg/suites.hpp"
#include "oracles.hpp"

using namespace dialg;

namespace {

constexpr Family kBlobFamilies[] = {Family::Brauer, Family::RookBrauer, Family::Rook};

}  // namespace

TEST(EnumerateFI, Examples) {
  EXPECT_EQ(enumerate_fi(1, 3).size(), 3u);
  auto s2 = enumerate_fi(2, 2);
  ASSERT_EQ(s2.size(), 2u);
  EXPECT_EQ(s2[0], FIMorphism::identity(2));
  EXPECT_EQ(s2[1].map(), (std::vector<int>{2, 1}));
  EXPECT_TRUE(enumerate_fi(3, 2).empty());
  EXPECT_EQ(enumerate_fi(0, 3).size(), 1u);
}

TEST(EnumerateFI, FallingFactorialCounts) {
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= n; ++m) {
      std::uint64_t expect = 1;
      for (int i = 0; i < m; ++i) expect *= static_cast<std::uint64_t>(n - i);
      auto all = enumerate_fi(m, n);
      ASSERT_EQ(all.size(), expect);
      ASSERT_TRUE(std::is_sorted(all.begin(), all.end()));
    }
  }
}

TEST(FIMorphism, RejectsInvalid) {
  EXPECT_THROW(FIMorphism(2, {1, 1}), InvalidInput);
  EXPECT_THROW(FIMorphism(2, {3}), InvalidInput);
  EXPECT_THROW(FIMorphism(1, {1, 2}), InvalidInput);
  EXPECT_THROW(FIMorphism(2, {0}), InvalidInput);
}

TEST(ComposeFI, Examples) {
  FIMorphism f(4, {3, 1});
  EXPECT_EQ(compose_fi(FIMorphism::identity(4), f), f);
  EXPECT_EQ(compose_fi(f, FIMorphism::identity(2)), f);
  EXPECT_EQ(compose_fi(FIMorphism::inclusion(2, 3), FIMorphism::inclusion(1, 2)), FIMorphism::inclusion(1, 3));
  EXPECT_THROW(compose_fi(f, FIMorphism::identity(3)), SizeMismatch);
  FIMorphism s(3, {2, 3, 1});
  EXPECT_EQ(compose_fi(s, inverse_permutation(s)), FIMorphism::identity(3));
}

TEST(FunctorF, Examples) {
  for (Family f : kBlobFamilies) {
    for (int n = 0; n <= 3; ++n) {
      EXPECT_EQ(HomElement(functor_F(FIMorphism::identity(n), f)), hom_identity(n, f));
    }
    auto x = functor_F(FIMorphism::inclusion(3, 5), f);
    EXPECT_EQ(x.pairs(), (std::vector<std::array<int, 2>>{{-3, 3}, {-2, 2}, {-1, 1}}));
    EXPECT_EQ(x.blob(), (std::vector<int>{-5, -4}));
    auto y = functor_F(FIMorphism(2, {2}), f);
    EXPECT_EQ(y.pairs(), (std::vector<std::array<int, 2>>{{-2, 1}}));
    EXPECT_EQ(y.blob(), (std::vector<int>{-1}));
  }
  EXPECT_THROW(functor_F(FIMorphism::identity(1), Family::Partition), FamilyMismatch);
}

TEST(FunctorG, Examples) {
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(HomElement(functor_G(FIMorphism::identity(n))), hom_identity(n, Family::Partition));
  }
  auto x = functor_G(FIMorphism::inclusion(3, 5));
  EXPECT_EQ(x.blocks(), (std::vector<Block>{{-5}, {-4}, {-3, 3}, {-2, 2}, {-1, 1}}));
  EXPECT_EQ(x.marked(), (std::vector<std::size_t>{0, 1}));
  auto y = functor_G(FIMorphism(3, {3}));
  EXPECT_EQ(y.blocks(), (std::vector<Block>{{-3, 1}, {-2}, {-1}}));
  EXPECT_EQ(y.marked(), (std::vector<std::size_t>{1, 2}));
}

TEST(Functors, InjectiveOnMorphisms) {
  for (Family f : kAllFamilies) {
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m <= n; ++m) {
        std::set<BlobDiagram> images;
        auto all = enumerate_fi(m, n);
        for (const auto& a : all) images.insert(functor_image(a, f));
        ASSERT_EQ(images.size(), all.size());
      }
    }
  }
}

TEST(Functors, PermutationsLandOnPermutationDiagrams) {
  for (Family f : kAllFamilies) {
    for (const auto& s : enumerate_fi(3, 3)) {
      auto d = lift(functor_image(s, f));
      EXPECT_TRUE(is_invertible(d));
    }
  }
}

TEST(Functors, Functorial) {
  for (Family f : kAllFamilies) {
    auto r = check_functoriality(f == Family::Partition ? 3 : 4, f);
    EXPECT_TRUE(r.passed()) << to_string(f) << ": " << (r.passed() ? "" : r.failures.front());
    EXPECT_GT(r.total, 0u);
  }
}

TEST(FIAction, UnitLaw) {
  for (Family f : kAllFamilies) {
    for (const auto& x : enumerate_hom_basis(1, 3, f)) {
      EXPECT_EQ(fi_act(FIMorphism::identity(3), HomElement(x)), HomElement(x));
    }
  }
}

TEST(FIAction, FunctorialOnRandomCases) {
  std::mt19937_64 rng(41);
  for (Family f : kAllFamilies) {
    for (int t = 0; t < 60; ++t) {
      const int m = static_cast<int>(rng() % 2);
      const int a = m + static_cast<int>(rng() % 2);
      const int b = a + static_cast<int>(rng() % 2);
      const int c = b + static_cast<int>(rng() % 2);
      auto basis = enumerate_hom_basis(m, a, f);
      auto phis = enumerate_fi(a, b);
      auto psis = enumerate_fi(b, c);
      const auto& x = basis[rng() % basis.size()];
      const auto& phi = phis[rng() % phis.size()];
      const auto& psi = psis[rng() % psis.size()];
      // a random linear combination exercises bilinearity too
      HomElement v = HomElement(x) + PolyCoeff::eps() * HomElement(basis[rng() % basis.size()]);
      ASSERT_EQ(fi_act(psi, fi_act(phi, v)), fi_act(compose_fi(psi, phi), v));
    }
  }
}

TEST(FIAction, PermutationsPermuteTheBasis) {
  for (Family f : kAllFamilies) {
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= n; ++m) {
        auto r = check_permutation_action(m, n, f);
        ASSERT_TRUE(r.passed()) << to_string(f) << " " << r.failures.front();
      }
    }
  }
}

TEST(FIAction, SizeMismatch) {
  auto x = HomElement(enumerate_hom_basis(1, 2, Family::Brauer).front());
  EXPECT_THROW(fi_act(FIMorphism::inclusion(3, 4), x), SizeMismatch);
}
