#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "dialg/hom.hpp"
#include "dialg/rank.hpp"
#include "dialg/suites.hpp"
#include "oracles.hpp"

using namespace dialg;

namespace {

Diagram D(int n, std::vector<Block> blocks) { return canonicalize(n, std::move(blocks)); }

}  // namespace

TEST(HomBasis, Examples) {
  auto br02 = enumerate_hom_basis(0, 2, Family::Brauer);
  ASSERT_EQ(br02.size(), 1u);
  EXPECT_EQ(br02[0].blob(), (std::vector<int>{-2, -1}));
  EXPECT_TRUE(br02[0].pairs().empty());
  EXPECT_EQ(count_hom_basis(1, 3, Family::Brauer), 6u);
  EXPECT_EQ(count_hom_basis(1, 2, Family::Partition), 10u);
  EXPECT_EQ(count_hom_basis(3, 2, Family::Partition), 0u);
}

TEST(HomBasis, MatchesIndependentOracle) {
  for (Family f : kAllFamilies) {
    const int max_n = f == Family::Partition ? 4 : 5;
    for (int n = 0; n <= max_n; ++n) {
      for (int m = 0; m <= n; ++m) {
        auto basis = enumerate_hom_basis(m, n, f);
        ASSERT_EQ(basis.size(), oracle::count_hom(m, n, static_cast<int>(f)))
            << to_string(f) << " Hom(" << m << "," << n << ")";
        std::set<BlobDiagram> unique(basis.begin(), basis.end());
        ASSERT_EQ(unique.size(), basis.size());
        for (const auto& x : basis) {
          ASSERT_EQ(x.marked().size(), static_cast<std::size_t>(n - m));
          ASSERT_NO_THROW(x.validate());
        }
      }
    }
  }
  EXPECT_EQ(count_hom_basis(1, 5, Family::Partition), 155u);
  EXPECT_EQ(count_hom_basis(1, 6, Family::Partition), 287u);
}

TEST(HomBasis, EndomorphismsAreTheAlgebra) {
  for (Family f : kAllFamilies) {
    EXPECT_EQ(count_hom_basis(3, 3, f), count_basis(3, f));
  }
}

TEST(BlobDiagram, RejectsInvalid) {
  // Brauer blob arity must be n - m
  EXPECT_THROW(BlobDiagram::from_pairs(Family::Brauer, 1, 3, {{-1, 1}}, {-2}), InvalidInput);
  // isolated node in Brauer
  EXPECT_THROW(BlobDiagram::from_pairs(Family::Brauer, 1, 3, {}, {-2, -3}), InvalidInput);
  // Rook blob on the right
  EXPECT_THROW(BlobDiagram::from_pairs(Family::Rook, 1, 2, {}, {1}), InvalidInput);
  // Rook same-side pair
  EXPECT_THROW(BlobDiagram::from_pairs(Family::Rook, 0, 2, {{-1, -2}}, {}), InvalidInput);
  EXPECT_THROW(BlobDiagram::from_blocks(Family::Partition, 1, 2, {{-1, -2, 1}}, {0, 0}), InvalidInput);
  EXPECT_THROW(BlobDiagram::from_blocks(Family::Partition, 2, 1, {{-1, 1, 2}}, {}), InvalidInput);
}

TEST(Lift, Examples) {
  auto x = enumerate_hom_basis(0, 2, Family::Brauer).front();
  EXPECT_EQ(lift(x), Diagram::identity(2));
  // pairs {-i, i} for i <= 3 and marked singletons {-4}, {-5}
  auto y = BlobDiagram::from_blocks(Family::Partition, 3, 5, {{-1, 1}, {-2, 2}, {-3, 3}, {-4}, {-5}}, {3, 4});
  EXPECT_EQ(lift(y), Diagram::identity(5));
  auto w = BlobDiagram::from_blocks(Family::Partition, 1, 3, {{-3, -1, 1}, {-2}}, {0, 1});
  EXPECT_EQ(lift(w), D(3, {{-3, -1, 1, 2}, {-2, 3}}));
}

TEST(IsInJ, Examples) {
  EXPECT_TRUE(is_in_J(D(1, {{-1}, {1}}), 0, Family::RookBrauer));
  EXPECT_TRUE(is_in_J(D(2, {{-1, -2}, {1, 2}}), 0, Family::Brauer));
  for (Family f : kAllFamilies) {
    for (int m = 0; m <= 3; ++m) EXPECT_FALSE(is_in_J(Diagram::identity(3), m, f));
  }
  // right-right pair inside the top m strands is not in J
  EXPECT_FALSE(is_in_J(D(3, {{-1, -2}, {1, 2}, {-3, 3}}), 2, Family::Brauer));
}

TEST(Project, Examples) {
  EXPECT_TRUE(project(D(1, {{-1}, {1}}), 0, Family::Partition).is_zero());
  for (Family f : kAllFamilies) {
    for (int m = 0; m <= 3; ++m) {
      auto h = project(Diagram::identity(3), m, f);
      ASSERT_EQ(h.terms().size(), 1u);
      const auto& x = h.terms().begin()->first;
      EXPECT_EQ(h.terms().begin()->second, PolyCoeff(1));
      std::vector<int> expect_blob;
      for (int k = 3; k > m; --k) expect_blob.push_back(-k);
      EXPECT_EQ(x.blob(), expect_blob);
      EXPECT_EQ(x.pairs().size(), static_cast<std::size_t>(m));
    }
  }
}

TEST(Project, SectionProperty) {
  for (Family f : kAllFamilies) {
    const int max_n = f == Family::Partition ? 3 : 4;
    for (int n = 0; n <= max_n; ++n) {
      for (int m = 0; m <= n; ++m) {
        auto r = check_section(m, n, f);
        ASSERT_TRUE(r.passed()) << to_string(f) << " " << r.failures.front();
      }
    }
  }
}

TEST(Project, LiftIndependentOfMarkedOrder) {
  // Any attachment of marked blocks to the collapsed nodes represents the same
  // element: the lifts differ by a permutation of the bottom nodes.
  std::mt19937_64 rng(8);
  for (Family f : kAllFamilies) {
    for (const auto& x : enumerate_hom_basis(1, 4, f)) {
      std::vector<int> order(x.marked().size());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      auto h = project(lift_with_order(x, order), 1, f);
      ASSERT_EQ(h, HomElement(x)) << describe(x);
    }
  }
}

TEST(Project, TensorRelationsVanish) {
  for (Family f : kAllFamilies) {
    auto r = check_well_definedness(f == Family::Partition ? 2 : 3, f);
    EXPECT_TRUE(r.passed()) << to_string(f);
  }
}

TEST(Compose, UnitLaws) {
  for (Family f : kAllFamilies) {
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= n; ++m) {
        for (const auto& x : enumerate_hom_basis(m, n, f)) {
          HomElement hx(x);
          ASSERT_EQ(compose(hom_identity(n, f), hx), hx);
          ASSERT_EQ(compose(hx, hom_identity(m, f)), hx);
        }
      }
    }
  }
  auto x = enumerate_hom_basis(0, 2, Family::Brauer).front();
  EXPECT_EQ(compose(HomElement(x), hom_identity(0, Family::Brauer)), HomElement(x));
}

TEST(Compose, Errors) {
  auto x = HomElement(enumerate_hom_basis(1, 2, Family::Brauer).front());
  auto y = HomElement(enumerate_hom_basis(1, 3, Family::Brauer).front());
  EXPECT_THROW(compose(x, y), SizeMismatch);
  EXPECT_THROW(compose(x, hom_identity(1, Family::Rook)), FamilyMismatch);
}

TEST(Compose, ZeroAndBilinear) {
  const Family f = Family::RookBrauer;
  auto X = enumerate_hom_basis(1, 3, f);
  auto Y = enumerate_hom_basis(0, 1, f);
  HomElement zero(f, 1, 3);
  EXPECT_TRUE(compose(zero, HomElement(Y[0])).is_zero());
  HomElement sum = HomElement(X[0]) + PolyCoeff::delta() * HomElement(X[1]);
  EXPECT_EQ(compose(sum, HomElement(Y[0])),
            compose(HomElement(X[0]), HomElement(Y[0])) +
                PolyCoeff::delta() * compose(HomElement(X[1]), HomElement(Y[0])));
}

TEST(Compose, Associative) {
  for (Family f : kAllFamilies) {
    auto r = check_compose_associativity(3, f, 3000);
    EXPECT_TRUE(r.passed()) << to_string(f);
  }
}

TEST(RankOracle, Examples) {
  for (Family f : kAllFamilies) {
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(rank_oracle(n, n, f, 1, 1), count_basis(n, f));
  }
  for (const auto& q : {Rational(0), Rational(1), Rational(7, 3)}) {
    EXPECT_EQ(rank_oracle(0, 1, Family::Partition, q, q), 1u);
  }
  EXPECT_EQ(rank_oracle(1, 3, Family::Brauer, 0, 0), 6u);
  EXPECT_THROW(rank_oracle(0, 4, Family::Partition, 0, 0), BoundExceeded);
}

TEST(RankOracle, AgreesWithBasisSmall) {
  const std::vector<std::pair<Rational, Rational>> specs = {{0, 0}, {1, 1}, {Rational(7, 3), Rational(-1)}};
  for (Family f : kAllFamilies) {
    for (int n = 0; n <= 2; ++n) {
      for (int m = 0; m <= n; ++m) {
        auto r = check_rank_agreement(m, n, f, specs);
        ASSERT_TRUE(r.passed()) << to_string(f) << " " << r.failures.front();
      }
    }
  }
}

TEST(RowEchelon, RationalRank) {
  using Row = std::map<std::size_t, Rational>;
  std::vector<SparseRow> rows = {make_row(Row{{0, 1}, {1, 2}}), make_row(Row{{0, 2}, {1, 4}}),
                                 make_row(Row{{1, Rational(1, 3)}, {2, 1}}), make_row(Row{})};
  EXPECT_EQ(rational_rank(3, rows), 2u);
}
