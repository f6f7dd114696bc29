#include <gtest/gtest.h>

#include "dialg/suites.hpp"
#include "dialg/verify.hpp"

using namespace dialg;

namespace {

Diagram D(int n, std::vector<Block> blocks) { return canonicalize(n, std::move(blocks)); }

long long extra(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.extras) {
    if (k == key) return v;
  }
  ADD_FAILURE() << "missing extra " << key;
  return -1;
}

}  // namespace

TEST(FactorJ, IsolatedNodeCase) {
  auto w = factor_J(D(1, {{-1}, {1}}), 0, Family::RookBrauer);
  EXPECT_EQ(w.case_tag, FactorCase::IsolatedNode);
  EXPECT_EQ(w.beta, D(1, {{-1, 1}}));
  EXPECT_EQ(w.gamma, D(1, {{-1}, {1}}));
  EXPECT_EQ(multiply(w.beta, w.gamma, Family::RookBrauer), LinComb(w.alpha, Family::RookBrauer));
}

TEST(FactorJ, RightRightCase) {
  Diagram e = D(2, {{-1, -2}, {1, 2}});
  auto w = factor_J(e, 0, Family::RookBrauer);
  EXPECT_EQ(w.case_tag, FactorCase::RightRight);
  EXPECT_EQ(w.beta, Diagram::identity(2));
  EXPECT_EQ(w.gamma, e);
  EXPECT_EQ(multiply(w.beta, w.gamma, Family::RookBrauer), LinComb(e, Family::RookBrauer));
}

TEST(FactorJ, RookCase) {
  auto w = factor_J(D(2, {{-1, 1}, {-2}, {2}}), 1, Family::Rook);
  EXPECT_EQ(w.case_tag, FactorCase::RookIsolated);
  EXPECT_EQ(w.beta, Diagram::identity(2));
  EXPECT_EQ(w.gamma, embed_bottom(D(1, {{-1}, {1}}), 2, 1));
  EXPECT_FALSE(is_invertible(w.gamma));
}

TEST(FactorJ, Preconditions) {
  EXPECT_THROW(factor_J(Diagram::identity(2), 0, Family::RookBrauer), PreconditionViolation);
  EXPECT_THROW(factor_J(D(2, {{-1, -2}, {1, 2}}), 0, Family::Brauer), PreconditionViolation);
  EXPECT_THROW(factor_J(D(2, {{-1, -2}, {1, 2}}), 0, Family::Rook), FamilyMismatch);
}

TEST(FactorJ, ExhaustiveSmall) {
  for (Family f : {Family::RookBrauer, Family::Rook}) {
    for (int n = 1; n <= 3; ++n) {
      auto r = check_factorizations(n, f);
      EXPECT_TRUE(r.passed()) << to_string(f) << " n=" << n;
      EXPECT_GT(r.total, 0u);
    }
  }
}

TEST(FactorJ, WitnessCheckerRejectsForgery) {
  FactorizationWitness w{D(1, {{-1}, {1}}), D(1, {{-1, 1}}), D(1, {{-1, 1}}), FactorCase::IsolatedNode};
  EXPECT_THROW(verify_witness(w, 0, Family::RookBrauer), VerificationFailure);
}

TEST(LemmaPartition, Examples) {
  auto r = check_lemma_partition(1, 5);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.total, 155u);
  EXPECT_GE(extra(r, "min_singleton_marked"), 2);
  auto s = check_lemma_partition(1, 6);
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.total, 287u);
  EXPECT_THROW(check_lemma_partition(1, 4), PreconditionViolation);
  EXPECT_EQ(extra(check_lemma_partition(2, 10), "min_singleton_marked"), 4);
  auto probe = check_lemma_partition(1, 4, true);
  EXPECT_TRUE(probe.passed());
  EXPECT_EQ(extra(probe, "asserted"), 0);
}

TEST(LemmaBlob, Examples) {
  auto r = check_lemma_blob(1, 3, Family::Brauer);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.total, 6u);
  EXPECT_TRUE(check_lemma_blob(2, 5, Family::RookBrauer).passed());
  EXPECT_TRUE(check_lemma_blob(1, 3, Family::Rook).passed());
  EXPECT_TRUE(check_lemma_blob(1, 4, Family::Brauer).passed());
  EXPECT_THROW(check_lemma_blob(1, 2, Family::Brauer), PreconditionViolation);
  EXPECT_THROW(check_lemma_blob(1, 3, Family::Partition), PreconditionViolation);
}

TEST(ReduceGenerator, Examples) {
  auto w = reduce_generator(functor_G(FIMorphism::inclusion(1, 6)), Family::Partition);
  EXPECT_EQ(w.alpha_bar, functor_G(FIMorphism::inclusion(1, 5)));
  EXPECT_EQ(w.phi, FIMorphism::inclusion(5, 6));
  auto v = reduce_generator(functor_F(FIMorphism::inclusion(1, 3), Family::Brauer), Family::Brauer);
  EXPECT_EQ(v.alpha_bar, functor_F(FIMorphism::inclusion(1, 2), Family::Brauer));
  EXPECT_EQ(v.phi, FIMorphism::inclusion(2, 3));
  // the top node is not free, so a transposition moves the chosen node into place
  auto x = BlobDiagram::from_pairs(Family::Brauer, 1, 3, {{-3, 1}}, {-1, -2});
  auto t = reduce_generator(x, Family::Brauer);
  EXPECT_EQ(fi_act(t.phi, HomElement(t.alpha_bar)), HomElement(x));
  EXPECT_NE(t.phi, FIMorphism::inclusion(2, 3));
}

TEST(ReduceGenerator, ExhaustiveSmall) {
  for (Family f : {Family::Brauer, Family::RookBrauer, Family::Rook}) {
    auto r = check_generation(1, 3, f);
    EXPECT_TRUE(r.passed()) << to_string(f);
    EXPECT_EQ(r.total, count_hom_basis(1, 3, f));
  }
}

TEST(ReduceGenerator, Preconditions) {
  auto x = enumerate_hom_basis(1, 2, Family::Brauer).front();
  EXPECT_THROW(reduce_generator(x, Family::Brauer), PreconditionViolation);
}

TEST(Spanning, Examples) {
  EXPECT_TRUE(spanning_check(1, 3, Family::Brauer, 0, 0));
  EXPECT_TRUE(spanning_check(1, 3, Family::Rook, Rational(7, 3), -1));
  EXPECT_THROW(spanning_check(1, 2, Family::Brauer, 0, 0), PreconditionViolation);
}
