#include <gtest/gtest.h>

#include <random>

#include "dialg/io.hpp"
#include "dialg/render.hpp"
#include "dialg/suites.hpp"

using namespace dialg;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST(Json, DiagramRoundTripRandom) {
  std::mt19937_64 rng(17);
  for (Family f : kAllFamilies) {
    auto basis = enumerate_basis(3, f);
    for (int t = 0; t < 200; ++t) {
      const auto& d = basis[rng() % basis.size()];
      std::string text = io::to_json(d, f).dump();
      auto [back, fam] = io::diagram_from_json(io::parse(text));
      ASSERT_EQ(back, d);
      ASSERT_EQ(fam, f);
      ASSERT_EQ(io::to_json(back, fam).dump(), text);
    }
  }
}

TEST(Json, DiagramFormat) {
  auto d = canonicalize(2, {{-2, 2}, {1, -1}});
  EXPECT_EQ(io::to_json(d, Family::Brauer).dump(), R"({"n":2,"family":"brauer","blocks":[[-2,2],[-1,1]]})");
}

TEST(Json, LinCombRoundTrip) {
  const Family f = Family::RookBrauer;
  auto basis = enumerate_basis(2, f);
  LinComb a(2, f);
  a.add(basis[0], PolyCoeff::delta(2) - 3);
  a.add(basis[5], PolyCoeff::eps());
  std::string text = io::to_json(a).dump();
  EXPECT_EQ(io::lincomb_from_json(io::parse(text)), a);
  EXPECT_EQ(io::to_json(io::lincomb_from_json(io::parse(text))).dump(), text);
}

TEST(Json, HomRoundTrip) {
  for (Family f : kAllFamilies) {
    for (const auto& x : enumerate_hom_basis(1, 3, f)) {
      std::string text = io::to_json(x).dump();
      ASSERT_EQ(io::blob_from_json(io::parse(text)), x);
      HomElement h = PolyCoeff::delta() * HomElement(x);
      std::string htext = io::to_json(h).dump();
      ASSERT_EQ(io::hom_from_json(io::parse(htext)), h);
    }
  }
  auto y = functor_F(FIMorphism(2, {2}), Family::Brauer);
  EXPECT_EQ(io::to_json(y).dump(), R"({"m":1,"n":2,"family":"brauer","pairs":[[-2,1]],"blob":[-1]})");
}

TEST(Json, FIRoundTrip) {
  FIMorphism a(5, {2, 4, 5});
  EXPECT_EQ(io::fi_from_json(io::to_json(a)), a);
  EXPECT_THROW(io::fi_from_json(io::parse(R"({"m":2,"n":5,"map":[1]})")), InvalidInput);
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(io::parse("{"), InvalidInput);
  EXPECT_THROW(io::diagram_from_json(io::parse(R"({"n":1,"family":"brauer"})")), InvalidInput);
  EXPECT_THROW(io::diagram_from_json(io::parse(R"({"n":1,"family":"nope","blocks":[[-1,1]]})")), InvalidInput);
  EXPECT_THROW(io::diagram_from_json(io::parse(R"({"n":1,"family":"brauer","blocks":[[-1],[1]]})")),
               InvalidInput);
  EXPECT_THROW(io::diagram_from_json(io::parse(R"({"n":"2","family":"brauer","blocks":[]})")), InvalidInput);
}

TEST(Json, ReportFieldOrder) {
  auto r = check_lemma_blob(1, 3, Family::Brauer);
  EXPECT_EQ(io::to_json(r).dump(),
            R"({"check":"lemma-blob","family":"brauer","m":1,"j":3,"total":6,"failures":[],"min_left_blob":1})");
}

TEST(Render, DotIdentity) {
  std::string g = render::dot(Diagram::identity(2));
  EXPECT_EQ(g.rfind("graph diagram {", 0), 0u);
  EXPECT_EQ(count_of(g, "[label="), 4u);
  EXPECT_EQ(count_of(g, " -- "), 2u);
}

TEST(Render, DotBlob) {
  std::string g = render::dot(functor_F(FIMorphism::inclusion(3, 5), Family::Brauer));
  EXPECT_EQ(count_of(g, "label="), 8u + 1u);
  EXPECT_EQ(count_of(g, " -- blob"), 2u);
  EXPECT_NE(g.find("2-blob"), std::string::npos);
}

TEST(Render, AsciiShape) {
  std::string a = render::ascii(canonicalize(2, {{-1, -2}, {1, 2}}));
  EXPECT_EQ(a, "  -2 a         b 2\n  -1 a         b 1\na: {-2, -1}\nb: {1, 2}\n");
  std::string b = render::ascii(functor_G(FIMorphism::inclusion(1, 2)));
  EXPECT_NE(b.find("a*"), std::string::npos);
}
