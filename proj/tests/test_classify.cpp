#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "liealg/document.hpp"

#include <gtest/gtest.h>

using namespace liealg;

namespace {

template <Field F>
Subspace<F> sp(const LieAlgebra<F>& L, const std::string& spec) {
  return Subspace<F>::span(L.field(), L.dim(), parse_witness(L.field(), L.dim(), spec));
}

}  // namespace

TEST(Classify, RationalExampleWithChiefFactorIsCaseTwo) {
  auto L = catalog_get("example-3.1", RationalField{});
  auto r = classify_codim2(L, sp(L, "e1,e4"));
  EXPECT_EQ(r.which, Case::ii);
  EXPECT_EQ(r.beta_lo, 0u);
  EXPECT_EQ(r.beta_hi, 1u);
}

TEST(Classify, RationalExampleWithCodimOneNilradicalIsCaseThree) {
  auto L = catalog_get("example-3.2", RationalField{});
  auto r = classify_codim2(L, sp(L, "e3,e4"));
  EXPECT_EQ(r.which, Case::iii);
  EXPECT_EQ(r.beta_lo, 1u);
  EXPECT_EQ(r.beta_hi, 1u);
}

TEST(Classify, PrimeFieldExamplesAgreeWithRationalOnes) {
  auto L1 = catalog_get("example-3.1", PrimeField(7));
  auto r1 = classify_codim2(L1, alpha_exact(L1).witness);
  EXPECT_EQ(r1.which, Case::ii);
  ASSERT_TRUE(r1.beta);
  EXPECT_EQ(*r1.beta, 1u);
  auto L2 = catalog_get("example-3.2", PrimeField(7));
  auto r2 = classify_codim2(L2, alpha_exact(L2).witness);
  EXPECT_EQ(r2.which, Case::iii);
  EXPECT_EQ(*r2.beta, 1u);
}

TEST(Classify, SplitQuadraticGivesCaseOneOverF5) {
  // x^2 + 1 has roots mod 5, so the 2-dim factor is no longer chief
  for (const char* name : {"example-3.1", "example-3.2"}) {
    auto L = catalog_get(name, PrimeField(5));
    auto r = classify_codim2(L, alpha_exact(L).witness);
    EXPECT_EQ(r.which, Case::i) << name;
    EXPECT_EQ(*r.beta, 2u) << name;
  }
}

TEST(Classify, HeisenbergIsCaseOne) {
  auto L = catalog_get("heisenberg", PrimeField(5), {{"m", 2}});
  auto r = classify_codim2(L, sp(L, "e3,e4,e5"));  // span(y1, y2, z)
  EXPECT_EQ(r.which, Case::i);
  ASSERT_TRUE(r.ideal);
  EXPECT_EQ(r.ideal->dim(), 3u);
}

TEST(Classify, BothFramesHoldFirstMatchWins) {
  auto L = catalog_get("example-3.1", PrimeField(7));
  auto r = classify_codim2(L, sp(L, "e3,e4"));
  EXPECT_EQ(r.which, Case::ii);
  EXPECT_EQ(r.beta_lo, 1u);
  EXPECT_FALSE(r.note.empty());
}

TEST(Classify, CentralSummandEscapesAllThreeCases) {
  // Example 3.1 plus a central line: alpha = n-2, yet L^(2) is smaller than
  // Z(L), so case (ii) as stated fails, and A is not inside N for (iii).
  auto base = catalog_get("example-3.1", PrimeField(7));
  auto L = direct_sum(base, catalog_get("abelian", PrimeField(7), {{"n", 1}}), "example-3.1+F");
  EXPECT_EQ(alpha_exact(L).value, 3u);
  auto r = classify_codim2(L, sp(L, "e1,e4,e5"));
  EXPECT_EQ(r.which, Case::violation);
}

TEST(Classify, Preconditions) {
  auto L = catalog_get("example-3.1", PrimeField(7));
  EXPECT_THROW(classify_codim2(L, sp(L, "e4")), PreconditionError);
  EXPECT_THROW(classify_codim2(L, sp(L, "e1,e2")), PreconditionError);  // not abelian
  auto sl2 = catalog_get("sl2", PrimeField(7));
  EXPECT_THROW(classify_codim2(sl2, sp(sl2, "e1")), PreconditionError);
  auto ab = catalog_get("abelian", PrimeField(7), {{"n", 4}});
  EXPECT_THROW(classify_codim2(ab, sp(ab, "e1,e2")), PreconditionError);  // alpha = 4
}

TEST(Classify, NeverViolatesOnRandomSupersolvable) {
  int classified = 0;
  for (std::uint64_t s = 0; s < 120; ++s) {
    auto L = random_supersolvable(4 + s % 3, 3, s).first;
    auto a = alpha_exact(L);
    if (a.value + 2 != L.dim()) continue;
    auto r = classify_codim2(L, a.witness);
    EXPECT_NE(r.which, Case::violation) << L.name();
    EXPECT_NE(r.which, Case::undetermined) << L.name();
    ++classified;
  }
  EXPECT_GT(classified, 5);
}
