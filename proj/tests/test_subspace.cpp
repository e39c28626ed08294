#include "liealg/enumerate.hpp"
#include "liealg/structure.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liealg;

namespace {

Vec<PrimeField> random_vec(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
  Vec<PrimeField> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

}  // namespace

TEST(Subspace, CanonicalFormIgnoresSpanningSet) {
  std::mt19937_64 rng(7);
  PrimeField f(5);
  for (int trial = 0; trial < 200; ++trial) {
    Rows<PrimeField> rows;
    for (int k = 0; k < 3; ++k) rows.push_back(random_vec(rng, 5, 5));
    auto S = Subspace<PrimeField>::span(f, 5, rows);
    // shuffled, rescaled and with a redundant sum
    Rows<PrimeField> other{scaled(f, 3u, rows[2]), rows[0], added(f, rows[0], rows[1]), rows[1]};
    auto T = Subspace<PrimeField>::span(f, 5, other);
    EXPECT_EQ(S, T);
    EXPECT_EQ(S.basis(), T.basis());
    EXPECT_EQ(oracle::elements(S).size(), static_cast<std::size_t>(std::pow(5, S.dim())));
  }
}

TEST(Subspace, LatticeOperationsMatchElementSets) {
  std::mt19937_64 rng(11);
  PrimeField f(3);
  for (int trial = 0; trial < 100; ++trial) {
    Rows<PrimeField> a{random_vec(rng, 3, 4), random_vec(rng, 3, 4)};
    Rows<PrimeField> b{random_vec(rng, 3, 4), random_vec(rng, 3, 4)};
    auto A = Subspace<PrimeField>::span(f, 4, a), B = Subspace<PrimeField>::span(f, 4, b);
    auto ea = oracle::elements(A), eb = oracle::elements(B);
    oracle::Elements meet;
    for (const auto& v : ea)
      if (eb.count(v)) meet.insert(v);
    EXPECT_EQ(oracle::elements(A.intersect(B)), meet);
    EXPECT_EQ(oracle::elements(A + B), oracle::sum(3, ea, eb));
    for (const auto& v : oracle::all_vectors(3, 4))
      EXPECT_EQ(A.contains(Vec<PrimeField>(v.begin(), v.end())), ea.count(v) == 1);
  }
}

TEST(Enumeration, GaussianBinomialMatchesBruteCount) {
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t d = 0; d <= n; ++d)
        EXPECT_EQ(gaussian_binomial(n, d, p), oracle::subspaces(p, n, d).size()) << p << " " << n << " " << d;
  EXPECT_EQ(gaussian_binomial(9, 6, 2), 788035u);
  EXPECT_EQ(gaussian_binomial(3, 4, 2), 0u);
}

TEST(Enumeration, VisitsEverySubspaceOnce) {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    auto all = Subspace<PrimeField>::whole(f, 4);
    for (std::size_t d = 0; d <= 4; ++d) {
      std::vector<Subspace<PrimeField>> seen;
      SearchStats stats;
      for_each_subspace(
          all, d,
          [&](const Rows<PrimeField>& rows) {
            seen.push_back(Subspace<PrimeField>::span(f, 4, rows));
            return true;
          },
          SearchOptions{}, stats);
      ASSERT_EQ(seen.size(), gaussian_binomial(4, d, p));
      std::set<oracle::Elements> distinct;
      for (const auto& S : seen) distinct.insert(oracle::elements(S));
      EXPECT_EQ(distinct.size(), seen.size());
      EXPECT_EQ(stats.candidates, gaussian_binomial(4, d, p));
    }
  }
}

TEST(Enumeration, ExhaustiveFirstIsLexLeastAndThreadIndependent) {
  PrimeField f(3);
  auto all = Subspace<PrimeField>::whole(f, 5);
  // subspaces of the coordinate-sum-zero hyperplane
  auto pred = [&](const Rows<PrimeField>& rows) {
    for (const auto& r : rows) {
      std::uint32_t s = 0;
      for (auto x : r) s = f.add(s, x);
      if (s) return false;
    }
    return true;
  };
  for (std::size_t d = 1; d <= 4; ++d) {
    std::optional<Subspace<PrimeField>> best;
    SearchStats s0;
    for_each_subspace(
        all, d,
        [&](const Rows<PrimeField>& rows) {
          if (pred(rows)) {
            auto S = Subspace<PrimeField>::span(f, 5, rows);
            if (!best || lex_less(S, *best)) best = S;
          }
          return true;
        },
        SearchOptions{}, s0);
    for (unsigned threads : {1u, 4u}) {
      SearchStats stats;
      auto hit = exhaustive_first(all, d, pred, SearchOptions{1'000'000, threads}, stats);
      ASSERT_EQ(hit.has_value(), best.has_value());
      if (hit) {
        EXPECT_EQ(*hit, *best);
      }
      EXPECT_EQ(stats.candidates, gaussian_binomial(5, d, 3));
    }
  }
}

TEST(Enumeration, BudgetIsChargedUpFront) {
  PrimeField f(2);
  auto all = Subspace<PrimeField>::whole(f, 6);
  SearchStats stats;
  EXPECT_THROW(exhaustive_first(all, 3, [](const auto&) { return true; }, SearchOptions{100, 1}, stats),
               BudgetExceeded);
  EXPECT_EQ(stats.candidates, 0u);
}
