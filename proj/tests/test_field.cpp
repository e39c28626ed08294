#include "liealg/field.hpp"

#include <gtest/gtest.h>

using namespace liealg;

TEST(PrimeField, AxiomsExhaustive) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    PrimeField f(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) {
        // inverse by brute force
        std::uint32_t brute = 0;
        for (std::uint32_t b = 1; b < p; ++b)
          if (a * b % p == 1) brute = b;
        EXPECT_EQ(f.inv(a), brute) << "p=" << p << " a=" << a;
      }
      for (std::uint32_t b = 0; b < p; ++b) {
        EXPECT_EQ(f.add(a, b), (a + b) % p);
        EXPECT_EQ(f.sub(a, b), (a + p - b) % p);
        EXPECT_EQ(f.mul(a, b), a * b % p);
      }
    }
  }
}

TEST(PrimeField, RejectsComposites) {
  for (std::uint32_t n : {0u, 1u, 4u, 9u, 15u, 91u}) EXPECT_THROW(PrimeField{n}, ScalarError);
  EXPECT_NO_THROW(PrimeField{2147483647u});
  EXPECT_THROW(PrimeField{2147483659u}, ScalarError);
}

TEST(PrimeField, ParseReducesAndDivides) {
  PrimeField f(7);
  EXPECT_EQ(f.parse("-1"), 6u);
  EXPECT_EQ(f.parse("15"), 1u);
  EXPECT_EQ(f.parse("1/2"), 4u);
  EXPECT_EQ(f.parse(" 3 "), 3u);
  EXPECT_THROW(f.parse("1/7"), ScalarError);
  EXPECT_THROW(f.parse("x"), ScalarError);
}

TEST(RationalField, CanonicalStrings) {
  RationalField q;
  EXPECT_EQ(q.to_string(q.parse("2/4")), "1/2");
  EXPECT_EQ(q.to_string(q.parse("-6/3")), "-2");
  EXPECT_EQ(q.to_string(q.parse("0/5")), "0");
  EXPECT_THROW(q.parse("1/0"), ScalarError);
  EXPECT_THROW(q.parse("1/-2"), ScalarError);
  EXPECT_THROW(q.parse(""), ScalarError);
  EXPECT_THROW(q.inv(q.zero()), std::domain_error);
}

TEST(RationalField, RoundTripProperty) {
  RationalField q;
  for (long long a = -12; a <= 12; ++a)
    for (long long b = 1; b <= 9; ++b) {
      auto x = q.div(q.from_int(a), q.from_int(b));
      EXPECT_EQ(q.parse(q.to_string(x)), x);
      if (a) {
        EXPECT_TRUE(q.is_one(q.mul(x, q.inv(x))));
      }
    }
}

TEST(FieldSpec, ParseAndLabel) {
  EXPECT_EQ(FieldSpec::parse("Q").label(), "Q");
  EXPECT_EQ(FieldSpec::parse("Fp:5").label(), "Fp:5");
  EXPECT_EQ(FieldSpec::parse("Fp:5").characteristic(), 5u);
  EXPECT_THROW(FieldSpec::parse("Fp:6"), ScalarError);
  EXPECT_THROW(FieldSpec::parse("R"), ScalarError);
  EXPECT_THROW(FieldSpec::parse("Fp:"), ScalarError);
}
