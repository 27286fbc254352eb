#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "szq/error.hpp"
#include "szq/matgrp.hpp"
#include "szq/suzuki.hpp"

using namespace szq;

namespace {

FieldPtr gf8() {
  static const FieldPtr f = Field::create(1);
  return f;
}

Mat4 w(const FieldPtr& f, Field::Raw a, Field::Raw b) {
  return make_w(f, f->element(a), f->element(b));
}

Mat4 from_ref(const FieldPtr& f, const ref::RawMat& e) {
  std::array<Field::Raw, 16> r{};
  for (std::size_t i = 0; i < 16; ++i) r[i] = static_cast<Field::Raw>(e[i]);
  return Mat4::from_raw(f, r);
}

Mat4 random_mat(const FieldPtr& f, std::mt19937_64& rng) {
  std::array<Field::Raw, 16> r{};
  for (auto& x : r) x = static_cast<Field::Raw>(rng() % f->order());
  return Mat4::from_raw(f, r);
}

}  // namespace

TEST(MatgrpTest, WMatchesReferenceEntries) {
  for (unsigned m : {1u, 2u}) {
    const auto f = Field::create(m);
    for (Field::Raw a = 0; a < f->order(); ++a) {
      for (Field::Raw b = 0; b < f->order(); ++b) {
        ASSERT_EQ(w(f, a, b), from_ref(f, ref::w_entries(a, b, m, f->modulus())));
      }
    }
  }
}

TEST(MatgrpTest, WGroupLawExhaustiveOverGf8) {
  const auto f = gf8();
  for (Field::Raw a = 0; a < 8; ++a) {
    for (Field::Raw b = 0; b < 8; ++b) {
      for (Field::Raw c = 0; c < 8; ++c) {
        for (Field::Raw d = 0; d < 8; ++d) {
          const auto lhs = mat_mul(w(f, a, b), w(f, c, d));
          const auto pa = ref::naive_twist(a, 1, f->modulus());
          const auto b2 = b ^ d ^ ref::peasant_mul(pa, c, f->modulus(), 3);
          ASSERT_EQ(lhs, from_ref(f, ref::w_entries(a ^ c, b2, 1, f->modulus())))
              << a << " " << b << " " << c << " " << d;
        }
      }
    }
  }
}

TEST(MatgrpTest, MulAgreesWithSchoolbookOracle) {
  std::mt19937_64 rng(7);
  for (unsigned m : {1u, 2u, 3u}) {
    const auto f = Field::create(m);
    for (int t = 0; t < 200; ++t) {
      const auto a = random_mat(f, rng);
      const auto b = random_mat(f, rng);
      ref::RawMat ra{}, rb{};
      for (std::size_t i = 0; i < 16; ++i) {
        ra[i] = a.raw_entries()[i];
        rb[i] = b.raw_entries()[i];
      }
      ASSERT_EQ(mat_mul(a, b), from_ref(f, ref::naive_mat_mul(ra, rb, f->modulus(), f->degree())));
    }
  }
}

TEST(MatgrpTest, AssociativityOnRandomTriples) {
  std::mt19937_64 rng(11);
  const auto f = Field::create(2);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_mat(f, rng);
    const auto b = random_mat(f, rng);
    const auto c = random_mat(f, rng);
    ASSERT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
  }
}

TEST(MatgrpTest, InverseOfW) {
  const auto f = gf8();
  for (Field::Raw a = 0; a < 8; ++a) {
    for (Field::Raw b = 0; b < 8; ++b) {
      const auto x = w(f, a, b);
      const auto xi = mat_inv(x);
      EXPECT_TRUE(mat_mul(x, xi).is_identity());
      EXPECT_TRUE(mat_mul(xi, x).is_identity());
      const auto pa = f->twist_raw(a);
      EXPECT_EQ(xi, w(f, a, b ^ f->mul_raw(pa, a)));
    }
  }
  EXPECT_EQ(mat_inv(Mat4::identity(f)), Mat4::identity(f));
}

TEST(MatgrpTest, InverseOfRandomInvertibleMatrices) {
  std::mt19937_64 rng(3);
  const auto f = Field::create(2);
  int inverted = 0;
  for (int t = 0; t < 300; ++t) {
    const auto a = random_mat(f, rng);
    try {
      const auto ai = mat_inv(a);
      EXPECT_TRUE(mat_mul(a, ai).is_identity());
      ++inverted;
    } catch (const SingularMatrixError&) {
    }
  }
  EXPECT_GT(inverted, 200);
}

TEST(MatgrpTest, SingularMatrixIsRejected) {
  const auto f = gf8();
  EXPECT_THROW(mat_inv(Mat4::zero(f)), SingularMatrixError);
  auto a = Mat4::identity(f);
  a.set(1, 1, f->zero());
  EXPECT_THROW(mat_inv(a), SingularMatrixError);
  // Two equal rows.
  const auto b = Mat4::from_raw(f, {1, 2, 3, 4, 1, 2, 3, 4, 0, 0, 1, 0, 0, 0, 0, 1});
  EXPECT_THROW(mat_inv(b), SingularMatrixError);
}

TEST(MatgrpTest, FieldMismatchIsRejected) {
  const auto f = gf8();
  const auto g = Field::create(2);
  EXPECT_THROW(mat_mul(Mat4::identity(f), Mat4::identity(g)), ParameterError);
  auto a = Mat4::identity(f);
  EXPECT_THROW(a.set(0, 1, g->one()), ParameterError);
  EXPECT_NE(Mat4::identity(f), Mat4::identity(g));
  EXPECT_THROW(Mat4::from_raw(f, {8, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}),
               ParameterError);
}

TEST(MatgrpTest, EncodeIdentity) {
  const std::string e = encode(Mat4::identity(gf8()));
  ASSERT_EQ(e.size(), 16u);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(static_cast<unsigned char>(e[i]), (i % 5 == 0) ? 1u : 0u) << i;
  }
}

TEST(MatgrpTest, EncodeIsLittleEndianPerEntry) {
  const auto f = Field::create(5);  // degree 11, two bytes per entry
  EXPECT_EQ(f->element_bytes(), 2u);
  auto a = Mat4::zero(f);
  a.set(0, 0, f->element(0x4a1));
  const std::string e = encode(a);
  ASSERT_EQ(e.size(), 32u);
  EXPECT_EQ(static_cast<unsigned char>(e[0]), 0xa1u);
  EXPECT_EQ(static_cast<unsigned char>(e[1]), 0x04u);
}

TEST(MatgrpTest, DecodeRoundTripAndErrors) {
  std::mt19937_64 rng(5);
  for (unsigned m : {1u, 2u, 5u}) {
    const auto f = Field::create(m);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_mat(f, rng);
      EXPECT_EQ(decode(encode(a), f), a);
    }
  }
  const auto f = gf8();
  EXPECT_THROW(decode(std::string(15, '\0'), f), ParameterError);
  std::string bad(16, '\0');
  bad[3] = 9;
  EXPECT_THROW(decode(bad, f), ParameterError);
}

TEST(MatgrpTest, ElementOrderExamples) {
  const auto f = gf8();
  const std::vector<std::uint64_t> hints{4, 7, 13, 5};
  EXPECT_EQ(element_order(Mat4::identity(f), hints), 1u);
  EXPECT_EQ(element_order(w(f, 0, 1), hints), 2u);
  EXPECT_EQ(element_order(w(f, 1, 0), hints), 4u);
  EXPECT_EQ(element_order(w(f, 1, 0), {}), 4u);
  EXPECT_EQ(element_order(make_tau(f), {}), 2u);
  // Nothing divides the hints: a non-identity matrix of order 4 with hint 7.
  const std::vector<std::uint64_t> wrong{7};
  EXPECT_THROW(element_order(w(f, 1, 0), wrong), OrderNotFoundError);
  EXPECT_THROW(element_order(w(f, 1, 0), {}, 3), OrderNotFoundError);
}

TEST(MatgrpTest, EveryNontrivialWHasOrderTwoOrFour) {
  const auto f = Field::create(2);
  const std::vector<std::uint64_t> hints{4};
  for (Field::Raw a = 0; a < 32; ++a) {
    for (Field::Raw b = 0; b < 32; ++b) {
      const auto k = element_order(w(f, a, b), hints);
      if (a == 0 && b == 0) {
        EXPECT_EQ(k, 1u);
      } else {
        EXPECT_EQ(k, a == 0 ? 2u : 4u);
      }
    }
  }
}

TEST(MatgrpTest, PowAndConjugate) {
  std::mt19937_64 rng(9);
  const auto f = gf8();
  const auto x = w(f, 3, 5);
  EXPECT_TRUE(mat_pow(x, 0).is_identity());
  EXPECT_EQ(mat_pow(x, 3), mat_mul(x, mat_mul(x, x)));
  const auto tau = make_tau(f);
  EXPECT_EQ(conjugate(tau, x, tau), mat_mul(tau, mat_mul(x, tau)));
}

TEST(MatgrpTest, HintDivisorsAreSortedUnion) {
  const std::vector<std::uint64_t> hints{4, 6};
  EXPECT_EQ(hint_divisors(hints), (std::vector<std::uint64_t>{1, 2, 3, 4, 6}));
}

TEST(MatgrpTest, ClosureOfSmallGroups) {
  const auto f = gf8();
  const std::vector<Mat4> gens{make_tau(f)};
  std::vector<Mat4> seen;
  EXPECT_EQ(for_each_in_closure(gens, 10, [&](const Mat4& x) { seen.push_back(x); }), 2u);
  ASSERT_EQ(seen.size(), 2u);
  EXPECT_TRUE(seen.front().is_identity());
  EXPECT_EQ(closure_size_packed(gens, 10), 2u);
  const std::vector<Mat4> w_gens{w(f, 1, 0), w(f, 2, 0), w(f, 4, 0)};
  EXPECT_EQ(for_each_in_closure(w_gens, 1000, [](const Mat4&) {}), 64u);
  EXPECT_EQ(closure_size_packed(w_gens, 1000), 64u);
  EXPECT_THROW(for_each_in_closure(w_gens, 63, [](const Mat4&) {}), LimitExceededError);
  EXPECT_THROW(closure_size_packed(w_gens, 63), LimitExceededError);
}
