#include <gtest/gtest.h>

#include "szq/error.hpp"
#include "szq/suzuki.hpp"

using namespace szq;

TEST(SuzukiTest, ParamsAtSmallM) {
  const auto p1 = make_params(1);
  EXPECT_EQ(p1.q, 8u);
  EXPECT_EQ(p1.s, 4u);
  EXPECT_EQ(p1.u1, 13u);
  EXPECT_EQ(p1.u2, 5u);
  EXPECT_EQ(p1.v, 7u);
  EXPECT_EQ(p1.w_order, 64);
  EXPECT_EQ(p1.group_order, 29120);

  const auto p2 = make_params(2);
  EXPECT_EQ(p2.q, 32u);
  EXPECT_EQ(p2.s, 8u);
  EXPECT_EQ(p2.u1, 41u);
  EXPECT_EQ(p2.u2, 25u);
  EXPECT_EQ(p2.v, 31u);
  EXPECT_EQ(p2.group_order, 32537600);
}

TEST(SuzukiTest, ParamsRejectOutOfRange) {
  EXPECT_THROW(make_params(0), ParameterError);
  EXPECT_THROW(make_params(kMaxSuzukiM + 1), ParameterError);
  EXPECT_NO_THROW(make_params(kMaxSuzukiM));
}

TEST(SuzukiTest, ParamIdentities) {
  for (unsigned m = 1; m <= 8; ++m) {
    const auto p = make_params(m);
    const BigInt q = p.q;
    EXPECT_EQ(BigInt(p.u1) * p.u2, q * q + 1) << m;
    EXPECT_EQ(BigInt(p.s) * p.s, 2 * q) << m;
    EXPECT_EQ(p.group_order, q * q * (q * q + 1) * (q - 1)) << m;
  }
}

TEST(SuzukiTest, QToM) {
  EXPECT_EQ(m_from_q(8), 1u);
  EXPECT_EQ(m_from_q(32), 2u);
  EXPECT_EQ(m_from_q(512), 4u);
  EXPECT_FALSE(m_from_q(2));
  EXPECT_FALSE(m_from_q(6));
  EXPECT_FALSE(m_from_q(16));
  EXPECT_FALSE(m_from_q(0));
}

TEST(SuzukiTest, SubgroupCountsAtQ8) {
  const auto c = closed_form_subgroup_counts(make_params(1));
  EXPECT_EQ(c.n_w, 65);
  EXPECT_EQ(c.n_u1, 560);
  EXPECT_EQ(c.n_u2, 1456);
  EXPECT_EQ(c.n_v, 2080);
  // 65*63 + 560*12 + 1456*4 + 2080*6
  EXPECT_EQ(partition_coverage(make_params(1), c), 29119);
}

TEST(SuzukiTest, CoverageIdentityHolds) {
  for (unsigned m = 1; m <= 8; ++m) {
    const auto p = make_params(m);
    EXPECT_EQ(partition_coverage(p, closed_form_subgroup_counts(p)), p.group_order - 1) << m;
  }
}

TEST(SuzukiTest, WAtZeroIsIdentityAndAsWRecovers) {
  const auto f = Field::create(1);
  EXPECT_TRUE(make_w(f, f->zero(), f->zero()).is_identity());
  for (Field::Raw a = 0; a < 8; ++a) {
    for (Field::Raw b = 0; b < 8; ++b) {
      const auto got = as_w(make_w(f, f->element(a), f->element(b)));
      ASSERT_TRUE(got);
      EXPECT_EQ(got->first.bits(), a);
      EXPECT_EQ(got->second.bits(), b);
    }
  }
  EXPECT_FALSE(as_w(make_tau(f)));
}

TEST(SuzukiTest, WHasQMinusOneInvolutions) {
  for (unsigned m : {1u, 2u}) {
    const auto f = Field::create(m);
    std::uint64_t involutions = 0;
    for (Field::Raw a = 0; a < f->order(); ++a) {
      for (Field::Raw b = 0; b < f->order(); ++b) {
        const auto x = make_w(f, f->element(a), f->element(b));
        if (!x.is_identity() && mat_mul(x, x).is_identity()) ++involutions;
      }
    }
    EXPECT_EQ(involutions, f->order() - 1);
  }
}

TEST(SuzukiTest, TauIsInvolutionAndTorusIsDiagonal) {
  const auto f = Field::create(1);
  EXPECT_TRUE(mat_mul(make_tau(f), make_tau(f)).is_identity());
  const auto d = make_torus(f, f->primitive_element());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j) {
        EXPECT_TRUE(d.at(i, j).is_zero());
      }
    }
  }
  EXPECT_EQ(element_order(d, {}), 7u);
  EXPECT_THROW(make_torus(f, f->zero()), ParameterError);
}

TEST(SuzukiTest, TorusNormalizesW) {
  const auto f = Field::create(2);
  const auto d = make_torus(f, f->primitive_element());
  const auto di = mat_inv(d);
  for (Field::Raw a = 0; a < 32; a += 3) {
    for (Field::Raw b = 0; b < 32; b += 5) {
      EXPECT_TRUE(as_w(conjugate(d, make_w(f, f->element(a), f->element(b)), di)));
    }
  }
}

TEST(SuzukiTest, StandardGeneratorsCertifyAtQ8) {
  const auto p = make_params(1);
  const auto f = Field::create(1);
  const auto gens = standard_generators(p, f);
  ASSERT_EQ(gens.size(), 4u);
  EXPECT_EQ(closure_size_packed(gens, 1'000'000), 29120u);
}

TEST(SuzukiTest, StructuralCertificationAtQ32) {
  const auto p = make_params(2);
  EXPECT_NO_THROW(standard_generators(p, Field::create(2), Certify::kStructural));
  EXPECT_NO_THROW(standard_generators(p, Field::create(2, 0b101001), Certify::kStructural));
}

TEST(SuzukiTest, GeneratorsRejectWrongField) {
  EXPECT_THROW(standard_generators(make_params(1), Field::create(2)), ParameterError);
}
