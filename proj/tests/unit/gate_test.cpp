#include <gtest/gtest.h>

#include "oracles.hpp"
#include "szq/error.hpp"
#include "szq/gate.hpp"
#include "szq/suzuki.hpp"

using namespace szq;

TEST(GateTest, InferQ) {
  EXPECT_EQ(infer_q(29120), 1u);
  EXPECT_EQ(infer_q(32537600), 2u);
  EXPECT_FALSE(infer_q(29121));
  EXPECT_FALSE(infer_q(20160));
  EXPECT_FALSE(infer_q(1));
  for (unsigned m = 1; m <= 12; ++m) EXPECT_EQ(infer_q(make_params(m).group_order), m);
}

TEST(GateTest, IdentifyM2) {
  EXPECT_EQ(identify_m2(suzuki_profile(1).nse_set), 455);
  EXPECT_EQ(identify_m2(suzuki_profile(2).nse_set), 31775);
  for (unsigned m = 1; m <= 8; ++m) {
    EXPECT_EQ(identify_m2(suzuki_profile(m).nse_set), nse_closed_form(make_params(m)).count(2));
  }
  EXPECT_THROW(identify_m2({1, 4, 6}), AmbiguityError);
  EXPECT_THROW(identify_m2({1, 3, 5}), AmbiguityError);
  EXPECT_THROW(identify_m2({3, 4}), AmbiguityError);
}

TEST(GateTest, CertificateQuantities) {
  EXPECT_EQ(odd_order_part(1), 455);
  EXPECT_EQ(odd_order_part(2), 31775);
  EXPECT_EQ(involution_ratio(1), 9);
  EXPECT_EQ(involution_ratio(2), 33);
  EXPECT_EQ(order_of_two(1), 12);
  EXPECT_EQ(order_of_two(2), 20);
  EXPECT_EQ(ref::brute_order_mod(2, 455), 12u);
  EXPECT_EQ(ref::brute_order_mod(2, 31775), 20u);
  EXPECT_EQ(powmod(2, 12, 455), 1u);
  for (unsigned m = 1; m <= 4; ++m) {
    const auto modulus = static_cast<std::uint64_t>(odd_order_part(m));
    EXPECT_EQ(order_of_two(m), ref::brute_order_mod(2, modulus)) << m;
  }
}

TEST(GateTest, CertificatesPassForSmallM) {
  for (unsigned m = 1; m <= 8; ++m) {
    EXPECT_TRUE(isolation_certificate(m).passed) << m;
    EXPECT_TRUE(frobenius_exclusion(m).passed) << m;
    const auto t = two_frobenius_exclusion(m);
    EXPECT_TRUE(t.passed) << m << ": " << t.detail;
    EXPECT_GT(order_of_two(m), 4 * m + 2);
    EXPECT_TRUE(simple_section_check(m).passed) << m;
    EXPECT_EQ(involution_ratio(m) % 2, 1) << m;
  }
  EXPECT_EQ(simple_section_check(1).detail, "no m' < 1; vacuous");
}

TEST(GateTest, AcceptsSuzukiProfiles) {
  for (unsigned m = 1; m <= 8; ++m) {
    for (bool full : {false, true}) {
      const auto r = run_gate(suzuki_profile(m, full));
      EXPECT_EQ(r.verdict, Verdict::kAccept) << m << ": " << r.rejected_at();
      EXPECT_EQ(r.inferred_m, m);
      EXPECT_EQ(r.checks.size(), 7u);
      EXPECT_TRUE(r.rejected_at().empty());
    }
  }
}

TEST(GateTest, RejectsEverySingleIncrement) {
  const auto base = suzuki_profile(1);
  for (const auto& v : base.nse_set) {
    auto p = base;
    p.nse_set.erase(v);
    p.nse_set.insert(v + 1);
    const auto r = run_gate(p);
    EXPECT_EQ(r.verdict, Verdict::kReject) << to_decimal(v);
  }
  auto p = base;
  p.nse_set.erase(6720);
  p.nse_set.insert(6722);
  EXPECT_EQ(run_gate(p).rejected_at(), "nse_match");
}

TEST(GateTest, RejectsNonSuzukiOrder) {
  CandidateProfile p;
  p.order = 20160;
  p.nse_set = {1, 210, 2240};
  const auto r = run_gate(p);
  EXPECT_EQ(r.verdict, Verdict::kReject);
  EXPECT_EQ(r.rejected_at(), "infer_q");
  EXPECT_FALSE(r.inferred_m);
  EXPECT_EQ(to_json(r).at("rejected_at"), "infer_q");
  EXPECT_TRUE(to_json(r).at("inferred_m").is_null());
}

TEST(GateTest, MapModeIsStrict) {
  auto p = suzuki_profile(1, true);
  // Swap two counts: same value set, wrong orders.
  std::swap(p.nse_map->counts[5], p.nse_map->counts[7]);
  const auto r = run_gate(p);
  EXPECT_EQ(r.verdict, Verdict::kReject);
  EXPECT_EQ(r.rejected_at(), "nse_match");
}

TEST(GateTest, ProfileJson) {
  using nlohmann::json;
  const auto p = profile_from_json(
      json::parse(R"({"order": "29120", "nse_set": ["1","455","3640","5824","6720","12480"]})"));
  EXPECT_EQ(run_gate(p).verdict, Verdict::kAccept);
  const auto q = profile_from_json(json::parse(
      R"({"order": 29120, "nse_map": {"1":1,"2":455,"4":3640,"5":5824,"7":12480,"13":6720}})"));
  EXPECT_TRUE(q.nse_map);
  EXPECT_EQ(q.nse_set, p.nse_set);
  EXPECT_EQ(run_gate(q).verdict, Verdict::kAccept);
  for (unsigned m = 1; m <= 8; ++m) {
    for (bool full : {false, true}) {
      const auto s = suzuki_profile(m, full);
      const auto back = profile_from_json(json::parse(to_json(s).dump()));
      EXPECT_EQ(back.order, s.order);
      EXPECT_EQ(back.nse_set, s.nse_set);
    }
  }
}

TEST(GateTest, MalformedProfilesAreInputErrors) {
  using nlohmann::json;
  const char* bad[] = {
      R"([])",
      R"({})",
      R"({"order": "29120"})",
      R"({"order": "29120", "nse_set": [], "nse_map": {}})",
      R"({"order": "0", "nse_set": ["1"]})",
      R"({"order": "-3", "nse_set": ["1"]})",
      R"({"order": "29120", "nse_set": []})",
      R"({"order": "29120", "nse_set": ["0", "1"]})",
      R"({"order": "29120", "nse_set": "1"})",
      R"({"order": "29120", "nse_set": ["x"]})",
      R"({"order": "10", "nse_map": {"1": "1", "2": "3"}})",
      R"({"order": "4", "nse_map": {"1": "1", "2": "0", "4": "3"}})",
      R"({"order": "4", "nse_map": {"0": "4"}})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(profile_from_json(json::parse(text)), InputError) << text;
  }
  CandidateProfile p;
  p.order = 29120;
  EXPECT_THROW(run_gate(p), InputError);
}
