#include "szq/gate.hpp"

#include <algorithm>

#include "szq/error.hpp"
#include "szq/suzuki.hpp"

namespace szq {

namespace {

BigInt json_integer(const nlohmann::json& v, const std::string& what) {
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer()) {
    const auto x = v.get<std::int64_t>();
    if (x <= 0) throw InputError(what + " must be positive");
    return BigInt(x);
  }
  throw InputError(what + ": expected a decimal string");
}

std::string join(const std::set<BigInt>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ", ";
    out += to_decimal(v);
  }
  return "{" + out + "}";
}

}  // namespace

CandidateProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order")) {
    throw InputError("profile: expected an object with \"order\"");
  }
  const bool has_set = j.contains("nse_set");
  const bool has_map = j.contains("nse_map");
  if (has_set == has_map) {
    throw InputError("profile: exactly one of \"nse_set\" and \"nse_map\" is required");
  }
  CandidateProfile p;
  p.order = json_integer(j.at("order"), "order");
  if (has_set) {
    if (!j.at("nse_set").is_array()) throw InputError("profile: nse_set must be an array");
    for (const auto& v : j.at("nse_set")) p.nse_set.insert(json_integer(v, "nse_set value"));
  } else {
    if (!j.at("nse_map").is_object()) throw InputError("profile: nse_map must be an object");
    OrderStats s;
    s.total = p.order;
    for (const auto& [key, value] : j.at("nse_map").items()) {
      const BigInt k = parse_decimal(key);
      if (k == 0 || k > std::numeric_limits<std::uint64_t>::max()) {
        throw InputError("profile: element order '" + key + "' out of range");
      }
      const BigInt c = json_integer(value, "nse_map count");
      s.counts[static_cast<std::uint64_t>(k)] = c;
      p.nse_set.insert(c);
    }
    p.nse_map = std::move(s);
  }
  validate_profile(p);
  return p;
}

nlohmann::json to_json(const CandidateProfile& p) {
  nlohmann::json j{{"order", to_decimal(p.order)}};
  if (p.nse_map) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [i, c] : p.nse_map->counts) m[std::to_string(i)] = to_decimal(c);
    j["nse_map"] = std::move(m);
  } else {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& v : p.nse_set) s.push_back(to_decimal(v));
    j["nse_set"] = std::move(s);
  }
  return j;
}

void validate_profile(const CandidateProfile& p) {
  if (p.order <= 0) throw InputError("profile: order must be positive");
  if (p.nse_set.empty()) throw InputError("profile: nse is empty");
  for (const auto& v : p.nse_set) {
    if (v <= 0) throw InputError("profile: nse values must be positive");
  }
  if (p.nse_map) {
    for (const auto& [i, c] : p.nse_map->counts) {
      if (c <= 0) throw InputError("profile: count of order " + std::to_string(i) + " is not positive");
    }
    if (p.nse_map->sum() != p.order) {
      throw InputError("profile: nse_map counts sum to " + to_decimal(p.nse_map->sum()) +
                       ", not the order " + to_decimal(p.order));
    }
    if (p.nse_map->nse() != p.nse_set) {
      throw InputError("profile: nse_set does not match the values of nse_map");
    }
  }
}

CandidateProfile suzuki_profile(unsigned m, bool full_map) {
  const OrderStats s = nse_closed_form(make_params(m));
  CandidateProfile p;
  p.order = s.total;
  p.nse_set = s.nse();
  if (full_map) p.nse_map = s;
  return p;
}

std::string GateReport::rejected_at() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name;
  }
  return {};
}

std::optional<unsigned> infer_q(const BigInt& order) {
  for (unsigned m = 1; m <= kMaxSuzukiM; ++m) {
    const BigInt q2 = pow2(4 * m + 2);
    if (q2 > order) break;
    if (q2 * (q2 + 1) * (pow2(2 * m + 1) - 1) == order) return m;
  }
  return std::nullopt;
}

BigInt identify_m2(const std::set<BigInt>& nse_set) {
  if (!nse_set.count(1)) throw AmbiguityError("identify_m2: nse set does not contain 1");
  std::vector<BigInt> odd;
  for (const auto& v : nse_set) {
    if (v > 1 && v % 2 == 1) odd.push_back(v);
  }
  if (odd.size() != 1) {
    throw AmbiguityError("identify_m2: expected exactly one odd value > 1, found " +
                         std::to_string(odd.size()));
  }
  return odd.front();
}

GateCheck nse_match_check(const CandidateProfile& profile, unsigned m) {
  const OrderStats expected = nse_closed_form(make_params(m));
  GateCheck c;
  c.name = "nse_match";
  const std::set<BigInt> want = expected.nse();
  if (profile.nse_set != want) {
    std::set<BigInt> extra;
    std::set<BigInt> missing;
    std::set_difference(profile.nse_set.begin(), profile.nse_set.end(), want.begin(), want.end(),
                        std::inserter(extra, extra.end()));
    std::set_difference(want.begin(), want.end(), profile.nse_set.begin(), profile.nse_set.end(),
                        std::inserter(missing, missing.end()));
    c.detail = "nse set differs from nse(Sz(" + std::to_string(make_params(m).q) +
               ")): unexpected " + join(extra) + ", missing " + join(missing);
    return c;
  }
  if (profile.nse_map) {
    const auto d = diff(*profile.nse_map, expected);
    if (!d.empty()) {
      c.detail = "nse map differs: " + d.front();
      return c;
    }
    c.passed = true;
    c.detail = "nse map equals the closed form key by key";
    return c;
  }
  c.passed = true;
  c.detail = "nse set equals " + join(want);
  return c;
}

BigInt odd_order_part(unsigned m) {
  const SuzukiParams p = make_params(m);
  return p.group_order / p.w_order;
}

BigInt involution_ratio(unsigned m) {
  const OrderStats s = nse_closed_form(make_params(m));
  return (s.count(2) + s.count(4)) / s.count(2);
}

BigInt order_of_two(unsigned m) {
  const SuzukiParams p = make_params(m);
  // u1, u2 and v are pairwise coprime, so the order is the lcm of the parts.
  BigInt d = 1;
  for (std::uint64_t n : {p.u1, p.u2, p.v}) {
    const BigInt k = multiplicative_order(2, n);
    d = d / boost::multiprecision::gcd(d, k) * k;
  }
  return d;
}

GateCheck isolation_certificate(unsigned m) {
  const SuzukiParams p = make_params(m);
  const OrderStats s = nse_closed_form(p);
  const BigInt q2 = p.w_order;
  GateCheck c;
  c.name = "isolation_certificate";

  for (std::uint64_t i : spectrum_closed_form(p).orders) {
    if (i == 1 || i == 2 || i == 4) continue;
    if (s.count(i) % q2 != 0) {
      c.detail = "q^2 = " + to_decimal(q2) + " does not divide m_" + std::to_string(i);
      return c;
    }
  }
  const BigInt odd = odd_order_part(m);
  const BigInt largest_odd = coprime_part(p.group_order, 2);
  if (largest_odd != odd) {
    c.detail = "largest odd divisor of |S| is " + to_decimal(largest_odd) + ", not " +
               to_decimal(odd);
    return c;
  }
  const BigInt f2 = weisner_count(s, 2).f;
  if (f2 % odd != 0) {
    c.detail = "f(2) = " + to_decimal(f2) + " is not a multiple of " + to_decimal(odd);
    return c;
  }
  const BigInt r = f2 / odd;
  if (r % 2 == 0) {
    c.detail = "f(2) / " + to_decimal(odd) + " = " + to_decimal(r) + " is even";
    return c;
  }
  c.passed = true;
  c.detail = "q^2 divides every m_i with i outside {1,2,4}; f(2) = " + to_decimal(f2) + " = " +
             to_decimal(odd) + " * " + to_decimal(r) + " with r odd";
  return c;
}

GateCheck frobenius_exclusion(unsigned m) {
  const SuzukiParams p = make_params(m);
  const BigInt q2 = p.w_order;
  const BigInt odd = odd_order_part(m);
  GateCheck c;
  c.name = "frobenius_exclusion";
  // Kernel of order q^2 with complement (q^2+1)(q-1), then the reverse.
  if ((q2 - 1) % odd == 0) {
    c.detail = to_decimal(odd) + " divides " + to_decimal(q2 - 1);
    return c;
  }
  if ((odd - 1) % q2 == 0) {
    c.detail = to_decimal(q2) + " divides " + to_decimal(odd - 1);
    return c;
  }
  c.passed = true;
  c.detail = to_decimal(odd) + " does not divide " + to_decimal(q2 - 1) + " and " +
             to_decimal(q2) + " does not divide " + to_decimal(odd - 1);
  return c;
}

GateCheck two_frobenius_exclusion(unsigned m) {
  const BigInt modulus = odd_order_part(m);
  const unsigned bound = 4 * m + 2;
  const BigInt d = order_of_two(m);
  GateCheck c;
  c.name = "two_frobenius_exclusion";

  if (boost::multiprecision::powm(BigInt(2), d, modulus) != 1) {
    c.detail = "2^" + to_decimal(d) + " is not 1 modulo " + to_decimal(modulus);
    return c;
  }
  BigInt power = 1;
  for (unsigned a = 1; a <= bound; ++a) {
    power = power * 2 % modulus;
    if (power == 1) {
      c.detail = to_decimal(modulus) + " divides 2^" + std::to_string(a) + " - 1";
      return c;
    }
  }
  c.passed = d > bound;
  c.detail = "ord(2 mod " + to_decimal(modulus) + ") = " + to_decimal(d) +
             (c.passed ? " > " : " <= ") + std::to_string(bound);
  return c;
}

GateCheck simple_section_check(unsigned m) {
  const BigInt odd = odd_order_part(m);
  GateCheck c;
  c.name = "simple_section";
  for (unsigned k = 1; k < m; ++k) {
    const BigInt other = odd_order_part(k);
    if (other % odd == 0) {
      c.detail = to_decimal(odd) + " divides " + to_decimal(other) + " (m' = " +
                 std::to_string(k) + ")";
      return c;
    }
  }
  c.passed = true;
  c.detail = m == 1 ? "no m' < 1; vacuous"
                    : to_decimal(odd) + " divides (q'^2+1)(q'-1) for no m' < " + std::to_string(m);
  return c;
}

GateReport run_gate(const CandidateProfile& profile) {
  validate_profile(profile);
  GateReport r;
  r.scope_note =
      "ACCEPT: the profile equals that of Sz(q) and every arithmetic certificate holds, so "
      "the characterization by order and nse applies. Not an independent isomorphism proof; "
      "the proof's bookkeeping over unknown multiplicities of a hypothetical group is not "
      "decidable from the profile and is not replayed.";

  const auto m = infer_q(profile.order);
  if (!m) {
    r.checks.push_back({"infer_q", false,
                        to_decimal(profile.order) + " is not q^2(q^2+1)(q-1) for q = 2^(2m+1)"});
    return r;
  }
  r.inferred_m = *m;
  r.checks.push_back({"infer_q", true,
                      "order = |Sz(" + std::to_string(make_params(*m).q) + ")|, m = " +
                          std::to_string(*m)});

  try {
    const BigInt m2 = identify_m2(profile.nse_set);
    r.checks.push_back({"identify_m2", true, "m_2 = " + to_decimal(m2)});
  } catch (const AmbiguityError& e) {
    r.checks.push_back({"identify_m2", false, e.what()});
  }
  r.checks.push_back(nse_match_check(profile, *m));
  r.checks.push_back(isolation_certificate(*m));
  r.checks.push_back(frobenius_exclusion(*m));
  r.checks.push_back(two_frobenius_exclusion(*m));
  r.checks.push_back(simple_section_check(*m));

  const bool all = std::all_of(r.checks.begin(), r.checks.end(),
                               [](const GateCheck& c) { return c.passed; });
  r.verdict = all ? Verdict::kAccept : Verdict::kReject;
  return r;
}

nlohmann::json to_json(const GateReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  nlohmann::json j{{"verdict", r.verdict == Verdict::kAccept ? "ACCEPT" : "REJECT"},
                   {"inferred_m", nullptr},
                   {"checks", checks},
                   {"scope_note", r.scope_note}};
  if (r.inferred_m) j["inferred_m"] = *r.inferred_m;
  if (r.verdict == Verdict::kReject) j["rejected_at"] = r.rejected_at();
  return j;
}

}  // namespace szq
