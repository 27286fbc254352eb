#pragma once

// Decides whether an (order, nse) profile is consistent with some Sz(q) by
// replaying the arithmetic certificates of the characterization: order
// matching, nse matching, isolation of the prime 2, exclusion of Frobenius
// and 2-Frobenius structure, and the simple-section size argument.
//
// ACCEPT means the profile equals that of Sz(q) and every certificate holds,
// so the characterization theorem applies. The gate does not build an
// isomorphism, and it does not replay the proof's bookkeeping over unknown
// multiplicities in a hypothetical group, which the profile cannot decide.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "szq/numtheory.hpp"
#include "szq/orderstats.hpp"

namespace szq {

struct CandidateProfile {
  BigInt order;
  /// The nse set. When a full map is supplied this is its value set.
  std::set<BigInt> nse_set;
  /// Optional order -> count map; total equals order.
  std::optional<OrderStats> nse_map;
};

/// {"order": "<n>", "nse_set": ["<n>", ...]} or
/// {"order": "<n>", "nse_map": {"<order>": "<count>", ...}}.
/// Validates as validate_profile does. Throws InputError.
CandidateProfile profile_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CandidateProfile& p);

/// Throws InputError for a nonpositive order or count, an empty nse, or a
/// map whose counts do not sum to the order.
void validate_profile(const CandidateProfile& p);

/// Profile of Sz(2^(2m+1)) from the closed forms. With full_map the nse map
/// is attached as well.
CandidateProfile suzuki_profile(unsigned m, bool full_map = false);

enum class Verdict { kAccept, kReject };

struct GateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GateReport {
  Verdict verdict = Verdict::kReject;
  std::optional<unsigned> inferred_m;
  std::vector<GateCheck> checks;
  std::string scope_note;

  /// Name of the first failed check, empty on ACCEPT.
  std::string rejected_at() const;
};

/// The m >= 1 with order = 2^(4m+2) (2^(4m+2) + 1)(2^(2m+1) - 1), if any.
std::optional<unsigned> infer_q(const BigInt& order);

/// The unique odd member greater than 1, taken as the number of involutions.
/// Throws AmbiguityError when there are none or several, and when 1 is absent.
BigInt identify_m2(const std::set<BigInt>& nse_set);

GateCheck nse_match_check(const CandidateProfile& profile, unsigned m);

/// (q^2 + 1)(q - 1) = |Sz(q)| / q^2.
BigInt odd_order_part(unsigned m);
/// r = (m_2 + m_4) / m_2 from the closed forms.
BigInt involution_ratio(unsigned m);
/// Multiplicative order of 2 modulo (q^2 + 1)(q - 1).
BigInt order_of_two(unsigned m);

/// q^2 | m_i for spectrum orders i outside {1, 2, 4}; the odd part of
/// |Sz(q)| is (q^2 + 1)(q - 1); f(2) = m_2 + m_4 is an odd multiple of it.
GateCheck isolation_certificate(unsigned m);
/// Neither {|K|, |H|} = {q^2, (q^2+1)(q-1)} assignment has |H| | |K| - 1.
GateCheck frobenius_exclusion(unsigned m);
/// ord(2 mod (q^2+1)(q-1)) > 4m + 2, so no 2-group of order at most q^2
/// has (q^2+1)(q-1) | 2^a - 1.
GateCheck two_frobenius_exclusion(unsigned m);
/// (q^2+1)(q-1) divides (q'^2+1)(q'-1) for no q' < q.
GateCheck simple_section_check(unsigned m);

/// infer_q, identify_m2, nse_match, isolation, frobenius_exclusion,
/// two_frobenius_exclusion, simple_section. Throws InputError on a malformed
/// profile before any check runs.
GateReport run_gate(const CandidateProfile& profile);

nlohmann::json to_json(const GateReport& r);

}  // namespace szq
