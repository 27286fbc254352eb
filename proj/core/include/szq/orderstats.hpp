#pragma once

// Element-order statistics: spectra, the closed-form counts for Sz(q), the
// type function n -> |G(n)|, the classical divisibility lemmas as checks,
// and the prime graph.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "szq/numtheory.hpp"
#include "szq/suzuki.hpp"

namespace szq {

/// Map from element order i to m_i, the number of elements of order i.
struct OrderStats {
  std::map<std::uint64_t, BigInt> counts;
  BigInt total;

  BigInt count(std::uint64_t order) const;
  BigInt sum() const;
  /// The value set {m_i}: the nse of the group.
  std::set<BigInt> nse() const;

  friend bool operator==(const OrderStats&, const OrderStats&) = default;
};

/// Violations of the structural invariants: sum equals total, m_1 = 1, and
/// m_i even for i > 2. Empty when the stats are well formed.
std::vector<std::string> invariant_violations(const OrderStats& s);

/// Human-readable key-by-key differences; empty iff a == b.
std::vector<std::string> diff(const OrderStats& a, const OrderStats& b);

/// {"total": "<n>", "counts": {"<order>": "<count>"}}, all decimal strings.
nlohmann::json to_json(const OrderStats& s);
/// Throws InputError on schema violations.
OrderStats order_stats_from_json(const nlohmann::json& j);

/// A divisor-closed set of element orders.
struct Spectrum {
  std::set<std::uint64_t> orders;

  bool contains(std::uint64_t i) const { return orders.count(i) != 0; }
  bool divisor_closed() const;
  /// Every divisor of every member.
  static Spectrum closure_of(const std::set<std::uint64_t>& orders);
  /// Orders with a nonzero count.
  static Spectrum of(const OrderStats& s);

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Divisors of 4, q - 1, q + s + 1 and q - s + 1.
Spectrum spectrum_closed_form(const SuzukiParams& p);

/// m_1 = 1, m_2 = (q-1)(q^2+1), m_4 = q(q-1)(q^2+1); for 1 < i | q +- s + 1,
/// m_i = phi(i) q^2 (q -+ s + 1)(q-1)/4 (the cofactor carries the opposite
/// sign); for 1 < i | q - 1, m_i = phi(i) q^2 (q^2+1)/2.
/// Throws AssertionError if the counts fail to sum to |Sz(q)|.
OrderStats nse_closed_form(const SuzukiParams& p);

/// |G(n)| = sum of m_j over j dividing n.
BigInt type_function(const OrderStats& s, const BigInt& n);

struct CheckReport {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;  // number of individual conditions evaluated
  std::vector<std::string> violations;

  void fail(std::string why) {
    passed = false;
    violations.push_back(std::move(why));
  }
};

nlohmann::json to_json(const CheckReport& r);

/// n divides |G(n)| for every divisor n of the total.
CheckReport frobenius_check(const OrderStats& s);

/// For each order i present: phi(i) | m_i, i | |G(i)|, and m_i even when i > 2.
CheckReport totient_divisor_check(const OrderStats& s);

struct WeisnerCount {
  BigInt t;
  BigInt f;             // elements whose order is a multiple of t
  BigInt coprime_part;  // largest divisor of the total prime to t
  bool passed = false;  // f = 0 or coprime_part | f
};

WeisnerCount weisner_count(const OrderStats& s, const BigInt& t);

/// weisner_count over every divisor t > 1 of the total.
CheckReport weisner_check(const OrderStats& s);

struct PrimeGraph {
  std::vector<std::uint64_t> vertices;                          // ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // p < r, sorted
  /// Connected components; the one holding 2 (if any) first, the rest by
  /// smallest prime.
  std::vector<std::vector<std::uint64_t>> components;
  /// order_components[k] is the product of the full prime-power parts of
  /// the order over components[k].
  std::vector<BigInt> order_components;

  bool is_isolated(std::uint64_t p) const;
};

/// Vertices are the primes of order; {p, r} is an edge iff p*r is in spec.
/// Throws InconsistencyError if a spectrum member has a prime not dividing
/// order.
PrimeGraph prime_graph(const Spectrum& spec, const BigInt& order);

nlohmann::json to_json(const PrimeGraph& g);

}  // namespace szq
