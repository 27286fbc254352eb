#include "szq/orderstats.hpp"

#include <algorithm>
#include <numeric>

#include "szq/error.hpp"

namespace szq {

BigInt OrderStats::count(std::uint64_t order) const {
  const auto it = counts.find(order);
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt OrderStats::sum() const {
  BigInt total_count = 0;
  for (const auto& [i, c] : counts) total_count += c;
  return total_count;
}

std::set<BigInt> OrderStats::nse() const {
  std::set<BigInt> out;
  for (const auto& [i, c] : counts) {
    if (c != 0) out.insert(c);
  }
  return out;
}

std::vector<std::string> invariant_violations(const OrderStats& s) {
  std::vector<std::string> out;
  if (s.sum() != s.total) {
    out.push_back("counts sum to " + to_decimal(s.sum()) + ", total is " + to_decimal(s.total));
  }
  if (s.count(1) != 1) out.push_back("m_1 = " + to_decimal(s.count(1)) + ", expected 1");
  for (const auto& [i, c] : s.counts) {
    if (i > 2 && c % 2 != 0) {
      out.push_back("m_" + std::to_string(i) + " = " + to_decimal(c) + " is odd");
    }
  }
  return out;
}

std::vector<std::string> diff(const OrderStats& a, const OrderStats& b) {
  std::vector<std::string> out;
  if (a.total != b.total) {
    out.push_back("total: " + to_decimal(a.total) + " != " + to_decimal(b.total));
  }
  std::set<std::uint64_t> keys;
  for (const auto& [i, c] : a.counts) keys.insert(i);
  for (const auto& [i, c] : b.counts) keys.insert(i);
  for (std::uint64_t i : keys) {
    const auto ia = a.counts.find(i);
    const auto ib = b.counts.find(i);
    const std::string va = ia == a.counts.end() ? "absent" : to_decimal(ia->second);
    const std::string vb = ib == b.counts.end() ? "absent" : to_decimal(ib->second);
    if (va != vb) out.push_back("m_" + std::to_string(i) + ": " + va + " != " + vb);
  }
  return out;
}

nlohmann::json to_json(const OrderStats& s) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [i, c] : s.counts) counts[std::to_string(i)] = to_decimal(c);
  return {{"total", to_decimal(s.total)}, {"counts", std::move(counts)}};
}

namespace {

BigInt json_integer(const nlohmann::json& v, const std::string& what) {
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return BigInt(v.get<std::int64_t>());
  throw InputError(what + ": expected a non-negative decimal string");
}

std::uint64_t parse_order_key(const std::string& key) {
  const BigInt k = parse_decimal(key);
  if (k == 0 || k > std::numeric_limits<std::uint64_t>::max()) {
    throw InputError("element order '" + key + "' out of range");
  }
  return static_cast<std::uint64_t>(k);
}

}  // namespace

OrderStats order_stats_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("total") || !j.contains("counts") ||
      !j.at("counts").is_object()) {
    throw InputError("order stats: expected {\"total\": ..., \"counts\": {...}}");
  }
  OrderStats s;
  s.total = json_integer(j.at("total"), "total");
  for (const auto& [key, value] : j.at("counts").items()) {
    s.counts[parse_order_key(key)] = json_integer(value, "count of order " + key);
  }
  return s;
}

bool Spectrum::divisor_closed() const {
  for (std::uint64_t i : orders) {
    for (std::uint64_t d : divisors(i)) {
      if (!contains(d)) return false;
    }
  }
  return true;
}

Spectrum Spectrum::closure_of(const std::set<std::uint64_t>& generators) {
  Spectrum out;
  for (std::uint64_t i : generators) {
    for (std::uint64_t d : divisors(i)) out.orders.insert(d);
  }
  return out;
}

Spectrum Spectrum::of(const OrderStats& s) {
  Spectrum out;
  for (const auto& [i, c] : s.counts) {
    if (c != 0) out.orders.insert(i);
  }
  return out;
}

Spectrum spectrum_closed_form(const SuzukiParams& p) {
  return Spectrum::closure_of({4, p.v, p.u1, p.u2});
}

OrderStats nse_closed_form(const SuzukiParams& p) {
  const BigInt q = p.q;
  const BigInt q2 = q * q;
  OrderStats s;
  s.total = p.group_order;
  s.counts[1] = 1;
  s.counts[2] = (q - 1) * (q2 + 1);
  s.counts[4] = q * (q - 1) * (q2 + 1);

  auto add_class = [&](std::uint64_t cyclic_order, const BigInt& conjugates) {
    for (std::uint64_t i : divisors(cyclic_order)) {
      if (i == 1) continue;
      if (!s.counts.emplace(i, BigInt(euler_phi(i)) * conjugates).second) {
        throw AssertionError("nse_closed_form: order " + std::to_string(i) +
                             " arises from two cyclic classes");
      }
    }
  };
  // Conjugates of a cyclic class: |S| / |N(H)|.
  add_class(p.u1, q2 * p.u2 * (q - 1) / 4);
  add_class(p.u2, q2 * p.u1 * (q - 1) / 4);
  add_class(p.v, q2 * (q2 + 1) / 2);

  if (s.sum() != s.total) {
    throw AssertionError("nse_closed_form: counts sum to " + to_decimal(s.sum()) +
                         ", expected " + to_decimal(s.total));
  }
  return s;
}

BigInt type_function(const OrderStats& s, const BigInt& n) {
  BigInt acc = 0;
  for (const auto& [j, c] : s.counts) {
    if (n % j == 0) acc += c;
  }
  return acc;
}

nlohmann::json to_json(const CheckReport& r) {
  return {{"name", r.name},
          {"passed", r.passed},
          {"cases", r.cases},
          {"violations", r.violations}};
}

CheckReport frobenius_check(const OrderStats& s) {
  CheckReport r;
  r.name = "frobenius";
  if (s.total <= 0) {
    r.fail("total must be positive");
    return r;
  }
  for (const BigInt& n : divisors(s.total)) {
    ++r.cases;
    const BigInt g = type_function(s, n);
    if (g % n != 0) {
      r.fail("n = " + to_decimal(n) + " does not divide |G(n)| = " + to_decimal(g));
    }
  }
  return r;
}

CheckReport totient_divisor_check(const OrderStats& s) {
  CheckReport r;
  r.name = "totient_divisor";
  for (const auto& [i, c] : s.counts) {
    if (c == 0) continue;
    ++r.cases;
    const std::uint64_t phi = euler_phi(i);
    if (c % phi != 0) {
      r.fail("phi(" + std::to_string(i) + ") = " + std::to_string(phi) + " does not divide m_" +
             std::to_string(i) + " = " + to_decimal(c));
    }
    const BigInt g = type_function(s, i);
    if (g % i != 0) {
      r.fail(std::to_string(i) + " does not divide |G(" + std::to_string(i) +
             ")| = " + to_decimal(g));
    }
    if (i > 2 && c % 2 != 0) {
      r.fail("m_" + std::to_string(i) + " = " + to_decimal(c) + " is odd");
    }
  }
  return r;
}

WeisnerCount weisner_count(const OrderStats& s, const BigInt& t) {
  if (t <= 0) throw ParameterError("weisner_count: t must be positive");
  if (s.total <= 0) throw ParameterError("weisner_count: total must be positive");
  WeisnerCount w;
  w.t = t;
  w.f = 0;
  for (const auto& [i, c] : s.counts) {
    if (i % t == 0) w.f += c;
  }
  w.coprime_part = coprime_part(s.total, t);
  w.passed = w.f == 0 || w.f % w.coprime_part == 0;
  return w;
}

CheckReport weisner_check(const OrderStats& s) {
  CheckReport r;
  r.name = "weisner";
  if (s.total <= 0) {
    r.fail("total must be positive");
    return r;
  }
  for (const BigInt& t : divisors(s.total)) {
    if (t == 1) continue;
    ++r.cases;
    const WeisnerCount w = weisner_count(s, t);
    if (!w.passed) {
      r.fail("t = " + to_decimal(t) + ": f(t) = " + to_decimal(w.f) +
             " is not a multiple of " + to_decimal(w.coprime_part));
    }
  }
  return r;
}

bool PrimeGraph::is_isolated(std::uint64_t p) const {
  return std::none_of(edges.begin(), edges.end(),
                      [p](const auto& e) { return e.first == p || e.second == p; });
}

PrimeGraph prime_graph(const Spectrum& spec, const BigInt& order) {
  if (order <= 0) throw ParameterError("prime_graph: order must be positive");
  PrimeGraph g;
  std::map<std::uint64_t, BigInt> prime_part;
  for (const auto& [p, e] : factorize(order)) {
    if (p > std::numeric_limits<std::uint64_t>::max()) {
      throw ParameterError("prime_graph: prime factor " + to_decimal(p) + " exceeds 64 bits");
    }
    const auto pw = static_cast<std::uint64_t>(p);
    g.vertices.push_back(pw);
    BigInt part = 1;
    for (unsigned k = 0; k < e; ++k) part *= p;
    prime_part[pw] = part;
  }
  for (std::uint64_t i : spec.orders) {
    for (const auto& [p, e] : factorize(i)) {
      if (!prime_part.count(p)) {
        throw InconsistencyError("prime_graph: spectrum member " + std::to_string(i) +
                                 " has prime " + std::to_string(p) + " not dividing the order");
      }
    }
  }

  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const BigInt product = BigInt(g.vertices[a]) * g.vertices[b];
      if (product > std::numeric_limits<std::uint64_t>::max()) continue;
      if (!spec.contains(static_cast<std::uint64_t>(product))) continue;
      g.edges.emplace_back(g.vertices[a], g.vertices[b]);
      parent[find(a)] = find(b);
    }
  }

  std::map<std::size_t, std::vector<std::uint64_t>> groups;
  for (std::size_t a = 0; a < n; ++a) groups[find(a)].push_back(g.vertices[a]);
  for (auto& [root, members] : groups) g.components.push_back(std::move(members));
  std::sort(g.components.begin(), g.components.end(), [](const auto& x, const auto& y) {
    const bool x_even = x.front() == 2;
    const bool y_even = y.front() == 2;
    if (x_even != y_even) return x_even;
    return x.front() < y.front();
  });
  for (const auto& comp : g.components) {
    BigInt nc = 1;
    for (std::uint64_t p : comp) nc *= prime_part.at(p);
    g.order_components.push_back(nc);
  }
  return g;
}

nlohmann::json to_json(const PrimeGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [p, r] : g.edges) edges.push_back({p, r});
  nlohmann::json oc = nlohmann::json::array();
  for (const auto& n : g.order_components) oc.push_back(to_decimal(n));
  return {{"vertices", g.vertices},
          {"edges", edges},
          {"components", g.components},
          {"order_components", oc}};
}

}  // namespace szq
