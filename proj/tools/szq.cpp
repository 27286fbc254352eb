// szq: compute, verify and gate Suzuki group data from the command line.
//
// Exit codes: 0 success or ACCEPT, 1 REJECT, 2 usage or malformed input,
// 3 refused because of scale, 4 certification or verification failure.

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "szq/error.hpp"
#include "szq/gate.hpp"
#include "szq/oracle.hpp"
#include "szq/orderstats.hpp"
#include "szq/suzuki.hpp"

namespace {

using nlohmann::json;
using namespace szq;

enum Exit : int {
  kOk = 0,
  kReject = 1,
  kUsage = 2,
  kRefused = 3,
  kFailed = 4,
};

// Groups above this size are enumerated only with --allow-big.
constexpr std::uint64_t kDeskScale = std::uint64_t{1} << 20;
constexpr std::uint64_t kDefaultOracleLimit = std::uint64_t{1} << 25;

struct RefusedError : Error {
  using Error::Error;
};

struct Config {
  std::optional<unsigned> m;
  std::optional<std::uint64_t> q;
  std::string modulus;
  std::string source = "closed-form";
  std::string level = "full";
  bool allow_big = false;
  std::uint64_t oracle_limit = kDefaultOracleLimit;
  std::string output = "json";
  bool no_timestamp = false;
  std::string profile_path;
};

unsigned resolve_m(const Config& c) {
  if (c.m) {
    if (*c.m < 1 || *c.m > kMaxSuzukiM) {
      throw InputError("--m must be in 1.." + std::to_string(kMaxSuzukiM));
    }
    return *c.m;
  }
  if (c.q) {
    const auto m = m_from_q(*c.q);
    if (!m) throw InputError("--q must be 2^(2m+1) with m >= 1, got " + std::to_string(*c.q));
    return *m;
  }
  throw InputError("one of --m or --q is required");
}

FieldPtr make_field(const Config& c, unsigned m) {
  if (m > Field::kMaxM) {
    throw RefusedError("field arithmetic supports m <= " + std::to_string(Field::kMaxM));
  }
  if (c.modulus.empty()) return Field::create(m);
  const auto poly = parse_poly_hex(c.modulus);
  if (!poly) throw InputError("--modulus: not a hexadecimal polynomial: " + c.modulus);
  return Field::create(m, *poly);
}

json header(const std::string& command, const SuzukiParams& p) {
  return {{"command", command}, {"m", p.m}, {"q", p.q}};
}

// Decides how the oracle may run: "table" enumerates into memory,
// "stream" counts over packed keys. Throws RefusedError.
std::string oracle_mode(const Config& c, const SuzukiParams& p) {
  const std::string size = to_decimal(p.group_order);
  if (p.group_order > c.oracle_limit) {
    throw RefusedError("oracle refused: |Sz(" + std::to_string(p.q) + ")| = " + size +
                       " exceeds the oracle limit " + std::to_string(c.oracle_limit) +
                       " (raise --oracle-limit to override)");
  }
  if (p.group_order <= kDeskScale) return "table";
  if (!c.allow_big) {
    throw RefusedError("oracle refused: |Sz(" + std::to_string(p.q) + ")| = " + size +
                       " needs --allow-big");
  }
  if (2 * p.m + 1 > 8) {
    throw RefusedError("oracle refused: streaming census needs field degree <= 8");
  }
  return "stream";
}

json check_json(const std::string& name, bool passed, const std::string& detail) {
  return {{"name", name}, {"passed", passed}, {"detail", detail}};
}

json check_json(const GateCheck& c) { return check_json(c.name, c.passed, c.detail); }

json check_json(const CheckReport& r) {
  std::string detail = std::to_string(r.cases) + " cases";
  if (!r.violations.empty()) detail += "; first violation: " + r.violations.front();
  return check_json(r.name, r.passed, detail);
}

json nse_set_json(const OrderStats& s) {
  json out = json::array();
  for (const auto& v : s.nse()) out.push_back(to_decimal(v));
  return out;
}

// Census of W = {w(a, b)} under the given field.
OrderStats w_census(const FieldPtr& f) {
  std::vector<Mat4> members;
  members.reserve(static_cast<std::size_t>(f->order() * f->order()));
  for (std::uint64_t a = 0; a < f->order(); ++a) {
    for (std::uint64_t b = 0; b < f->order(); ++b) {
      members.push_back(make_w(f, f->element(static_cast<Field::Raw>(a)),
                               f->element(static_cast<Field::Raw>(b))));
    }
  }
  const std::vector<std::uint64_t> hints{4};
  std::map<std::uint64_t, BigInt> tally;
  for (const Mat4& x : members) tally[element_order(x, hints)] += 1;
  OrderStats s;
  s.total = members.size();
  s.counts = std::move(tally);
  return s;
}

OrderStats oracle_census(const SuzukiParams& p, const FieldPtr& f, const std::string& mode) {
  const Spectrum spec = spectrum_closed_form(p);
  const auto limit = static_cast<std::uint64_t>(p.group_order);
  if (mode == "table") {
    return empirical_order_stats(enumerate_group(standard_generators(p, f), limit), spec);
  }
  const auto gens = standard_generators(p, f, Certify::kStructural);
  OrderStats s = streaming_order_stats(gens, spec, limit);
  if (s.total != p.group_order) {
    throw CertificationError("closure has " + to_decimal(s.total) + " elements, expected " +
                             to_decimal(p.group_order));
  }
  return s;
}

int cmd_params(const Config& c, json& out) {
  const SuzukiParams p = make_params(resolve_m(c));
  out = header("params", p);
  out["s"] = p.s;
  out["u1"] = p.u1;
  out["u2"] = p.u2;
  out["v"] = p.v;
  out["w_order"] = to_decimal(p.w_order);
  out["group_order"] = to_decimal(p.group_order);
  return kOk;
}

int cmd_nse(const Config& c, json& out) {
  const SuzukiParams p = make_params(resolve_m(c));
  out = header("nse", p);
  out["source"] = c.source;
  const OrderStats closed = nse_closed_form(p);
  if (c.source == "closed-form") {
    out["stats"] = to_json(closed);
    out["nse_set"] = nse_set_json(closed);
    return kOk;
  }
  const std::string mode = oracle_mode(c, p);
  const FieldPtr f = make_field(c, p.m);
  out["modulus"] = poly_to_hex(f->modulus());
  const OrderStats oracle = oracle_census(p, f, mode);
  if (c.source == "oracle") {
    out["stats"] = to_json(oracle);
    out["nse_set"] = nse_set_json(oracle);
    return kOk;
  }
  const auto d = diff(closed, oracle);
  out["stats"] = to_json(closed);
  out["oracle_stats"] = to_json(oracle);
  out["nse_set"] = nse_set_json(closed);
  out["diff"] = d;
  return d.empty() ? kOk : kFailed;
}

void add_gate_certificates(json& checks, unsigned m) {
  checks.push_back(check_json(isolation_certificate(m)));
  checks.push_back(check_json(frobenius_exclusion(m)));
  checks.push_back(check_json(two_frobenius_exclusion(m)));
  checks.push_back(check_json(simple_section_check(m)));
}

void add_lemma_checks(json& checks, const OrderStats& s) {
  checks.push_back(check_json(frobenius_check(s)));
  checks.push_back(check_json(totient_divisor_check(s)));
  checks.push_back(check_json(weisner_check(s)));
}

void add_w_census(json& out, json& checks, const Config& c, const SuzukiParams& p) {
  if (p.w_order > c.oracle_limit || p.m > Field::kMaxM) {
    checks.push_back(check_json("w_census", true, "skipped: q^2 exceeds the oracle limit"));
    return;
  }
  const FieldPtr f = make_field(c, p.m);
  const OrderStats w = w_census(f);
  const BigInt q = p.q;
  const bool ok = w.total == p.w_order && w.count(1) == 1 && w.count(2) == q - 1 &&
                  w.count(4) == q * q - q && w.counts.size() == 3;
  out["modulus"] = poly_to_hex(f->modulus());
  out["w_census"] = to_json(w);
  checks.push_back(check_json("w_census", ok,
                              ok ? "W has q-1 involutions, q^2-q elements of order 4, exponent 4"
                                 : "unexpected W census"));
}

int cmd_verify(const Config& c, json& out) {
  const SuzukiParams p = make_params(resolve_m(c));
  out = header("verify", p);
  out["level"] = c.level;
  json checks = json::array();
  const OrderStats closed = nse_closed_form(p);

  if (c.level == "closed-form") {
    const BigInt q = p.q;
    checks.push_back(check_json("sum_identity", closed.sum() == p.group_order,
                                "sum of m_i = " + to_decimal(closed.sum())));
    checks.push_back(check_json("type_at_4", type_function(closed, 4) == q * q * q * q,
                                "|G(4)| = " + to_decimal(type_function(closed, 4))));
    add_lemma_checks(checks, closed);
    add_gate_certificates(checks, p.m);
    add_w_census(out, checks, c, p);
    out["stats"] = to_json(closed);
  } else {
    const std::string mode = oracle_mode(c, p);
    const FieldPtr f = make_field(c, p.m);
    out["modulus"] = poly_to_hex(f->modulus());
    const Spectrum spec = spectrum_closed_form(p);
    OrderStats census;
    std::optional<ElementTable> table;
    if (mode == "table") {
      table = enumerate_group(standard_generators(p, f), static_cast<std::uint64_t>(p.group_order));
      census = empirical_order_stats(*table, spec);
    } else {
      census = oracle_census(p, f, mode);
    }
    checks.push_back(check_json("generators", true,
                                "closure has " + to_decimal(census.total) + " elements"));
    const auto d = diff(census, closed);
    checks.push_back(check_json("census_matches_closed_form", d.empty(),
                                d.empty() ? "census equals the closed form" : d.front()));
    checks.push_back(check_json("spectrum", Spectrum::of(census) == spec,
                                "element orders match the closed-form spectrum"));
    add_lemma_checks(checks, census);

    if (table) {
      const PartitionReport pr = verify_partition(*table, p);
      out["partition"] = to_json(pr);
      checks.push_back(check_json("partition", pr.passed,
                                  std::to_string(pr.covered_once) + " elements covered once, " +
                                      std::to_string(pr.intersection_incidences) +
                                      " intersection incidences"));

      const auto nw = normalizer(*table, w_subgroup(*table));
      bool idx_ok = table->size() / nw.order() == p.w_order + 1;
      std::string idx = "|S:N(W)| = " + std::to_string(table->size() / nw.order());
      bool cent_ok = true;
      for (const auto& [k, want] : {std::pair{p.u1, 4u}, std::pair{p.u2, 4u}, std::pair{p.v, 2u}}) {
        const auto h = find_cyclic_subgroup(*table, k);
        const auto n = normalizer(*table, h);
        idx_ok = idx_ok && n.order() == want * h.order();
        idx += ", |N:<" + std::to_string(k) + ">| = " + std::to_string(n.order() / h.order());
        if (k != p.v) cent_ok = cent_ok && centralizer(*table, *h.cyclic_generator).members == h.members;
      }
      checks.push_back(check_json("normalizer_indices", idx_ok, idx));
      checks.push_back(check_json("centralizers", cent_ok,
                                  "C(x) = <x> for x generating U1 and U2"));
    } else {
      checks.push_back(check_json("partition", true, "skipped: streaming census holds no table"));
    }
    add_gate_certificates(checks, p.m);
    add_w_census(out, checks, c, p);
    out["stats"] = to_json(census);
  }

  bool all = true;
  for (const auto& ch : checks) all = all && ch.at("passed").get<bool>();
  out["checks"] = checks;
  out["passed"] = all;
  return all ? kOk : kFailed;
}

int cmd_gate(const Config& c, json& out) {
  std::string text;
  if (c.profile_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(c.profile_path);
    if (!in) throw InputError("cannot read profile " + c.profile_path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("profile is not valid JSON: ") + e.what());
  }
  const GateReport r = run_gate(profile_from_json(j));
  out = to_json(r);
  out["command"] = "gate";
  return r.verdict == Verdict::kAccept ? kOk : kReject;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Keys in display order: numeric keys (element orders) ascend by value.
std::vector<std::string> ordered_keys(const json& j) {
  std::vector<std::string> keys;
  for (const auto& [key, v] : j.items()) keys.push_back(key);
  const bool numeric = std::all_of(keys.begin(), keys.end(), [](const std::string& k) {
    return !k.empty() && std::all_of(k.begin(), k.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  });
  if (numeric) {
    std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  }
  return keys;
}

void render_table(const json& j, std::ostream& os, const std::string& indent = "") {
  for (const std::string& key : ordered_keys(j)) {
    const json& v = j.at(key);
    if (v.is_object()) {
      os << indent << key << ":\n";
      render_table(v, os, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object() && v.front().contains("name")) {
      os << indent << key << ":\n";
      for (const auto& row : v) {
        if (row.contains("passed")) {
          os << indent << "  " << (row.at("passed").get<bool>() ? "[PASS] " : "[FAIL] ")
             << scalar(row.at("name"));
          if (row.contains("detail")) os << "  " << scalar(row.at("detail"));
          os << "\n";
        } else {
          os << indent << "  " << scalar(row.at("name")) << "\n";
          json rest = row;
          rest.erase("name");
          render_table(rest, os, indent + "    ");
        }
      }
    } else if (v.is_array()) {
      os << indent << key << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
      os << "\n";
    } else {
      os << indent << key << ": " << scalar(v) << "\n";
    }
  }
}

void emit(const Config& c, json out) {
  if (!c.no_timestamp) out["generated_at"] = utc_now();
  if (c.output == "table") {
    render_table(out, std::cout);
  } else {
    std::cout << out.dump(2) << "\n";
  }
}

void add_group_options(CLI::App* sub, Config& c) {
  auto* m = sub->add_option("--m", c.m, "Suzuki parameter m >= 1, q = 2^(2m+1)");
  auto* q = sub->add_option("--q", c.q, "field size q = 2^(2m+1)");
  m->excludes(q);
  q->excludes(m);
}

void add_output_options(CLI::App* sub, Config& c) {
  sub->add_option("--output", c.output, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  sub->add_flag("--no-timestamp", c.no_timestamp, "omit generated_at");
}

void add_oracle_options(CLI::App* sub, Config& c) {
  sub->add_option("--modulus", c.modulus, "field modulus as hex bits, e.g. 0xb for x^3+x+1");
  sub->add_flag("--allow-big", c.allow_big, "permit enumerating groups above 2^20 elements");
  sub->add_option("--oracle-limit", c.oracle_limit, "largest group the oracle may enumerate")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Suzuki groups Sz(q): parameters, element-order statistics, verification, gate"};
  app.require_subcommand(1);
  Config c;

  auto* params = app.add_subcommand("params", "print q, s, u1, u2, v and the group order");
  add_group_options(params, c);
  add_output_options(params, c);

  auto* nse = app.add_subcommand("nse", "element-order counts");
  add_group_options(nse, c);
  add_oracle_options(nse, c);
  add_output_options(nse, c);
  nse->add_option("--source", c.source, "closed-form, oracle, or both (prints a diff)")
      ->check(CLI::IsMember({"closed-form", "oracle", "both"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_group_options(verify, c);
  add_oracle_options(verify, c);
  add_output_options(verify, c);
  verify->add_option("--level", c.level, "closed-form, or full (enumerates the group)")
      ->check(CLI::IsMember({"closed-form", "full"}))
      ->capture_default_str();

  auto* gate = app.add_subcommand("gate", "decide an (order, nse) profile");
  gate->add_option("profile", c.profile_path, "profile JSON file, or - for stdin")->required();
  add_output_options(gate, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  int code = kOk;
  json out;
  try {
    if (*params) code = cmd_params(c, out);
    if (*nse) code = cmd_nse(c, out);
    if (*verify) code = cmd_verify(c, out);
    if (*gate) code = cmd_gate(c, out);
  } catch (const RefusedError& e) {
    std::cerr << "szq: " << e.what() << "\n";
    return kRefused;
  } catch (const InputError& e) {
    std::cerr << "szq: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "szq: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "szq: " << e.what() << "\n";
    return kFailed;
  }
  emit(c, out);
  return code;
}
