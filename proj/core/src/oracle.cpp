#include "szq/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "szq/error.hpp"

namespace szq {

ElementTable ElementTable::from_elements(std::vector<Mat4> elements) {
  if (elements.empty()) throw ParameterError("ElementTable: no elements");
  const FieldPtr field = elements.front().field();
  std::vector<std::pair<std::string, std::size_t>> order;
  order.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].field()->same_as(*field)) {
      throw ParameterError("ElementTable: elements over different fields");
    }
    order.emplace_back(encode(elements[i]), i);
  }
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              order.end());

  ElementTable t;
  t.elements_.reserve(order.size());
  t.keys_.reserve(order.size());
  t.index_.reserve(order.size());
  for (auto& [key, i] : order) {
    const auto idx = static_cast<std::uint32_t>(t.elements_.size());
    t.elements_.push_back(elements[i]);
    t.index_.emplace(key, idx);
    t.keys_.push_back(std::move(key));
  }
  const auto id = t.index_of(Mat4::identity(field));
  t.identity_ = id ? *id : 0;
  return t;
}

std::optional<std::uint32_t> ElementTable::index_of(const Mat4& x) const {
  const auto it = index_.find(encode(x));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ElementTable::require_index(const Mat4& x) const {
  const auto i = index_of(x);
  if (!i) throw NotFoundError("ElementTable: element not in table (table not closed?)");
  return *i;
}

std::uint32_t ElementTable::inverse_index(std::uint32_t i) const {
  if (inverse_.empty()) {
    inverse_.resize(size());
    for (std::size_t k = 0; k < size(); ++k) inverse_[k] = require_index(mat_inv(elements_[k]));
  }
  return inverse_.at(i);
}

bool SubgroupHandle::contains(std::uint32_t index) const {
  return std::binary_search(members.begin(), members.end(), index);
}

ElementTable enumerate_group(std::span<const Mat4> generators, std::uint64_t limit) {
  std::vector<Mat4> elements;
  for_each_in_closure(generators, limit, [&](const Mat4& x) { elements.push_back(x); });
  return ElementTable::from_elements(std::move(elements));
}

std::uint64_t order_in(const Mat4& x, const Spectrum& spec_hint) {
  // A divisor-closed spectrum lists every candidate order already.
  const std::vector<std::uint64_t> candidates(spec_hint.orders.begin(), spec_hint.orders.end());
  return element_order_from_candidates(x, candidates);
}

namespace {

OrderStats to_stats(const std::map<std::uint64_t, std::uint64_t>& tally, std::uint64_t total) {
  OrderStats s;
  s.total = total;
  for (const auto& [i, c] : tally) s.counts[i] = c;
  return s;
}

}  // namespace

OrderStats empirical_order_stats(const ElementTable& table, const Spectrum& spec_hint) {
  const std::vector<std::uint64_t> candidates(spec_hint.orders.begin(), spec_hint.orders.end());
  std::map<std::uint64_t, std::uint64_t> tally;
  for (const Mat4& x : table.elements()) {
    const std::uint64_t k = candidates.empty() ? element_order(x, {}, table.size())
                                               : element_order_from_candidates(x, candidates);
    ++tally[k];
  }
  return to_stats(tally, table.size());
}

OrderStats streaming_order_stats(std::span<const Mat4> generators, const Spectrum& spec_hint,
                                 std::uint64_t limit) {
  const std::vector<std::uint64_t> candidates(spec_hint.orders.begin(), spec_hint.orders.end());
  if (candidates.empty()) throw ParameterError("streaming_order_stats: spectrum hint required");
  std::map<std::uint64_t, std::uint64_t> tally;
  const std::uint64_t size = closure_size_packed(generators, limit, [&](const Mat4& x) {
    ++tally[element_order_from_candidates(x, candidates)];
  });
  return to_stats(tally, size);
}

SubgroupHandle find_cyclic_subgroup(const ElementTable& table, std::uint64_t k) {
  if (k == 0) throw ParameterError("find_cyclic_subgroup: k must be positive");
  const auto primes = factorize(k);
  for (const Mat4& x : table.elements()) {
    if (!mat_pow(x, k).is_identity()) continue;
    const bool exact = std::all_of(primes.begin(), primes.end(), [&](const auto& pp) {
      return !mat_pow(x, k / pp.prime).is_identity();
    });
    if (!exact) continue;
    SubgroupHandle h;
    h.cyclic_generator = x;
    Mat4 y = Mat4::identity(table.field());
    for (std::uint64_t i = 0; i < k; ++i) {
      h.members.push_back(table.require_index(y));
      y = mat_mul(y, x);
    }
    std::sort(h.members.begin(), h.members.end());
    return h;
  }
  throw NotFoundError("find_cyclic_subgroup: no element of order " + std::to_string(k));
}

SubgroupHandle subgroup_of(const ElementTable& table, std::span<const Mat4> members) {
  SubgroupHandle h;
  for (const Mat4& x : members) h.members.push_back(table.require_index(x));
  std::sort(h.members.begin(), h.members.end());
  h.members.erase(std::unique(h.members.begin(), h.members.end()), h.members.end());
  return h;
}

bool is_subgroup(const ElementTable& table, const SubgroupHandle& h) {
  if (!h.contains(table.identity_index())) return false;
  for (std::uint32_t a : h.members) {
    if (!h.contains(table.inverse_index(a))) return false;
    for (std::uint32_t b : h.members) {
      const auto c = table.index_of(mat_mul(table[a], table[b]));
      if (!c || !h.contains(*c)) return false;
    }
  }
  return true;
}

SubgroupHandle normalizer(const ElementTable& table, const SubgroupHandle& h) {
  SubgroupHandle n;
  for (std::uint32_t g = 0; g < table.size(); ++g) {
    const Mat4& gm = table[g];
    const Mat4& gi = table[table.inverse_index(g)];
    const bool stabilizes = std::all_of(h.members.begin(), h.members.end(), [&](std::uint32_t x) {
      const auto c = table.index_of(conjugate(gm, table[x], gi));
      return c && h.contains(*c);
    });
    if (stabilizes) n.members.push_back(g);
  }
  return n;
}

SubgroupHandle centralizer(const ElementTable& table, const Mat4& x) {
  SubgroupHandle c;
  for (std::uint32_t g = 0; g < table.size(); ++g) {
    if (mat_mul(table[g], x) == mat_mul(x, table[g])) c.members.push_back(g);
  }
  return c;
}

SubgroupHandle w_subgroup(const ElementTable& table) {
  const FieldPtr& f = table.field();
  std::vector<Mat4> members;
  for (std::uint64_t a = 0; a < f->order(); ++a) {
    for (std::uint64_t b = 0; b < f->order(); ++b) {
      members.push_back(make_w(f, f->element(static_cast<Field::Raw>(a)),
                               f->element(static_cast<Field::Raw>(b))));
    }
  }
  return subgroup_of(table, members);
}

namespace {

struct IndexSetHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

enum class Family : std::uint8_t { kNone, kW, kU1, kU2, kV };

bool order_fits(Family f, std::uint64_t order, const SuzukiParams& p) {
  switch (f) {
    case Family::kW: return order == 2 || order == 4;
    case Family::kU1: return p.u1 % order == 0;
    case Family::kU2: return p.u2 % order == 0;
    case Family::kV: return p.v % order == 0;
    case Family::kNone: break;
  }
  return false;
}

}  // namespace

PartitionReport verify_partition(const ElementTable& table, const SuzukiParams& p) {
  const PartitionClassCounts expected = closed_form_subgroup_counts(p);
  const Spectrum spec = spectrum_closed_form(p);

  struct Rep {
    const char* name;
    Family family;
    SubgroupHandle h;
    const BigInt& expected;
  };
  std::vector<Rep> reps{
      {"W", Family::kW, w_subgroup(table), expected.n_w},
      {"U1", Family::kU1, find_cyclic_subgroup(table, p.u1), expected.n_u1},
      {"U2", Family::kU2, find_cyclic_subgroup(table, p.u2), expected.n_u2},
      {"V", Family::kV, find_cyclic_subgroup(table, p.v), expected.n_v},
  };

  PartitionReport report;
  std::vector<std::uint32_t> cover(table.size(), 0);
  std::vector<Family> owner(table.size(), Family::kNone);
  const std::uint32_t id = table.identity_index();

  for (const Rep& rep : reps) {
    std::unordered_set<std::vector<std::uint32_t>, IndexSetHash> conjugates;
    std::uint64_t stabilizer = 0;
    std::vector<std::uint32_t> image(rep.h.order());
    for (std::uint32_t g = 0; g < table.size(); ++g) {
      const Mat4& gm = table[g];
      const Mat4& gi = table[table.inverse_index(g)];
      for (std::size_t k = 0; k < rep.h.order(); ++k) {
        image[k] = table.require_index(conjugate(gm, table[rep.h.members[k]], gi));
      }
      std::sort(image.begin(), image.end());
      if (image == rep.h.members) ++stabilizer;
      conjugates.insert(image);
    }
    for (const auto& c : conjugates) {
      for (std::uint32_t x : c) {
        if (x == id) continue;
        ++cover[x];
        owner[x] = rep.family;
      }
    }
    ClassReport cr;
    cr.name = rep.name;
    cr.subgroup_order = rep.h.order();
    cr.conjugates = conjugates.size();
    cr.expected_conjugates = static_cast<std::uint64_t>(rep.expected);
    cr.normalizer_order = stabilizer;
    report.classes.push_back(cr);
  }

  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (x == id) continue;
    ++report.nontrivial_elements;
    const std::uint64_t k = cover[x];
    if (k == 0) ++report.uncovered;
    if (k == 1) ++report.covered_once;
    if (k > 1) ++report.covered_multiply;
    report.intersection_incidences += k * (k - 1) / 2;
    if (k >= 1 && !order_fits(owner[x], order_in(table[x], spec), p)) ++report.misassigned;
  }

  const bool counts_ok = std::all_of(report.classes.begin(), report.classes.end(),
                                     [](const ClassReport& c) {
                                       return c.conjugates == c.expected_conjugates;
                                     });
  report.passed = counts_ok && report.uncovered == 0 && report.covered_multiply == 0 &&
                  report.intersection_incidences == 0 && report.misassigned == 0 &&
                  report.covered_once + 1 == table.size();
  return report;
}

nlohmann::json to_json(const PartitionReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"name", c.name},
                       {"subgroup_order", c.subgroup_order},
                       {"conjugates", c.conjugates},
                       {"expected_conjugates", c.expected_conjugates},
                       {"normalizer_order", c.normalizer_order}});
  }
  return {{"classes", classes},
          {"nontrivial_elements", r.nontrivial_elements},
          {"covered_once", r.covered_once},
          {"covered_multiply", r.covered_multiply},
          {"uncovered", r.uncovered},
          {"intersection_incidences", r.intersection_incidences},
          {"misassigned", r.misassigned},
          {"passed", r.passed}};
}

}  // namespace szq
