#pragma once

// Brute-force ground truth for small Suzuki groups: enumerate the group,
// take an element-order census, and check subgroup structure directly.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "szq/matgrp.hpp"
#include "szq/orderstats.hpp"
#include "szq/suzuki.hpp"

namespace szq {

/// A finite matrix group held in memory, sorted by canonical encoding.
class ElementTable {
 public:
  /// Deduplicates and sorts. Throws ParameterError on an empty input or
  /// mixed fields.
  static ElementTable from_elements(std::vector<Mat4> elements);

  std::size_t size() const { return elements_.size(); }
  const Mat4& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Mat4>& elements() const { return elements_; }
  const std::string& key(std::size_t i) const { return keys_[i]; }
  const FieldPtr& field() const { return elements_.front().field(); }

  std::optional<std::uint32_t> index_of(const Mat4& x) const;
  /// Like index_of but throws NotFoundError; used where closure is expected.
  std::uint32_t require_index(const Mat4& x) const;
  bool contains(const Mat4& x) const { return index_of(x).has_value(); }
  std::uint32_t identity_index() const { return identity_; }
  /// Index of the inverse of element i; throws NotFoundError if the table is
  /// not closed under inversion.
  std::uint32_t inverse_index(std::uint32_t i) const;

 private:
  std::vector<Mat4> elements_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::uint32_t> index_;
  mutable std::vector<std::uint32_t> inverse_;  // filled on first use
  std::uint32_t identity_ = 0;
};

/// A subgroup of an ElementTable, as sorted table indices.
struct SubgroupHandle {
  std::vector<std::uint32_t> members;
  std::optional<Mat4> cyclic_generator;

  std::size_t order() const { return members.size(); }
  bool contains(std::uint32_t index) const;
};

/// Breadth-first closure from the identity. Throws LimitExceededError.
ElementTable enumerate_group(std::span<const Mat4> generators, std::uint64_t limit);

/// Census of element orders. With a nonempty spectrum hint only its members
/// are tried (ascending); an element matching none raises OrderNotFoundError.
/// With an empty hint, orders are found by iteration up to the table size.
OrderStats empirical_order_stats(const ElementTable& table, const Spectrum& spec_hint);

/// Census without materializing the group: closure over packed keys with
/// orders taken on the fly. Field degree must be <= 8.
OrderStats streaming_order_stats(std::span<const Mat4> generators, const Spectrum& spec_hint,
                                 std::uint64_t limit);

/// Exact order of one element, found from the spectrum candidates.
std::uint64_t order_in(const Mat4& x, const Spectrum& spec_hint);

/// Cyclic subgroup generated by the first element (in encoding order) of
/// order exactly k. Throws NotFoundError.
SubgroupHandle find_cyclic_subgroup(const ElementTable& table, std::uint64_t k);

/// Members of table that are in the given list; throws NotFoundError if one
/// is missing.
SubgroupHandle subgroup_of(const ElementTable& table, std::span<const Mat4> members);

/// All products of members stay in the subgroup and inverses are present.
bool is_subgroup(const ElementTable& table, const SubgroupHandle& h);

/// {g : g H g^-1 = H}.
SubgroupHandle normalizer(const ElementTable& table, const SubgroupHandle& h);

/// {g : g x = x g}.
SubgroupHandle centralizer(const ElementTable& table, const Mat4& x);

/// The subgroup {w(a, b)} of the table's field.
SubgroupHandle w_subgroup(const ElementTable& table);

struct ClassReport {
  std::string name;                 // "W", "U1", "U2" or "V"
  std::uint64_t subgroup_order = 0;
  std::uint64_t conjugates = 0;     // distinct conjugate subgroups found
  std::uint64_t expected_conjugates = 0;
  std::uint64_t normalizer_order = 0;  // stabilizer of the representative
};

struct PartitionReport {
  std::vector<ClassReport> classes;  // W, U1, U2, V
  std::uint64_t nontrivial_elements = 0;
  std::uint64_t covered_once = 0;
  std::uint64_t covered_multiply = 0;
  std::uint64_t uncovered = 0;
  /// Sum over elements x != 1 of C(k_x, 2), where k_x counts the conjugates
  /// holding x. Zero iff every two distinct conjugates meet trivially.
  std::uint64_t intersection_incidences = 0;
  /// Nontrivial elements whose order does not match the family of the
  /// conjugate holding them (2-elements in W, divisors of u1 in U1, ...).
  std::uint64_t misassigned = 0;
  bool passed = false;
};

/// Conjugates every member of a representative of each of W, U1, U2, V by
/// every group element, deduplicates conjugate subgroups exactly, and tallies
/// how often each nontrivial element is covered.
PartitionReport verify_partition(const ElementTable& table, const SuzukiParams& p);

nlohmann::json to_json(const PartitionReport& r);

}  // namespace szq
