#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "szq/gf2m.hpp"

namespace szq {

/// 4x4 matrix over a binary field. Entries are stored as raw bit patterns
/// row-major; the shared Field gives them meaning.
class Mat4 {
 public:
  using Raw = Field::Raw;
  static constexpr std::size_t kDim = 4;

  static Mat4 identity(FieldPtr field);
  static Mat4 zero(FieldPtr field);
  /// Entries given row-major as raw bits; each must lie in the field.
  static Mat4 from_raw(FieldPtr field, const std::array<Raw, 16>& entries);

  const FieldPtr& field() const { return field_; }
  FieldElement at(std::size_t row, std::size_t col) const {
    return field_->element(entries_[row * kDim + col]);
  }
  /// Throws ParameterError when value belongs to another field.
  void set(std::size_t row, std::size_t col, FieldElement value);

  Raw raw(std::size_t row, std::size_t col) const { return entries_[row * kDim + col]; }
  const std::array<Raw, 16>& raw_entries() const { return entries_; }

  bool is_identity() const;

  /// Entry-wise equality; matrices over different fields compare unequal.
  friend bool operator==(const Mat4& a, const Mat4& b) {
    return a.entries_ == b.entries_ && a.field_->same_as(*b.field_);
  }

 private:
  Mat4(FieldPtr field, const std::array<Raw, 16>& entries)
      : field_(std::move(field)), entries_(entries) {}

  FieldPtr field_;
  std::array<Raw, 16> entries_{};
};

/// Throws ParameterError if the factors are over different fields.
Mat4 mat_mul(const Mat4& a, const Mat4& b);
/// Gauss-Jordan elimination. Throws SingularMatrixError.
Mat4 mat_inv(const Mat4& a);
Mat4 mat_pow(const Mat4& a, std::uint64_t k);
/// g * a * g^-1, with g_inv supplied by the caller.
Mat4 conjugate(const Mat4& g, const Mat4& a, const Mat4& g_inv);

/// Canonical byte encoding: entries row-major, each as element_bytes()
/// little-endian bytes of its bit-polynomial.
std::string encode(const Mat4& a);
/// Inverse of encode. Throws ParameterError on wrong length or an entry
/// outside the field.
Mat4 decode(std::string_view bytes, FieldPtr field);

/// Default iteration bound for element_order without hints.
inline constexpr std::uint64_t kDefaultOrderBound = 1u << 20;

/// Least k >= 1 with a^k = I.
///
/// With hints, divisors of the hinted values are tried in increasing order
/// and the first d with a^d = I is returned; the hints must include a
/// multiple of the true order. Without hints the matrix is multiplied
/// repeatedly up to bound. Throws OrderNotFoundError when neither succeeds.
std::uint64_t element_order(const Mat4& a, std::span<const std::uint64_t> hints,
                            std::uint64_t bound = kDefaultOrderBound);

/// Ascending union of the divisors of every hint value.
std::vector<std::uint64_t> hint_divisors(std::span<const std::uint64_t> hints);

/// Divisor-ordered order test with precomputed candidates (see hint_divisors).
std::uint64_t element_order_from_candidates(const Mat4& a,
                                            std::span<const std::uint64_t> candidates);

/// Breadth-first closure of the group generated by gens, visiting each
/// element once (the identity first). Elements are deduplicated by encode().
/// Throws LimitExceededError once more than limit elements are seen.
/// Returns the number of elements.
std::uint64_t for_each_in_closure(std::span<const Mat4> gens, std::uint64_t limit,
                                  const std::function<void(const Mat4&)>& visit);

/// Closure size only, using a packed 128-bit key per element; requires
/// field degree <= 8. Memory is about 32 bytes per element.
std::uint64_t closure_size_packed(std::span<const Mat4> gens, std::uint64_t limit,
                                  const std::function<void(const Mat4&)>& visit = {});

}  // namespace szq
