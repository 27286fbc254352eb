#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "szq/gf2m.hpp"
#include "szq/matgrp.hpp"
#include "szq/numtheory.hpp"

namespace szq {

/// Numerical data of Sz(q), q = 2^(2m+1).
struct SuzukiParams {
  unsigned m = 0;
  std::uint64_t q = 0;
  std::uint64_t s = 0;   // 2^(m+1), the square root of 2q
  std::uint64_t u1 = 0;  // q + s + 1
  std::uint64_t u2 = 0;  // q - s + 1
  std::uint64_t v = 0;   // q - 1
  BigInt w_order;        // q^2
  BigInt group_order;    // q^2 (q^2 + 1)(q - 1)

  friend bool operator==(const SuzukiParams&, const SuzukiParams&) = default;
};

inline constexpr unsigned kMaxSuzukiM = 31;

/// Throws ParameterError unless 1 <= m <= kMaxSuzukiM. m = 0 (q = 2) is
/// rejected: Sz(2) is not simple.
SuzukiParams make_params(unsigned m);

/// m with q = 2^(2m+1), m >= 1; nullopt when q has no such form.
std::optional<unsigned> m_from_q(std::uint64_t q);

/// Maximal element orders {4, q-1, q+s+1, q-s+1}; every element order
/// divides one of them.
std::vector<std::uint64_t> order_hints(const SuzukiParams& p);

/// Numbers of conjugates of W, U1, U2 and V.
struct PartitionClassCounts {
  BigInt n_w;
  BigInt n_u1;
  BigInt n_u2;
  BigInt n_v;

  friend bool operator==(const PartitionClassCounts&, const PartitionClassCounts&) = default;
};

/// n_w = q^2 + 1, n_u1 = |S| / 4u1, n_u2 = |S| / 4u2, n_v = |S| / 2v.
PartitionClassCounts closed_form_subgroup_counts(const SuzukiParams& p);

/// Nontrivial elements covered by the conjugates, counted with multiplicity:
/// n_w (q^2 - 1) + n_u1 (u1 - 1) + n_u2 (u2 - 1) + n_v (v - 1).
BigInt partition_coverage(const SuzukiParams& p, const PartitionClassCounts& c);

/// The lower unitriangular matrix
///
///   [ 1                    0          0  0 ]
///   [ a                    1          0  0 ]
///   [ b                    pi(a)      1  0 ]
///   [ a^2 pi(a) + ab + pi(b)  a pi(a) + b  a  1 ]
///
/// These form the Sylow 2-subgroup W, with
/// w(a,b) w(c,d) = w(a+c, b+d+pi(a)c).
Mat4 make_w(const FieldPtr& field, FieldElement a, FieldElement b);

/// (a, b) when x equals make_w(a, b) entry for entry.
std::optional<std::pair<FieldElement, FieldElement>> as_w(const Mat4& x);

/// diag(l^(1+2^m), l^(2^m), l^(-2^m), l^(-1-2^m)).
Mat4 make_torus(const FieldPtr& field, FieldElement lambda);

/// Antidiagonal permutation matrix; an involution.
Mat4 make_tau(const FieldPtr& field);

enum class Certify {
  /// Generate the whole group: the closure must have exactly |Sz(q)|
  /// elements, all with orders dividing an order hint. Needs degree <= 8.
  kClosure,
  /// Cheap local checks only: invertibility, tau^2 = I, the torus
  /// normalizes W. Callers using this must certify the closure themselves.
  kStructural,
};

/// {w(1,0), w(0,1), d(lambda), tau} with lambda the field's primitive element.
/// Throws CertificationError when the requested certification fails.
std::vector<Mat4> standard_generators(const SuzukiParams& p, const FieldPtr& field,
                                      Certify level = Certify::kClosure);

}  // namespace szq
