#pragma once

// Arithmetic in GF(2^(2m+1)) using a polynomial basis.
//
// Two paths are provided. The free functions on FieldElement reduce
// carry-less products against the element's own modulus and need no tables;
// Field's raw kernels use log/antilog tables (for degree <= 20) and are what
// the matrix code runs on. Tests pin the two against each other.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace szq {

/// Bit-polynomial over GF(2); bit i is the coefficient of x^i.
using Poly = std::uint64_t;

/// Degree of p, or -1 for the zero polynomial.
int poly_degree(Poly p);
/// Carry-less product; the caller guarantees deg(a) + deg(b) < 64.
Poly poly_mul(Poly a, Poly b);
Poly poly_mod(Poly a, Poly modulus);
Poly poly_mulmod(Poly a, Poly b, Poly modulus);
Poly poly_gcd(Poly a, Poly b);

/// Rabin's test: x^(2^n) = x mod p and gcd(x^(2^(n/r)) - x, p) = 1 for
/// every prime r dividing n = deg(p).
bool is_irreducible(Poly p);

/// Smallest irreducible polynomial of degree 2m+1, comparing polynomials by
/// their integer value.
Poly find_modulus(unsigned m);

/// Human form such as "x^3 + x + 1".
std::string poly_to_string(Poly p);
/// Hex form such as "0xb".
std::string poly_to_hex(Poly p);
/// Accepts "0xb", "0XB" or "b". Returns nullopt on malformed input.
std::optional<Poly> parse_poly_hex(std::string_view text);

/// An element of GF(2^(2m+1)), tagged with the modulus of its field so that
/// mixing fields is detected.
class FieldElement {
 public:
  std::uint32_t bits() const { return bits_; }
  Poly modulus() const { return modulus_; }
  bool is_zero() const { return bits_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class Field;
  friend FieldElement add(FieldElement, FieldElement);
  friend FieldElement mul(FieldElement, FieldElement);
  friend FieldElement inv(FieldElement);
  friend FieldElement pow(FieldElement, std::uint64_t);
  friend FieldElement frobenius_twist(FieldElement);
  FieldElement(std::uint32_t bits, Poly modulus) : bits_(bits), modulus_(modulus) {}

  std::uint32_t bits_;
  Poly modulus_;
};

/// Throws ParameterError when a and b live in different fields.
FieldElement add(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
/// Computed as a^(q-2). Throws DivisionByZeroError for a = 0.
FieldElement inv(FieldElement a);
/// pow(a, 0) is 1, including for a = 0.
FieldElement pow(FieldElement a, std::uint64_t k);
/// The Suzuki automorphism x -> x^(2^(m+1)); applying it twice squares.
FieldElement frobenius_twist(FieldElement a);

inline FieldElement operator+(FieldElement a, FieldElement b) { return add(a, b); }
inline FieldElement operator*(FieldElement a, FieldElement b) { return mul(a, b); }

/// Field parameters plus fast kernels over raw bit patterns.
class Field {
 public:
  using Raw = std::uint32_t;

  static constexpr unsigned kMaxM = 15;  // degree 31 fits a Raw
  static constexpr unsigned kMaxTableDegree = 20;

  /// GF(2^(2m+1)) with find_modulus(m).
  static std::shared_ptr<const Field> create(unsigned m);
  /// GF(2^(2m+1)) with an explicit modulus; validates degree and irreducibility.
  static std::shared_ptr<const Field> create(unsigned m, Poly modulus);
  /// Infers m from the modulus degree, which must be odd and >= 3.
  static std::shared_ptr<const Field> from_modulus(Poly modulus);

  unsigned m() const { return m_; }
  unsigned degree() const { return 2 * m_ + 1; }
  Poly modulus() const { return modulus_; }
  std::uint64_t order() const { return std::uint64_t{1} << degree(); }
  std::uint64_t twist_exponent() const { return std::uint64_t{1} << (m_ + 1); }
  /// Bytes per element in the canonical little-endian encoding.
  std::size_t element_bytes() const { return (degree() + 7) / 8; }

  bool same_as(const Field& other) const { return modulus_ == other.modulus_; }
  bool contains(FieldElement a) const { return a.modulus() == modulus_; }

  /// Throws ParameterError when bits has a coefficient at or above x^(2m+1).
  FieldElement element(Raw bits) const;
  FieldElement zero() const { return FieldElement(0, modulus_); }
  FieldElement one() const { return FieldElement(1, modulus_); }
  /// Smallest element (by bit value) of multiplicative order q - 1.
  FieldElement primitive_element() const { return FieldElement(primitive_, modulus_); }

  Raw add_raw(Raw a, Raw b) const { return a ^ b; }
  Raw mul_raw(Raw a, Raw b) const {
    if (a == 0 || b == 0) return 0;
    if (!tables_) return static_cast<Raw>(poly_mulmod(a, b, modulus_));
    return exp_[log_[a] + log_[b]];
  }
  Raw inv_raw(Raw a) const;
  Raw pow_raw(Raw a, std::uint64_t k) const;
  Raw twist_raw(Raw a) const {
    if (tables_) return twist_[a];
    return pow_raw(a, twist_exponent());
  }

 private:
  Field(unsigned m, Poly modulus);
  void build_tables();

  unsigned m_;
  Poly modulus_;
  Raw primitive_ = 0;
  bool tables_ = false;
  std::vector<Raw> log_;    // indexed by element; log_[0] unused
  std::vector<Raw> exp_;    // length 2(q-1), so log sums need no reduction
  std::vector<Raw> twist_;  // indexed by element
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace szq
