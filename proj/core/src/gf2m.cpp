#include "szq/gf2m.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "szq/error.hpp"
#include "szq/numtheory.hpp"

namespace szq {

int poly_degree(Poly p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

Poly poly_mul(Poly a, Poly b) {
  Poly r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, Poly modulus) {
  const int dm = poly_degree(modulus);
  if (dm < 0) throw DivisionByZeroError("poly_mod: zero modulus");
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= modulus << (d - dm);
  return a;
}

Poly poly_mulmod(Poly a, Poly b, Poly modulus) {
  return poly_mod(poly_mul(poly_mod(a, modulus), poly_mod(b, modulus)), modulus);
}

Poly poly_gcd(Poly a, Poly b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

namespace {

// x^(2^k) mod p by k squarings.
Poly x_pow_2k(unsigned k, Poly p) {
  Poly r = poly_mod(0b10, p);
  for (unsigned i = 0; i < k; ++i) r = poly_mulmod(r, r, p);
  return r;
}

}  // namespace

bool is_irreducible(Poly p) {
  const int n = poly_degree(p);
  if (n < 1 || n > 31) return false;
  if (n == 1) return true;
  if (x_pow_2k(static_cast<unsigned>(n), p) != poly_mod(0b10, p)) return false;
  for (const auto& [r, e] : factorize(static_cast<std::uint64_t>(n))) {
    const Poly h = x_pow_2k(static_cast<unsigned>(n / r), p) ^ 0b10;
    if (poly_gcd(p, h) != 1) return false;
  }
  return true;
}

Poly find_modulus(unsigned m) {
  if (m == 0 || m > Field::kMaxM) {
    throw ParameterError("find_modulus: m must be in [1, " + std::to_string(Field::kMaxM) + "]");
  }
  const unsigned degree = 2 * m + 1;
  const Poly lo = Poly{1} << degree;
  // Constant term must be 1 or x divides the candidate.
  for (Poly p = lo | 1; p < (lo << 1); p += 2) {
    if (is_irreducible(p)) return p;
  }
  throw AssertionError("find_modulus: no irreducible polynomial found");
}

std::string poly_to_string(Poly p) {
  if (p == 0) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = poly_degree(p); d >= 0; --d) {
    if (!((p >> d) & 1)) continue;
    if (!first) out << " + ";
    first = false;
    if (d == 0) {
      out << "1";
    } else if (d == 1) {
      out << "x";
    } else {
      out << "x^" << d;
    }
  }
  return out.str();
}

std::string poly_to_hex(Poly p) {
  std::ostringstream out;
  out << "0x" << std::hex << p;
  return out.str();
}

std::optional<Poly> parse_poly_hex(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
  }
  if (text.empty() || text.size() > 16) return std::nullopt;
  Poly value = 0;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isxdigit(u)) return std::nullopt;
    const int digit = std::isdigit(u) ? c - '0' : std::tolower(u) - 'a' + 10;
    value = (value << 4) | static_cast<Poly>(digit);
  }
  return value;
}

// ---- free functions over tagged elements ----------------------------------

namespace {

void require_same_field(FieldElement a, FieldElement b, const char* op) {
  if (a.modulus() != b.modulus()) {
    throw ParameterError(std::string(op) + ": operands from different fields (" +
                         poly_to_hex(a.modulus()) + " vs " + poly_to_hex(b.modulus()) + ")");
  }
}

std::uint64_t field_order(Poly modulus) { return std::uint64_t{1} << poly_degree(modulus); }

}  // namespace

FieldElement add(FieldElement a, FieldElement b) {
  require_same_field(a, b, "add");
  return FieldElement(a.bits() ^ b.bits(), a.modulus());
}

FieldElement mul(FieldElement a, FieldElement b) {
  require_same_field(a, b, "mul");
  return FieldElement(static_cast<std::uint32_t>(poly_mulmod(a.bits(), b.bits(), a.modulus())),
                      a.modulus());
}

FieldElement pow(FieldElement a, std::uint64_t k) {
  Poly result = 1;
  Poly base = a.bits();
  while (k) {
    if (k & 1) result = poly_mulmod(result, base, a.modulus());
    base = poly_mulmod(base, base, a.modulus());
    k >>= 1;
  }
  return FieldElement(static_cast<std::uint32_t>(result), a.modulus());
}

FieldElement inv(FieldElement a) {
  if (a.is_zero()) throw DivisionByZeroError("inv: zero has no inverse");
  return pow(a, field_order(a.modulus()) - 2);
}

FieldElement frobenius_twist(FieldElement a) {
  const unsigned m = static_cast<unsigned>(poly_degree(a.modulus()) - 1) / 2;
  Poly r = a.bits();
  for (unsigned i = 0; i <= m; ++i) r = poly_mulmod(r, r, a.modulus());
  return FieldElement(static_cast<std::uint32_t>(r), a.modulus());
}

// ---- Field -----------------------------------------------------------------

std::shared_ptr<const Field> Field::create(unsigned m) { return create(m, find_modulus(m)); }

std::shared_ptr<const Field> Field::create(unsigned m, Poly modulus) {
  if (m == 0 || m > kMaxM) {
    throw ParameterError("field: m must be in [1, " + std::to_string(kMaxM) + "]");
  }
  if (poly_degree(modulus) != static_cast<int>(2 * m + 1)) {
    throw ParameterError("field: modulus " + poly_to_string(modulus) + " does not have degree " +
                         std::to_string(2 * m + 1));
  }
  if (!is_irreducible(modulus)) {
    throw ParameterError("field: modulus " + poly_to_string(modulus) + " is reducible");
  }
  return std::shared_ptr<const Field>(new Field(m, modulus));
}

std::shared_ptr<const Field> Field::from_modulus(Poly modulus) {
  const int d = poly_degree(modulus);
  if (d < 3 || d % 2 == 0) {
    throw ParameterError("field: modulus degree must be odd and at least 3, got " +
                         std::to_string(d));
  }
  return create(static_cast<unsigned>(d - 1) / 2, modulus);
}

Field::Field(unsigned m, Poly modulus) : m_(m), modulus_(modulus) {
  const std::uint64_t group = order() - 1;
  const auto primes = factorize(group);
  for (Raw g = 2; g < order(); ++g) {
    bool generates = true;
    for (const auto& [p, e] : primes) {
      if (pow(FieldElement(g, modulus_), group / p).bits() == 1) {
        generates = false;
        break;
      }
    }
    if (generates) {
      primitive_ = g;
      break;
    }
  }
  if (primitive_ == 0) throw AssertionError("field: no primitive element found");
  if (degree() <= kMaxTableDegree) build_tables();
}

void Field::build_tables() {
  const std::uint64_t q = order();
  log_.assign(q, 0);
  exp_.assign(2 * (q - 1), 0);
  Poly x = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    exp_[i] = exp_[i + q - 1] = static_cast<Raw>(x);
    log_[x] = static_cast<Raw>(i);
    x = poly_mulmod(x, primitive_, modulus_);
  }
  tables_ = true;
  twist_.assign(q, 0);
  for (std::uint64_t a = 0; a < q; ++a) {
    twist_[a] = frobenius_twist(FieldElement(static_cast<Raw>(a), modulus_)).bits();
  }
}

FieldElement Field::element(Raw bits) const {
  if (static_cast<std::uint64_t>(bits) >= order()) {
    throw ParameterError("field: bits " + poly_to_hex(bits) + " exceed degree " +
                         std::to_string(degree() - 1));
  }
  return FieldElement(bits, modulus_);
}

Field::Raw Field::inv_raw(Raw a) const {
  if (a == 0) throw DivisionByZeroError("inv: zero has no inverse");
  if (tables_) return exp_[(order() - 1 - log_[a]) % (order() - 1)];
  return pow_raw(a, order() - 2);
}

Field::Raw Field::pow_raw(Raw a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  if (tables_) return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % (order() - 1))) % (order() - 1)];
  return pow(FieldElement(a, modulus_), k).bits();
}

}  // namespace szq
