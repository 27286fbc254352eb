#pragma once

// Brute-force reference computations used only by tests. None of these share
// code with the library paths they check.

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

namespace szq::ref {

/// Shift-and-add multiplication in GF(2)[x]/(modulus), reducing after every
/// shift.
inline std::uint64_t peasant_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus,
                                 unsigned degree) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < degree; ++i) {
    if ((b >> i) & 1) r ^= a;
    a <<= 1;
    if ((a >> degree) & 1) a ^= modulus;
  }
  return r;
}

/// a^k by k-fold repeated multiplication.
inline std::uint64_t naive_pow(std::uint64_t a, std::uint64_t k, std::uint64_t modulus,
                               unsigned degree) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = peasant_mul(r, a, modulus, degree);
  return r;
}

inline int degree_of(std::uint64_t p) {
  int d = -1;
  for (int i = 0; i < 64; ++i) {
    if ((p >> i) & 1) d = i;
  }
  return d;
}

/// Remainder of long division over GF(2).
inline std::uint64_t long_mod(std::uint64_t a, std::uint64_t b) {
  const int db = degree_of(b);
  for (int da = degree_of(a); da >= db; da = degree_of(a)) a ^= b << (da - db);
  return a;
}

/// Irreducible iff no polynomial of degree 1..deg/2 divides it.
inline bool trial_division_irreducible(std::uint64_t p) {
  const int d = degree_of(p);
  if (d < 1) return false;
  for (std::uint64_t f = 2; degree_of(f) <= d / 2; ++f) {
    if (long_mod(p, f) == 0) return false;
  }
  return true;
}

inline std::uint64_t brute_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++c;
  }
  return c;
}

inline std::vector<std::uint64_t> brute_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

/// Least d >= 1 with a^d = 1 mod n, by stepping.
inline std::uint64_t brute_order_mod(std::uint64_t a, std::uint64_t n) {
  std::uint64_t x = a % n;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (x == 1) return d;
    x = x * a % n;
  }
  return 0;
}

using RawMat = std::array<std::uint64_t, 16>;

/// Schoolbook 4x4 product with peasant_mul entries.
inline RawMat naive_mat_mul(const RawMat& a, const RawMat& b, std::uint64_t modulus,
                            unsigned degree) {
  RawMat c{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < 4; ++k) acc ^= peasant_mul(a[4 * i + k], b[4 * k + j], modulus, degree);
      c[4 * i + j] = acc;
    }
  }
  return c;
}

/// x -> x^(2^(m+1)) by m+1 peasant squarings.
inline std::uint64_t naive_twist(std::uint64_t x, unsigned m, std::uint64_t modulus) {
  for (unsigned i = 0; i <= m; ++i) x = peasant_mul(x, x, modulus, 2 * m + 1);
  return x;
}

/// Entries of w(a, b), written out from the matrix formula.
inline RawMat w_entries(std::uint64_t a, std::uint64_t b, unsigned m, std::uint64_t modulus) {
  const unsigned d = 2 * m + 1;
  auto mul = [&](std::uint64_t x, std::uint64_t y) { return peasant_mul(x, y, modulus, d); };
  const std::uint64_t pa = naive_twist(a, m, modulus);
  const std::uint64_t pb = naive_twist(b, m, modulus);
  return {1, 0, 0, 0,
          a, 1, 0, 0,
          b, pa, 1, 0,
          mul(mul(a, a), pa) ^ mul(a, b) ^ pb, mul(a, pa) ^ b, a, 1};
}

}  // namespace szq::ref
