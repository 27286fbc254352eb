#include "szq/numtheory.hpp"

#include <algorithm>
#include <cctype>

#include "szq/error.hpp"

namespace szq {

std::vector<PrimePower<std::uint64_t>> factorize(std::uint64_t n) {
  std::vector<PrimePower<std::uint64_t>> out;
  if (n < 2) return out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t p = 3; p <= n / p; p += 2) strip(p);
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<PrimePower<BigInt>> factorize(const BigInt& value) {
  std::vector<PrimePower<BigInt>> out;
  BigInt n = value;
  if (n < 2) return out;
  constexpr std::uint64_t kWord = ~std::uint64_t{0};
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({BigInt(p), e});
  };
  strip(2);
  for (std::uint64_t p = 3; BigInt(p) * p <= n; p += 2) {
    if (n <= kWord) {
      for (const auto& pp : factorize(static_cast<std::uint64_t>(n))) {
        out.push_back({BigInt(pp.prime), pp.exponent});
      }
      n = 1;
      break;
    }
    strip(p);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

namespace {

template <typename Int>
std::vector<Int> expand_divisors(const std::vector<PrimePower<Int>>& factors) {
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw ParameterError("divisors: n must be positive");
  return expand_divisors(factorize(n));
}

std::vector<BigInt> divisors(const BigInt& n) {
  if (n <= 0) throw ParameterError("divisors: n must be positive");
  return expand_divisors(factorize(n));
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  __extension__ using Wide = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  a %= n;
  while (k) {
    if (k & 1) result = mulmod(result, a, n);
    a = mulmod(a, a, n);
    k >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n < 2) throw ParameterError("multiplicative_order: modulus must be at least 2");
  if (gcd(a % n, n) != 1) {
    throw ParameterError("multiplicative_order: base is not a unit modulo n");
  }
  // Carmichael's lambda(n) is a multiple of the order; strip primes from it.
  std::uint64_t lambda = 1;
  for (const auto& [p, e] : factorize(n)) {
    std::uint64_t pk = 1;
    for (unsigned i = 1; i < e; ++i) pk *= p;
    std::uint64_t lp = pk * (p - 1);
    if (p == 2 && e >= 3) lp /= 2;
    lambda = lcm(lambda, lp);
  }
  std::uint64_t order = lambda;
  for (const auto& [p, e] : factorize(lambda)) {
    for (unsigned i = 0; i < e && order % p == 0; ++i) {
      if (powmod(a, order / p, n) != 1) break;
      order /= p;
    }
  }
  return order;
}

BigInt coprime_part(BigInt n, const BigInt& t) {
  if (n <= 0) throw ParameterError("coprime_part: n must be positive");
  BigInt g = boost::multiprecision::gcd(n, t);
  while (g > 1) {
    while (n % g == 0) n /= g;
    g = boost::multiprecision::gcd(n, g);
  }
  return n;
}

BigInt pow2(unsigned k) {
  BigInt r = 1;
  r <<= k;
  return r;
}

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw InputError("expected a decimal integer, got an empty string");
  BigInt value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("expected a decimal integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

std::string to_decimal(const BigInt& n) { return n.str(); }

}  // namespace szq
