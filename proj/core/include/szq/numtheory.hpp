#pragma once

// Elementary number theory over machine words and exact big integers.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace szq {

using BigInt = boost::multiprecision::cpp_int;

template <typename Int>
struct PrimePower {
  Int prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower<std::uint64_t>> factorize(std::uint64_t n);
/// Trial division over a big integer. Cost grows with the second-largest
/// prime factor, which is small for every group order this library handles.
std::vector<PrimePower<BigInt>> factorize(const BigInt& n);

std::uint64_t euler_phi(std::uint64_t n);
/// All divisors of n, ascending. Requires n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<BigInt> divisors(const BigInt& n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t n);

/// Least d >= 1 with a^d = 1 (mod n). Requires n >= 2 and gcd(a, n) = 1;
/// throws ParameterError otherwise.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// The largest divisor of n sharing no prime with t.
BigInt coprime_part(BigInt n, const BigInt& t);

BigInt pow2(unsigned k);
/// Strict decimal parse (digits only, no sign). Throws InputError.
BigInt parse_decimal(std::string_view text);
std::string to_decimal(const BigInt& n);

}  // namespace szq
