#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exactmath/intpoly.hpp"

namespace bv::exactmath {

struct PrimePower
{
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(PrimePower const &, PrimePower const &) = default;
};

/// Prime factorization with strictly increasing primes.
struct Factorization
{
  std::vector<PrimePower> prime_powers;

  BigInt value() const;
};

// Deterministic for n < 2^64; 64 seeded Miller-Rabin rounds above.
bool is_prime(BigInt const &n);
bool is_prime_u64(std::uint64_t n);

Factorization factorize(BigInt const &n);
Factorization factorize_u64(std::uint64_t n);

BigInt euler_phi(BigInt const &n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
BigInt gcd(BigInt a, BigInt b);

/// Sorted positive divisors.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// (p, k) with n = p^k, k >= 1, or nothing.
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t n);

} // namespace bv::exactmath
