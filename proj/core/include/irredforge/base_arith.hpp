#ifndef IRREDFORGE_BASE_ARITH_HPP
#define IRREDFORGE_BASE_ARITH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace irredforge::arith {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

/// Sorted multiset of (prime, exponent) pairs; product reconstructs the input.
struct Factorization {
  std::vector<std::pair<u64, u32>> pairs;

  u64 value() const;
  bool contains(u64 p) const;
  u32 exponent_of(u64 p) const;
  bool empty() const { return pairs.empty(); }
};

/// Trial division below 2^20, then Brent's rho with deterministic
/// primality certification. factorize(1) is the empty factorization.
Factorization factorize(u64 n);

/// Least e >= 1 with a^e = 1 (mod r); requires gcd(a, r) = 1.
/// Computed by reducing the Carmichael exponent of r, not by iteration.
u64 mult_order(u64 a, u64 r);

/// p-adic valuation of n (p prime, n >= 1).
u32 nu_p(u64 p, u64 n);

/// All divisors, ascending.
std::vector<u64> divisors(const Factorization& fact);

std::optional<u64> checked_mul(u64 a, u64 b);
std::optional<u64> checked_pow(u64 base, u32 exp);

}  // namespace irredforge::arith

#endif
