#ifndef IRREDFORGE_ORBIT_HPP
#define IRREDFORGE_ORBIT_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "irredforge/polyring.hpp"

namespace irredforge::orbit {

using arith::u32;
using arith::u64;
using poly::Poly;

/// Iterated prime-step sequence f_0, f_1, ... up to its first repetition:
/// polys holds the tail (f_0..f_{l-1}) followed by the orbit (f_l..f_{l+s-1}).
struct IterationTrace {
  u64 prime = 0;
  std::vector<Poly> polys;
  std::size_t tail_length = 0;
  std::size_t orbit_length = 0;
  u32 w = 0;  // nu_prime(q^n - 1) for the initial degree n
};

IterationTrace iterate_prime(const Poly& f, u64 k);

/// A candidate order k^l * r with its witness pair (d, j).
struct OrderCandidate {
  u64 order;
  u64 r;
  u64 d;
  u64 j;
};

struct OrderCandidates {
  std::size_t k_adic_valuation = 0;
  std::vector<OrderCandidate> candidates;  // ascending by order
};

/// Enumerates divisors r of (q^n-1)/k^w and keeps those passing
/// (I) gcd(k,r)=1, (II) s = ord_r(k)/d with d | deg(f_l),
/// (III) ord_r(q^j) = d and k^s = q^j (mod r) for some 0 <= j < deg(f_l).
OrderCandidates infer_order(const IterationTrace& trace);

/// prime -> tail length of its iteration, which equals the prime-adic
/// valuation of ord(f).
std::map<u64, u32> combine_valuations(const Poly& f, const std::vector<u64>& primes);

}  // namespace irredforge::orbit

#endif
