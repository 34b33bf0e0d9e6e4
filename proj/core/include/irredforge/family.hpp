#ifndef IRREDFORGE_FAMILY_HPP
#define IRREDFORGE_FAMILY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "irredforge/polyring.hpp"

namespace irredforge::family {

using arith::u32;
using arith::u64;
using poly::Poly;
using poly::PolyKey;

struct FamilyOptions {
  std::optional<std::vector<u32>> caps;  // per outer prime; default v_j + s_j
  unsigned threads = 0;                  // 0 = hardware concurrency
  bool normality = true;
};

struct OrbitSummary {
  std::vector<std::pair<u64, u32>> start_exponents;  // (prime, exponent)
  u64 start_k_mod_e = 0;
  u64 order = 0;
  std::size_t size = 0;
  std::size_t first_member_index = 0;  // members[first, first+size) is the orbit
  PolyKey representative;
};

struct SinglePrimeTrace {
  u64 prime;
  u32 tail_length;
  u64 orbit_length;
};

/// Deduplicated constructed set with per-orbit grouping and statistics.
/// members is in discovery order; member_orders/member_weights/
/// member_normality are parallel arrays (normality only when requested).
struct FamilyReport {
  Poly base_poly;
  u64 order_e = 0;
  std::vector<u64> primes;
  std::vector<u32> caps_used;
  std::vector<SinglePrimeTrace> prime_traces;
  std::vector<PolyKey> members;
  std::vector<u64> member_orders;
  std::vector<u32> member_weights;
  std::vector<u32> member_normality;
  std::vector<OrbitSummary> orbits;
  std::map<u32, u64> weight_hist;
  std::map<u64, u64> order_hist;
  std::map<std::pair<u32, u32>, u64> normality_hist;

  const gf::FieldSpec& field() const { return base_poly.field(); }
};

/// Walks every exponent tuple within the caps, iterating the largest prime
/// of q-1 to closure, with duplicate branches stopped at first contact.
/// Branch enumeration is serial; the per-member normality pass fans out over
/// `threads` workers with a fixed partition, so the report is deterministic.
FamilyReport enumerate_family(const Poly& f, const FamilyOptions& options = {});

/// The constructed polynomials for exponents k in A with 1 < k < ord(f):
/// the products of primes of q-1 reachable without wrapping modulo the order.
std::vector<Poly> enumerate_restricted(const Poly& f);

std::map<u32, u64> weight_distribution(const FamilyReport& report);
std::map<std::pair<u32, u32>, u64> normality_distribution(const FamilyReport& report);

/// deg gcd(g_alpha, X^n - 1) over F_{q^n} for alpha a root of f;
/// 0 means the conjugates of alpha form a normal basis.
u32 k_normality(const Poly& f);

namespace detail {
u32 k_normality_core(const Poly& f);  // skips input validation
}

}  // namespace irredforge::family

#endif
