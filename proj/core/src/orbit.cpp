#include "irredforge/orbit.hpp"

#include <numeric>
#include <unordered_map>

#include "irredforge/constructions.hpp"

namespace irredforge::orbit {

IterationTrace iterate_prime(const Poly& f, u64 k) {
  const auto& spec = f.field();
  if (!arith::is_prime(k)) throw PreconditionError("iterate_prime: k must be prime");
  if ((spec.size() - 1) % k != 0)
    throw PreconditionError("iterate_prime: k does not divide q-1");
  cons::detail::require_construction_input(f);

  auto n = static_cast<u32>(f.deg());
  auto qn = arith::checked_pow(spec.size(), n);
  if (!qn) throw PreconditionError("iterate_prime: q^n - 1 exceeds 64 bits");
  u32 w = arith::nu_p(k, *qn - 1);
  u64 zeta = (k == 2) ? spec.neg(spec.one()) : gf::root_of_unity_in(spec, k);

  IterationTrace trace;
  trace.prime = k;
  trace.w = w;
  std::unordered_map<poly::PolyKey, std::size_t, poly::PolyKeyHash> index;
  Poly cur = f;
  while (true) {
    auto key = poly::make_key(cur);
    auto it = index.find(key);
    if (it != index.end()) {
      trace.tail_length = it->second;
      trace.orbit_length = trace.polys.size() - it->second;
      break;
    }
    index.emplace(std::move(key), trace.polys.size());
    trace.polys.push_back(cur);
    if (trace.polys.size() > *qn)
      throw InternalError("iterate_prime: safety cap of q^n iterations exceeded");
    cur = cons::detail::prime_step_core(cur, k, zeta);
  }
  if (trace.tail_length > w)
    throw InternalError("iterate_prime: tail length exceeds nu_k(q^n - 1)");
  return trace;
}

OrderCandidates infer_order(const IterationTrace& trace) {
  if (trace.polys.empty()) throw PreconditionError("infer_order: empty trace");
  const auto& f0 = trace.polys.front();
  const auto& spec = f0.field();
  u64 q = spec.size();
  u64 k = trace.prime;
  auto n = static_cast<u32>(f0.deg());
  auto qn = arith::checked_pow(q, n);
  if (!qn) throw PreconditionError("infer_order: q^n - 1 exceeds 64 bits");
  u64 big = *qn - 1;
  u64 kfree = big;
  while (kfree % k == 0) kfree /= k;

  const auto& fl = trace.polys[trace.tail_length];
  u64 dl = fl.deg();
  u64 s = trace.orbit_length;
  u64 l = trace.tail_length;
  u64 kl = 1;
  for (std::size_t i = 0; i < l; ++i) kl *= k;

  OrderCandidates out;
  out.k_adic_valuation = l;
  for (u64 r : arith::divisors(arith::factorize(kfree))) {
    u64 o = arith::mult_order(k, r);
    if (o % s != 0) continue;
    u64 d = o / s;
    if (dl % d != 0) continue;
    u64 ks = arith::powmod(k, s, r);
    for (u64 j = 0; j < dl; ++j) {
      u64 qj = arith::powmod(q, j, r);
      if (arith::mult_order(qj, r) == d && ks == qj) {
        out.candidates.push_back({kl * r, r, d, j});
        break;
      }
    }
  }
  return out;
}

std::map<u64, u32> combine_valuations(const Poly& f, const std::vector<u64>& primes) {
  std::map<u64, u32> vals;
  for (u64 p : primes)
    vals[p] = static_cast<u32>(iterate_prime(f, p).tail_length);
  return vals;
}

}  // namespace irredforge::orbit
