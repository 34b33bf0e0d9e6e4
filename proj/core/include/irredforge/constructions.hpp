#ifndef IRREDFORGE_CONSTRUCTIONS_HPP
#define IRREDFORGE_CONSTRUCTIONS_HPP

#include <vector>

#include "irredforge/polyring.hpp"

namespace irredforge::cons {

using arith::u32;
using arith::u64;
using poly::Poly;

enum class StepKind { composition_shortcut, twisted_product, frobenius_power };

struct ConstructionStep {
  u64 prime;
  StepKind kind;
  bool shortcut_used() const { return kind == StepKind::composition_shortcut; }
};

/// Output of the recursive construction: a monic irreducible over the input's
/// field, plus the per-prime step record (step primes multiply to input_k).
struct ConstructionResult {
  Poly output;
  u64 input_k = 1;
  std::vector<ConstructionStep> steps;
};

/// m_{beta^2} for odd q via the squared-composition product; rejects inputs
/// of the form D(X^2).
Poly kk_step(const Poly& f);

/// m_{beta^k} for prime k | q-1: extraction shortcut when f = g(X^k),
/// otherwise the k-fold twisted product.
Poly prime_step(const Poly& f, u64 k);

/// m_{beta^k} for any k | q-1: extracts the composition part t first, then
/// runs the full (k/t)-fold product on the quotient.
Poly cor8_step(const Poly& f, u64 k);

/// The one-shot reading of the same identity: (k/t)-fold product of twists of
/// f itself, extracted through X^k. Must agree with cor8_step everywhere.
Poly cor8_direct(const Poly& f, u64 k);

/// Variants taking an explicit primitive k-th root of unity (canonical index),
/// for generator-independence checks.
Poly cor8_step_with(const Poly& f, u64 k, u64 zeta_k);
Poly cor8_direct_with(const Poly& f, u64 k, u64 zeta_k);

/// Coefficient-wise a_i -> a_i^d for d a power of the characteristic;
/// maps m_{beta^{k'}} to m_{beta^{k' d}}.
Poly frobenius_descent(const Poly& f, u64 d);

/// m_{beta^k} for any k whose prime factors divide q(q-1): prime steps in
/// ascending order with multiplicity, then the Frobenius part.
ConstructionResult construct_general(const Poly& f, u64 k);

/// The characteristic-polynomial route (product over F_{q^s}, then the
/// minimal factor); kept as a cross-check against construct_general.
Poly ad_construct(const Poly& f, u64 k);

namespace detail {

/// Unvalidated step for hot loops; zeta is a primitive k-th root of unity in
/// the polynomial's field and is only touched on the non-shortcut path.
Poly prime_step_core(const Poly& f, u64 k, u64 zeta, bool* shortcut = nullptr);

void require_construction_input(const Poly& f);

}  // namespace detail

}  // namespace irredforge::cons

#endif
