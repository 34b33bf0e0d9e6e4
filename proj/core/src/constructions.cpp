#include "irredforge/constructions.hpp"

#include <numeric>

#include "irredforge/oracle.hpp"

namespace irredforge::cons {

namespace detail {

void require_construction_input(const Poly& f) {
  if (f.is_zero() || f.deg() < 1 || !f.is_monic())
    throw PreconditionError("construction: input must be monic of degree >= 1");
  if (f.is_x()) throw PreconditionError("construction: f = X is excluded");
  if (!poly::is_irreducible(f))
    throw PreconditionError("construction: input polynomial is reducible");
}

Poly prime_step_core(const Poly& f, u64 k, u64 zeta, bool* shortcut) {
  const auto& spec = f.field();
  u64 sg = poly::support_gcd(f);
  if (sg != 0 && sg % k == 0) {
    if (shortcut) *shortcut = true;
    std::vector<u64> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += k) out.push_back(f.coeffs()[i]);
    return Poly(spec, std::move(out));
  }
  if (shortcut) *shortcut = false;
  auto acc = Poly::constant(spec, spec.one());
  u64 c = spec.one();
  for (u64 j = 1; j <= k; ++j) {
    c = spec.mul(c, zeta);
    acc = poly::mul(acc, poly::scale_twist(f, c));
  }
  return poly::extract_composition(acc, k);
}

namespace {

u64 root_for(const gf::FieldSpec& spec, u64 k) {
  if (k == 1) return spec.one();
  if (k == 2) return spec.neg(spec.one());  // the unique element of order 2
  return gf::root_of_unity_in(spec, k);
}

Poly twisted_product_extract(const Poly& g, u64 kk, u64 zeta) {
  const auto& spec = g.field();
  auto acc = Poly::constant(spec, spec.one());
  u64 c = spec.one();
  for (u64 j = 1; j <= kk; ++j) {
    c = spec.mul(c, zeta);
    acc = poly::mul(acc, poly::scale_twist(g, c));
  }
  return poly::extract_composition(acc, kk);
}

}  // namespace

}  // namespace detail

Poly kk_step(const Poly& f) {
  const auto& spec = f.field();
  if (spec.characteristic() == 2)
    throw PreconditionError("kk_step: q must be odd");
  detail::require_construction_input(f);
  if (poly::composition_degree(f, 2) == 2)
    throw PreconditionError("kk_step: f is a composition in X^2, the product is reducible");
  return detail::prime_step_core(f, 2, spec.neg(spec.one()));
}

Poly prime_step(const Poly& f, u64 k) {
  const auto& spec = f.field();
  if (!arith::is_prime(k)) throw PreconditionError("prime_step: k must be prime");
  if ((spec.size() - 1) % k != 0)
    throw PreconditionError("prime_step: k does not divide q-1");
  detail::require_construction_input(f);
  u64 sg = poly::support_gcd(f);
  if (sg != 0 && sg % k == 0)
    return detail::prime_step_core(f, k, spec.one());
  return detail::prime_step_core(f, k, detail::root_for(spec, k));
}

namespace {

Poly cor8_step_impl(const Poly& f, u64 k, u64 zeta_k, bool have_zeta) {
  const auto& spec = f.field();
  if (k == 0 || (spec.size() - 1) % k != 0)
    throw PreconditionError("cor8_step: k does not divide q-1");
  cons::detail::require_construction_input(f);
  if (k == 1) return f;
  u64 t = poly::composition_degree(f, k);
  Poly g = (t > 1) ? poly::extract_composition(f, t) : f;
  u64 kt = k / t;
  if (kt == 1) return g;
  u64 zeta_kt = have_zeta ? spec.pow(zeta_k, t) : cons::detail::root_for(spec, kt);
  return cons::detail::twisted_product_extract(g, kt, zeta_kt);
}

Poly cor8_direct_impl(const Poly& f, u64 k, u64 zeta_k, bool have_zeta) {
  const auto& spec = f.field();
  if (k == 0 || (spec.size() - 1) % k != 0)
    throw PreconditionError("cor8_direct: k does not divide q-1");
  cons::detail::require_construction_input(f);
  if (k == 1) return f;
  u64 t = poly::composition_degree(f, k);
  if (!have_zeta) zeta_k = cons::detail::root_for(spec, k);
  auto acc = Poly::constant(spec, spec.one());
  u64 c = spec.one();
  for (u64 j = 1; j <= k / t; ++j) {
    c = spec.mul(c, zeta_k);
    acc = poly::mul(acc, poly::scale_twist(f, c));
  }
  return poly::extract_composition(acc, k);
}

}  // namespace

Poly cor8_step(const Poly& f, u64 k) {
  return cor8_step_impl(f, k, 0, false);
}

Poly cor8_step_with(const Poly& f, u64 k, u64 zeta_k) {
  return cor8_step_impl(f, k, zeta_k, true);
}

Poly cor8_direct(const Poly& f, u64 k) {
  return cor8_direct_impl(f, k, 0, false);
}

Poly cor8_direct_with(const Poly& f, u64 k, u64 zeta_k) {
  return cor8_direct_impl(f, k, zeta_k, true);
}

Poly frobenius_descent(const Poly& f, u64 d) {
  const auto& spec = f.field();
  detail::require_construction_input(f);
  if (d == 0) throw PreconditionError("frobenius_descent: d must be >= 1");
  u64 p = spec.characteristic();
  u64 dd = d;
  while (dd % p == 0) dd /= p;
  if (dd != 1)
    throw PreconditionError("frobenius_descent: d is not a power of the characteristic");
  if (d == 1) return f;
  auto coeffs = f.coeffs();
  for (auto& c : coeffs) c = spec.pow(c, d);
  return Poly(spec, std::move(coeffs));
}

ConstructionResult construct_general(const Poly& f, u64 k) {
  const auto& spec = f.field();
  detail::require_construction_input(f);
  if (k == 0) throw PreconditionError("construct_general: k must be >= 1");

  u64 p = spec.characteristic();
  u64 kp = k;
  u32 v = 0;
  while (kp % p == 0) {
    kp /= p;
    ++v;
  }
  auto fact = arith::factorize(kp);
  for (auto [ell, e] : fact.pairs) {
    (void)e;
    if ((spec.size() - 1) % ell != 0)
      throw PreconditionError("construct_general: prime " + std::to_string(ell) +
                              " divides neither q nor q-1");
  }

  ConstructionResult res;
  res.input_k = k;
  Poly cur = f;
  for (auto [ell, e] : fact.pairs) {
    u64 zeta = detail::root_for(spec, ell);
    for (u32 i = 0; i < e; ++i) {
      bool shortcut = false;
      cur = detail::prime_step_core(cur, ell, zeta, &shortcut);
      res.steps.push_back({ell, shortcut ? StepKind::composition_shortcut
                                         : StepKind::twisted_product});
    }
  }
  if (v > 0) {
    auto d = arith::checked_pow(p, v);
    if (!d) throw PreconditionError("construct_general: characteristic part overflows");
    auto coeffs = cur.coeffs();
    for (auto& c : coeffs) c = spec.pow(c, *d);
    cur = Poly(spec, std::move(coeffs));
    for (u32 i = 0; i < v; ++i) res.steps.push_back({p, StepKind::frobenius_power});
  }
  res.output = std::move(cur);
  return res;
}

Poly ad_construct(const Poly& f, u64 k) {
  detail::require_construction_input(f);
  if (k == 0) throw PreconditionError("ad_construct: k must be >= 1");
  u64 e = poly::poly_order(f);
  if (k > e) throw PreconditionError("ad_construct: k exceeds the order of f");
  if (k == 1) return f;

  const auto& spec = f.field();
  auto n = f.deg();
  auto chi_comp = oracle::daykin_product(f, k);
  auto chi = poly::extract_composition(chi_comp, k);

  u64 e2 = e / std::gcd(e, k);
  u64 q = spec.size();
  u64 m = 1;
  for (u64 cur = q % e2;; ++m) {
    if (cur == 1 % e2) break;
    cur = arith::mulmod(cur, q % e2, e2);
    if (m > n) throw InternalError("ad_construct: no degree m <= n satisfies the order law");
  }

  auto mp = oracle::min_poly_power(f, k);
  if (mp.deg() != m) throw InternalError("ad_construct: degree law violated");
  if (n % m != 0 || poly::poly_pow(mp, static_cast<u32>(n / m)) != chi)
    throw InternalError("ad_construct: chi is not the expected power of m_beta^k");
  return mp;
}

}  // namespace irredforge::cons
