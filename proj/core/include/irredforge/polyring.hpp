#ifndef IRREDFORGE_POLYRING_HPP
#define IRREDFORGE_POLYRING_HPP

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "irredforge/base_arith.hpp"
#include "irredforge/errors.hpp"
#include "irredforge/gf.hpp"

namespace irredforge::poly {

using arith::u32;
using arith::u64;

/// Dense univariate polynomial over a field-like type F (coefficients
/// degree-0 first, no trailing zeros; the zero polynomial has no
/// coefficients and no degree). Immutable value type; all ops are pure.
///
/// F must provide: Element, zero/one, is_zero/eq, add/sub/neg/mul/inv/pow.
/// The field object must outlive every polynomial built over it.
template <class F>
class Polynomial {
 public:
  using Elem = typename F::Element;

  Polynomial() : field_(nullptr) {}
  explicit Polynomial(const F& f) : field_(&f) {}
  Polynomial(const F& f, std::vector<Elem> coeffs) : field_(&f), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Polynomial x(const F& f) {
    return Polynomial(f, {f.zero(), f.one()});
  }
  static Polynomial constant(const F& f, Elem c) {
    return Polynomial(f, {std::move(c)});
  }

  const F& field() const { return *field_; }
  bool valid() const { return field_ != nullptr; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  /// Degree of a nonzero polynomial.
  std::size_t deg() const {
    if (coeffs_.empty()) throw PreconditionError("degree of the zero polynomial");
    return coeffs_.size() - 1;
  }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  Elem coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_->zero();
  }
  Elem leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  bool is_monic() const {
    return !coeffs_.empty() && field_->eq(coeffs_.back(), field_->one());
  }
  bool is_x() const {
    return coeffs_.size() == 2 && field_->is_zero(coeffs_[0]) && field_->eq(coeffs_[1], field_->one());
  }

  bool operator==(const Polynomial& o) const {
    if (field_ != o.field_)
      throw PreconditionError("comparing polynomials over different fields");
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!field_->eq(coeffs_[i], o.coeffs_[i])) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  void normalize() {
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  const F* field_;
  std::vector<Elem> coeffs_;
};

template <class F>
const F& same_field(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (&a.field() != &b.field())
    throw PreconditionError("polynomials over different fields");
  return a.field();
}

template <class F>
Polynomial<F> add(const Polynomial<F>& a, const Polynomial<F>& b) {
  const F& f = same_field(a, b);
  std::vector<typename F::Element> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial<F>(f, std::move(c));
}

template <class F>
Polynomial<F> neg(const Polynomial<F>& a) {
  const F& f = a.field();
  auto c = a.coeffs();
  for (auto& x : c) x = f.neg(x);
  return Polynomial<F>(f, std::move(c));
}

template <class F>
Polynomial<F> sub(const Polynomial<F>& a, const Polynomial<F>& b) {
  const F& f = same_field(a, b);
  std::vector<typename F::Element> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial<F>(f, std::move(c));
}

template <class F>
Polynomial<F> mul(const Polynomial<F>& a, const Polynomial<F>& b) {
  const F& f = same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial<F>(f);
  std::vector<typename F::Element> c(a.coeffs().size() + b.coeffs().size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto& ai = a.coeffs()[i];
    if (f.is_zero(ai)) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(ai, b.coeffs()[j]));
  }
  return Polynomial<F>(f, std::move(c));
}

template <class F>
Polynomial<F> mul_scalar(const Polynomial<F>& a, const typename F::Element& s) {
  const F& f = a.field();
  auto c = a.coeffs();
  for (auto& x : c) x = f.mul(x, s);
  return Polynomial<F>(f, std::move(c));
}

template <class F>
struct DivMod {
  Polynomial<F> quot;
  Polynomial<F> rem;
};

template <class F>
DivMod<F> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
  const F& f = same_field(a, b);
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  if (a.is_zero() || a.coeffs().size() < b.coeffs().size())
    return {Polynomial<F>(f), a};
  auto lead_inv = f.inv(b.leading());
  auto r = a.coeffs();
  std::size_t db = b.coeffs().size() - 1;
  std::vector<typename F::Element> q(r.size() - db, f.zero());
  for (std::size_t i = r.size(); i-- > db;) {
    if (f.is_zero(r[i])) continue;
    auto c = f.mul(r[i], lead_inv);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b.coeffs()[j]));
  }
  return {Polynomial<F>(f, std::move(q)), Polynomial<F>(f, std::move(r))};
}

template <class F>
Polynomial<F> rem(const Polynomial<F>& a, const Polynomial<F>& b) {
  return divmod(a, b).rem;
}

template <class F>
Polynomial<F> monic(const Polynomial<F>& a) {
  if (a.is_zero()) return a;
  if (a.is_monic()) return a;
  return mul_scalar(a, a.field().inv(a.leading()));
}

/// Monic gcd; gcd(f, 0) = monic(f).
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  same_field(a, b);
  while (!b.is_zero()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class F>
Polynomial<F> powmod(const Polynomial<F>& base, u64 e, const Polynomial<F>& mod) {
  const F& f = same_field(base, mod);
  if (mod.is_zero()) throw PreconditionError("division by zero polynomial");
  auto b = rem(base, mod);
  auto r = rem(Polynomial<F>::constant(f, f.one()), mod);
  while (e) {
    if (e & 1) r = rem(mul(r, b), mod);
    e >>= 1;
    if (e) b = rem(mul(b, b), mod);
  }
  return r;
}

template <class F>
Polynomial<F> poly_pow(const Polynomial<F>& base, u32 e) {
  auto r = Polynomial<F>::constant(base.field(), base.field().one());
  for (u32 i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

template <class F>
typename F::Element eval(const Polynomial<F>& a, const typename F::Element& x) {
  const F& f = a.field();
  auto r = f.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    r = f.add(f.mul(r, x), a.coeffs()[i]);
  return r;
}

/// gcd of the exponents carrying nonzero coefficients (0 for constants).
template <class F>
u64 support_gcd(const Polynomial<F>& a) {
  u64 g = 0;
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    if (!a.field().is_zero(a.coeffs()[i])) g = std::gcd(g, static_cast<u64>(i));
  return g;
}

/// The monic twist c^{-n} f(cX): coefficient i maps to a_i c^{i-n}.
template <class F>
Polynomial<F> scale_twist(const Polynomial<F>& a, const typename F::Element& c) {
  const F& f = a.field();
  if (f.is_zero(c)) throw PreconditionError("scale_twist: c must be nonzero");
  if (!a.is_monic()) throw PreconditionError("scale_twist: polynomial must be monic");
  auto ci = f.inv(c);
  auto out = a.coeffs();
  auto pw = f.one();  // ci^(n-i)
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = f.mul(out[i], pw);
    pw = f.mul(pw, ci);
  }
  return Polynomial<F>(f, std::move(out));
}

/// t = gcd(k, support gcd); equals max{m | gcd(n,k) : f = g(X^m)}.
template <class F>
u64 composition_degree(const Polynomial<F>& a, u64 k) {
  if (a.is_zero() || a.field().is_zero(a.coeff(0)))
    throw PreconditionError("composition_degree: f(0) must be nonzero");
  if (a.deg() < 1) throw PreconditionError("composition_degree: degree must be >= 1");
  if (k == 0) throw PreconditionError("composition_degree: k must be >= 1");
  return std::gcd(k, support_gcd(a));
}

/// g with g(X^k) = h; every nonzero coefficient of h must sit at an
/// exponent divisible by k (the constructions guarantee this).
template <class F>
Polynomial<F> extract_composition(const Polynomial<F>& h, u64 k) {
  const F& f = h.field();
  if (k == 0) throw PreconditionError("extract_composition: k must be >= 1");
  if (k == 1) return h;
  std::vector<typename F::Element> out;
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    if (i % k == 0) {
      out.push_back(h.coeffs()[i]);
    } else if (!f.is_zero(h.coeffs()[i])) {
      throw InternalError("extract_composition: support not contained in k*Z");
    }
  }
  return Polynomial<F>(f, std::move(out));
}

/// f(X + a), a != 0.
template <class F>
Polynomial<F> substitute_shift(const Polynomial<F>& a, const typename F::Element& s) {
  const F& f = a.field();
  if (f.is_zero(s)) throw PreconditionError("substitute_shift: shift must be nonzero");
  auto xs = Polynomial<F>(f, {s, f.one()});
  auto r = Polynomial<F>(f);
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    r = add(mul(r, xs), Polynomial<F>::constant(f, a.coeffs()[i]));
  return r;
}

/// Number of nonzero coefficients, leading one included.
template <class F>
u32 weight(const Polynomial<F>& a) {
  u32 w = 0;
  for (const auto& c : a.coeffs())
    if (!a.field().is_zero(c)) ++w;
  return w;
}

/// Rabin's test: X^{q^n} = X (mod f) and gcd(X^{q^{n/t}} - X, f) = 1 for
/// every prime t | n.
template <class F>
bool is_irreducible(const Polynomial<F>& a) {
  if (a.is_zero() || a.deg() < 1)
    throw PreconditionError("is_irreducible: degree must be >= 1");
  const F& f = a.field();
  std::size_t n = a.deg();
  if (n == 1) return true;
  if (f.is_zero(a.coeff(0)) && !a.is_x()) return false;  // divisible by X
  u64 q = f.size();
  auto fm = monic(a);
  auto x = Polynomial<F>::x(f);
  std::vector<Polynomial<F>> frob(n + 1);
  frob[0] = rem(x, fm);
  for (std::size_t i = 1; i <= n; ++i) frob[i] = powmod(frob[i - 1], q, fm);
  if (frob[n] != frob[0]) return false;
  auto nf = arith::factorize(static_cast<u64>(n));
  for (auto [t, e] : nf.pairs) {
    (void)e;
    auto g = gcd(sub(frob[n / t], frob[0]), fm);
    if (g.is_zero() || g.deg() > 0) return false;
  }
  return true;
}

/// Least e with f | X^e - 1 (the multiplicative order of f's roots).
/// f must be monic irreducible with f(0) != 0.
template <class F>
u64 poly_order(const Polynomial<F>& a) {
  if (a.is_zero() || a.deg() < 1)
    throw PreconditionError("poly_order: degree must be >= 1");
  if (!a.is_monic()) throw PreconditionError("poly_order: polynomial must be monic");
  if (a.field().is_zero(a.coeff(0)))
    throw PreconditionError("poly_order: f(0) = 0 (f = X has no order)");
  if (!is_irreducible(a)) throw PreconditionError("poly_order: polynomial is reducible");
  const F& f = a.field();
  auto n = static_cast<u32>(a.deg());
  auto qn = arith::checked_pow(f.size(), n);
  if (!qn) throw PreconditionError("poly_order: q^n - 1 exceeds 64 bits");
  u64 e = *qn - 1;
  auto one = Polynomial<F>::constant(f, f.one());
  auto x = Polynomial<F>::x(f);
  for (auto [p, v] : arith::factorize(e).pairs) {
    (void)v;
    while (e % p == 0 && powmod(x, e / p, a) == one) e /= p;
  }
  return e;
}

using Poly = Polynomial<gf::FieldSpec>;

/// Compact canonical encoding of a Poly over its field, for hashing and
/// bulk storage. Coefficient indices bit-packed at width bit_width(q-1).
struct PolyKey {
  u32 coeff_count = 0;
  u64 head = 0;
  std::vector<u64> rest;

  bool operator==(const PolyKey& o) const {
    return coeff_count == o.coeff_count && head == o.head && rest == o.rest;
  }
};

struct PolyKeyHash {
  std::size_t operator()(const PolyKey& k) const {
    u64 h = 1469598103934665603ull;
    auto mix = [&h](u64 v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(k.coeff_count);
    mix(k.head);
    for (u64 w : k.rest) mix(w);
    return static_cast<std::size_t>(h);
  }
};

PolyKey make_key(const Poly& p);
Poly decode_key(const gf::FieldSpec& spec, const PolyKey& key);

}  // namespace irredforge::poly

#endif
