#include "irredforge/oracle.hpp"

#include <numeric>

namespace irredforge::oracle {

using poly::Poly;
using poly::Polynomial;

ExtensionField::ExtensionField(Poly modulus, bool validate)
    : base_(&modulus.field()), modulus_(std::move(modulus)) {
  if (modulus_.is_zero() || modulus_.deg() < 1)
    throw PreconditionError("extension: modulus must have degree >= 1");
  if (!modulus_.is_monic())
    throw PreconditionError("extension: modulus must be monic");
  if (validate && !poly::is_irreducible(modulus_))
    throw PreconditionError("extension: modulus is reducible");
  n_ = static_cast<u32>(modulus_.deg());
}

u64 ExtensionField::size() const {
  auto s = arith::checked_pow(base_->size(), n_);
  if (!s || *s > (1ull << 63))
    throw PreconditionError("extension: q^n does not fit in 64 bits");
  return *s;
}

ExtensionField::Element ExtensionField::inv(const Element& a) const {
  if (a.is_zero()) throw PreconditionError("extension: inverse of zero");
  Element r0 = modulus_, r1 = a;
  Element s0 = zero(), s1 = one();
  while (!r1.is_zero() && r1.deg() > 0) {
    auto dm = poly::divmod(r0, r1);
    auto s2 = poly::sub(s0, poly::mul(dm.quot, s1));
    r0 = std::move(r1);
    r1 = std::move(dm.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero()) throw InternalError("extension: modulus not irreducible");
  return poly::rem(poly::mul_scalar(s1, base_->inv(r1.coeff(0))), modulus_);
}

ExtensionField::Element ExtensionField::pow(Element a, u64 e) const {
  Element r = one();
  a = poly::rem(a, modulus_);
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

ExtensionField::Element ExtensionField::element_at(u64 idx) const {
  u64 q = base_->size();
  std::vector<u64> coeffs(n_);
  for (u32 i = 0; i < n_; ++i) {
    coeffs[i] = idx % q;
    idx /= q;
  }
  if (idx != 0) throw PreconditionError("extension: element index out of range");
  return Element(*base_, std::move(coeffs));
}

std::optional<u64> ExtensionField::to_base(const Element& a) const {
  if (a.is_zero()) return 0;
  if (a.deg() > 0) return std::nullopt;
  return a.coeff(0);
}

ExtensionField build_extension(const Poly& f) {
  return ExtensionField(f);
}

Poly find_irreducible(const gf::FieldSpec& spec, u32 s) {
  if (s == 0) throw PreconditionError("find_irreducible: degree must be >= 1");
  u64 q = spec.size();
  for (u64 idx = 0;; ++idx) {
    std::vector<u64> coeffs(s + 1);
    u64 v = idx;
    for (u32 i = 0; i < s; ++i) {
      coeffs[i] = v % q;
      v /= q;
    }
    if (v != 0) throw InternalError("find_irreducible: scan exhausted");
    coeffs[s] = 1;
    Poly cand(spec, std::move(coeffs));
    if (poly::is_irreducible(cand)) return cand;
  }
}

namespace {

void require_min_poly_input(const Poly& f) {
  if (f.is_zero() || f.deg() < 1 || !f.is_monic())
    throw PreconditionError("oracle: input must be monic of degree >= 1");
  if (f.is_x()) throw PreconditionError("oracle: f = X is excluded");
  if (!poly::is_irreducible(f)) throw PreconditionError("oracle: input is reducible");
}

Poly descend(const ExtensionField& ext, const Polynomial<ExtensionField>& p) {
  std::vector<u64> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    auto b = ext.to_base(c);
    if (!b) throw InternalError("oracle: coefficient failed descent to F_q");
    coeffs.push_back(*b);
  }
  return Poly(ext.base(), std::move(coeffs));
}

}  // namespace

Poly min_poly_power(const Poly& f, u64 k) {
  require_min_poly_input(f);
  if (k == 0) throw PreconditionError("oracle: k must be >= 1");
  ExtensionField ext(f, false);
  auto gamma = ext.pow(ext.alpha(), k);
  std::vector<ExtensionField::Element> conj{gamma};
  for (auto c = ext.frobenius(gamma); !ext.eq(c, gamma); c = ext.frobenius(c))
    conj.push_back(c);
  Polynomial<ExtensionField> acc = Polynomial<ExtensionField>::constant(ext, ext.one());
  for (const auto& g : conj) {
    Polynomial<ExtensionField> lin(ext, {ext.neg(g), ext.one()});
    acc = poly::mul(acc, lin);
  }
  return descend(ext, acc);
}

Poly char_poly_power(const Poly& f, u64 k) {
  require_min_poly_input(f);
  if (k == 0) throw PreconditionError("oracle: k must be >= 1");
  ExtensionField ext(f, false);
  auto n = f.deg();
  auto gamma = ext.pow(ext.alpha(), k);
  Polynomial<ExtensionField> acc = Polynomial<ExtensionField>::constant(ext, ext.one());
  auto c = gamma;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial<ExtensionField> lin(ext, {ext.neg(c), ext.one()});
    acc = poly::mul(acc, lin);
    c = ext.frobenius(c);
  }
  return descend(ext, acc);
}

Poly daykin_product(const Poly& f, u64 k) {
  require_min_poly_input(f);
  if (k == 0) throw PreconditionError("oracle: k must be >= 1");
  const auto& spec = f.field();
  u64 q = spec.size();
  std::size_t n = f.deg();

  u64 kp = k;
  for (u64 g = std::gcd(kp, q); g > 1; g = std::gcd(kp, q)) kp /= g;
  u64 s = (kp <= 1) ? 1 : arith::mult_order(q, kp);

  ExtensionField ext(find_irreducible(spec, static_cast<u32>(s)), false);
  auto zeta = (kp <= 1) ? ext.one() : gf::root_of_unity_in(ext, kp);

  std::vector<ExtensionField::Element> fe;
  fe.reserve(n + 1);
  for (u64 c : f.coeffs()) fe.push_back(ext.embed(c));

  auto acc = Polynomial<ExtensionField>::constant(ext, ext.one());
  auto zj = ext.one();
  for (u64 j = 1; j <= k; ++j) {
    zj = ext.mul(zj, zeta);
    std::vector<ExtensionField::Element> tw(n + 1, ext.zero());
    auto pw = ext.one();  // zj^i
    for (std::size_t i = 0; i <= n; ++i) {
      tw[i] = ext.mul(fe[i], pw);
      pw = ext.mul(pw, zj);
    }
    acc = poly::mul(acc, Polynomial<ExtensionField>(ext, std::move(tw)));
  }
  if ((n * (k + 1)) % 2 == 1) acc = poly::neg(acc);

  auto out = descend(ext, acc);
  if (!out.is_monic()) throw InternalError("oracle: daykin product is not monic");
  return out;
}

}  // namespace irredforge::oracle
