#ifndef IRREDFORGE_ORACLE_HPP
#define IRREDFORGE_ORACLE_HPP

#include <optional>

#include "irredforge/polyring.hpp"

namespace irredforge::oracle {

using arith::u32;
using arith::u64;

/// F_{q^n} = F_q[X]/(f) with alpha the class of X. Elements are reduced
/// residues (Poly over the base field). Models the same field concept as
/// FieldSpec, so the generic Polynomial stack instantiates over it.
class ExtensionField {
 public:
  using Element = poly::Poly;

  explicit ExtensionField(poly::Poly modulus, bool validate = true);

  const gf::FieldSpec& base() const { return *base_; }
  const poly::Poly& modulus() const { return modulus_; }
  u32 degree() const { return n_; }
  u64 characteristic() const { return base_->characteristic(); }

  /// q^n; scans and order computations need it, so it must fit in 64 bits.
  u64 size() const;
  u64 element_count() const { return size(); }

  Element zero() const { return Element(*base_); }
  Element one() const { return Element::constant(*base_, base_->one()); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool eq(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return poly::add(a, b); }
  Element sub(const Element& a, const Element& b) const { return poly::sub(a, b); }
  Element neg(const Element& a) const { return poly::neg(a); }
  Element mul(const Element& a, const Element& b) const {
    return poly::rem(poly::mul(a, b), modulus_);
  }
  Element inv(const Element& a) const;
  Element pow(Element a, u64 e) const;

  Element alpha() const { return poly::rem(Element::x(*base_), modulus_); }
  Element embed(u64 base_elem) const { return Element::constant(*base_, base_elem); }

  Element element_at(u64 idx) const;

  /// Constant-residue check: the canonical embedded copy of the base field.
  std::optional<u64> to_base(const Element& a) const;

  Element frobenius(const Element& a) const { return pow(a, base_->size()); }

 private:
  const gf::FieldSpec* base_;
  poly::Poly modulus_;
  u32 n_;
};

ExtensionField build_extension(const poly::Poly& f);

/// First monic irreducible of degree s over spec in the deterministic scan
/// order (constant coefficient varies fastest).
poly::Poly find_irreducible(const gf::FieldSpec& spec, u32 s);

/// Conjugate-product reference for m_{beta^k}: gamma = alpha^k in F_q[X]/(f),
/// product of (X - gamma^{q^i}) over the distinct conjugates.
poly::Poly min_poly_power(const poly::Poly& f, u64 k);

/// Full n-fold conjugate product; equals min_poly_power^{n/m}.
poly::Poly char_poly_power(const poly::Poly& f, u64 k);

/// chi_{beta^k}(X^k) assembled as the k-fold twisted product over F_{q^s},
/// s = ord(q) modulo the p-free part of k; coefficients must descend to F_q.
poly::Poly daykin_product(const poly::Poly& f, u64 k);

}  // namespace irredforge::oracle

#endif
