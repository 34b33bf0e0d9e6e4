#ifndef IRREDFORGE_GF_HPP
#define IRREDFORGE_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "irredforge/base_arith.hpp"
#include "irredforge/errors.hpp"

namespace irredforge::gf {

using arith::u32;
using arith::u64;

/// F_{p^m} = F_p[Y]/(mu), immutable after construction. Elements are carried
/// as canonical indices sum c_i * p^i with digits c_0..c_{m-1} reduced mod p,
/// so equality of indices is equality of coefficient vectors.
///
/// Shareable across threads; all operations are const and pure.
class FieldSpec {
 public:
  using Element = u64;

  /// Validates p prime, q = p^m <= 2^32 and mu monic irreducible of degree m
  /// (any monic degree-1 modulus is accepted for m = 1).
  static std::shared_ptr<const FieldSpec> make(u64 p, u32 m, std::vector<u64> modulus);

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  u64 characteristic() const { return p_; }
  u32 ext_degree() const { return m_; }
  u64 size() const { return q_; }
  const std::vector<u64>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool eq(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, u64 e) const;

  Element element_at(u64 idx) const;
  u64 element_count() const { return q_; }

  std::vector<u64> digits(Element a) const;       // length m, degree-0 first
  Element from_digits(const std::vector<u64>& d) const;

  /// The class of Y, printed as `a`. Only meaningful for m >= 2.
  Element generator_symbol() const;

 private:
  FieldSpec() = default;

  Element mul_generic(Element a, Element b) const;
  Element pow_generic(Element a, u64 e) const;
  void build_tables();

  u64 p_ = 0;
  u64 q_ = 0;
  u32 m_ = 0;
  bool char2_ = false;
  std::vector<u64> modulus_;   // m+1 digits, monic
  std::vector<u64> ppow_;      // p^0..p^m
  std::vector<u32> exp_;       // empty when tables unavailable
  std::vector<u32> log_;
};

/// Element with its field attached; cross-field operands raise
/// PreconditionError instead of coercing.
class FieldElement {
 public:
  FieldElement(const FieldSpec& spec, u64 canonical_index);

  const FieldSpec& field() const { return *spec_; }
  u64 canonical_index() const { return value_; }
  std::vector<u64> digits() const { return spec_->digits(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(u64 e) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  const FieldSpec* spec_;
  u64 value_;
};

/// Multiplicative order in any field-like type, via the factorization of
/// |F| - 1. F must expose size(), pow, one, eq, is_zero.
template <class F>
u64 element_order_in(const F& field, const typename F::Element& x) {
  if (field.is_zero(x)) throw PreconditionError("element_order: zero has no multiplicative order");
  u64 n = field.size() - 1;
  u64 order = n;
  for (auto [p, e] : arith::factorize(n).pairs) {
    (void)e;
    while (order % p == 0 && field.eq(field.pow(x, order / p), field.one())) order /= p;
  }
  return order;
}

/// First element of multiplicative order exactly k in canonical index order.
/// Deterministic for a fixed field; requires k | |F| - 1.
template <class F>
typename F::Element root_of_unity_in(const F& field, u64 k) {
  u64 n = field.size() - 1;
  if (k == 0 || n % k != 0)
    throw PreconditionError("root of unity: k does not divide q - 1");
  auto kfact = arith::factorize(k);
  for (u64 idx = 1; idx < field.element_count(); ++idx) {
    auto x = field.element_at(idx);
    if (!field.eq(field.pow(x, k), field.one())) continue;
    bool exact = true;
    for (auto [p, e] : kfact.pairs) {
      (void)e;
      if (field.eq(field.pow(x, k / p), field.one())) {
        exact = false;
        break;
      }
    }
    if (exact) return x;
  }
  throw InternalError("root of unity: no element of the requested order");
}

u64 element_order(const FieldElement& x);
FieldElement kth_root_of_unity(const FieldSpec& spec, u64 k);

}  // namespace irredforge::gf

#endif
