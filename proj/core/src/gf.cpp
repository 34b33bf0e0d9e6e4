#include "irredforge/gf.hpp"

#include <algorithm>

#include "irredforge/polyring.hpp"

namespace irredforge::gf {

namespace {
constexpr u64 kTableLimit = 1ull << 20;
}

std::shared_ptr<const FieldSpec> FieldSpec::make(u64 p, u32 m, std::vector<u64> modulus) {
  if (!arith::is_prime(p)) throw PreconditionError("field spec: p is not prime");
  if (m == 0) throw PreconditionError("field spec: extension degree must be >= 1");
  auto q = arith::checked_pow(p, m);
  if (!q || *q > (1ull << 32)) throw PreconditionError("field spec: q = p^m exceeds 2^32");

  if (modulus.size() != static_cast<std::size_t>(m) + 1)
    throw PreconditionError("field spec: modulus must have degree m");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw PreconditionError("field spec: modulus must be monic");

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->q_ = *q;
  spec->m_ = m;
  spec->char2_ = (p == 2);
  spec->modulus_ = modulus;
  spec->ppow_.resize(m + 1);
  spec->ppow_[0] = 1;
  for (u32 i = 0; i < m; ++i) spec->ppow_[i + 1] = spec->ppow_[i] * p;

  if (m >= 2) {
    auto prime_field = FieldSpec::make(p, 1, {0, 1});
    std::vector<u64> coeffs(modulus.begin(), modulus.end());
    poly::Polynomial<FieldSpec> mu(*prime_field, std::move(coeffs));
    if (!poly::is_irreducible(mu))
      throw PreconditionError("field spec: modulus is reducible over F_p");
    if (spec->q_ <= kTableLimit) spec->build_tables();
  }
  return spec;
}

std::vector<u64> FieldSpec::digits(Element a) const {
  std::vector<u64> d(m_);
  for (u32 i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FieldSpec::Element FieldSpec::from_digits(const std::vector<u64>& d) const {
  if (d.size() != m_) throw PreconditionError("field element: wrong digit count");
  u64 v = 0;
  for (u32 i = m_; i-- > 0;) {
    if (d[i] >= p_) throw PreconditionError("field element: digit out of range");
    v = v * p_ + d[i];
  }
  return v;
}

FieldSpec::Element FieldSpec::element_at(u64 idx) const {
  if (idx >= q_) throw PreconditionError("field element: index out of range");
  return idx;
}

FieldSpec::Element FieldSpec::generator_symbol() const {
  if (m_ < 2) throw PreconditionError("field spec: prime field has no symbol `a`");
  return p_;
}

FieldSpec::Element FieldSpec::add(Element a, Element b) const {
  if (m_ == 1) {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (char2_) return a ^ b;
  u64 r = 0;
  for (u32 i = 0; i < m_; ++i) {
    u64 s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * ppow_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

FieldSpec::Element FieldSpec::neg(Element a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  if (char2_) return a;
  u64 r = 0;
  for (u32 i = 0; i < m_; ++i) {
    u64 c = a % p_;
    r += (c == 0 ? 0 : p_ - c) * ppow_[i];
    a /= p_;
  }
  return r;
}

FieldSpec::Element FieldSpec::sub(Element a, Element b) const {
  return char2_ ? a ^ b : add(a, neg(b));
}

FieldSpec::Element FieldSpec::mul_generic(Element a, Element b) const {
  // schoolbook product of digit polynomials, reduced by the monic modulus
  std::vector<u64> da = digits(a), db = digits(b);
  std::vector<u64> prod(2 * m_ - 1, 0);
  for (u32 i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (u32 j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (u32 i = 2 * m_ - 2; i >= m_; --i) {
    u64 c = prod[i];
    if (c == 0) {
      if (i == m_) break;
      continue;
    }
    prod[i] = 0;
    for (u32 j = 0; j < m_; ++j) {
      u64 sub_ = (c * modulus_[j]) % p_;
      u64 cur = prod[i - m_ + j];
      prod[i - m_ + j] = (cur + p_ - sub_) % p_;
    }
    if (i == m_) break;
  }
  u64 r = 0;
  for (u32 i = 0; i < m_; ++i) r += prod[i] * ppow_[i];
  return r;
}

FieldSpec::Element FieldSpec::pow_generic(Element a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void FieldSpec::build_tables() {
  auto fact = arith::factorize(q_ - 1);
  u64 g = 0;
  for (u64 c = 2; c < q_; ++c) {
    bool primitive = true;
    for (auto [p, e] : fact.pairs) {
      (void)e;
      if (pow_generic(c, (q_ - 1) / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = c;
      break;
    }
  }
  if (g == 0) throw InternalError("field spec: no primitive element found");
  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  u64 x = 1;
  for (u64 i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<u32>(x);
    exp_[i + q_ - 1] = static_cast<u32>(x);
    log_[x] = static_cast<u32>(i);
    x = mul_generic(x, g);
  }
}

FieldSpec::Element FieldSpec::mul(Element a, Element b) const {
  if (m_ == 1) return (a * b) % p_;
  if (!exp_.empty()) {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  return mul_generic(a, b);
}

FieldSpec::Element FieldSpec::inv(Element a) const {
  if (a == 0) throw PreconditionError("field element: inverse of zero");
  if (m_ == 1) return arith::powmod(a, p_ - 2, p_);
  if (!exp_.empty()) return exp_[(q_ - 1) - log_[a]];
  return pow_generic(a, q_ - 2);
}

FieldSpec::Element FieldSpec::pow(Element a, u64 e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (m_ == 1) return arith::powmod(a, e, p_);
  if (!exp_.empty()) {
    u64 idx = (static_cast<u64>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[idx];
  }
  return pow_generic(a, e);
}

FieldElement::FieldElement(const FieldSpec& spec, u64 canonical_index)
    : spec_(&spec), value_(canonical_index) {
  if (value_ >= spec.size()) throw PreconditionError("field element: index out of range");
}

namespace {
const FieldSpec& require_same(const FieldSpec* a, const FieldSpec* b) {
  if (a != b) throw PreconditionError("field elements from different fields");
  return *a;
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const auto& f = require_same(spec_, o.spec_);
  return FieldElement(f, f.add(value_, o.value_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  const auto& f = require_same(spec_, o.spec_);
  return FieldElement(f, f.sub(value_, o.value_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  const auto& f = require_same(spec_, o.spec_);
  return FieldElement(f, f.mul(value_, o.value_));
}
FieldElement FieldElement::operator-() const {
  return FieldElement(*spec_, spec_->neg(value_));
}
FieldElement FieldElement::inverse() const {
  return FieldElement(*spec_, spec_->inv(value_));
}
FieldElement FieldElement::pow(u64 e) const {
  return FieldElement(*spec_, spec_->pow(value_, e));
}
bool FieldElement::operator==(const FieldElement& o) const {
  require_same(spec_, o.spec_);
  return value_ == o.value_;
}

u64 element_order(const FieldElement& x) {
  return element_order_in(x.field(), x.canonical_index());
}

FieldElement kth_root_of_unity(const FieldSpec& spec, u64 k) {
  return FieldElement(spec, root_of_unity_in(spec, k));
}

}  // namespace irredforge::gf
