#include "irredforge/polyring.hpp"

namespace irredforge::poly {

PolyKey make_key(const Poly& p) {
  PolyKey key;
  key.coeff_count = static_cast<u32>(p.coeffs().size());
  if (key.coeff_count == 0) return key;
  const u32 w = std::max(1, std::bit_width(p.field().size() - 1));
  u64 cur = 0;
  u32 used = 0;
  bool head_set = false;
  auto flush = [&]() {
    if (!head_set) {
      key.head = cur;
      head_set = true;
    } else {
      key.rest.push_back(cur);
    }
    cur = 0;
    used = 0;
  };
  for (u64 c : p.coeffs()) {
    if (used + w <= 64) {
      cur |= c << used;
      used += w;
      if (used == 64) flush();
    } else {
      u32 lo = 64 - used;
      cur |= c << used;
      flush();
      cur = c >> lo;
      used = w - lo;
    }
  }
  if (used > 0) flush();
  return key;
}

Poly decode_key(const gf::FieldSpec& spec, const PolyKey& key) {
  if (key.coeff_count == 0) return Poly(spec);
  const u32 w = std::max(1, std::bit_width(spec.size() - 1));
  const u64 mask = (w == 64) ? ~0ull : ((1ull << w) - 1);
  auto word = [&key](std::size_t i) -> u64 {
    return i == 0 ? key.head : key.rest[i - 1];
  };
  std::vector<u64> coeffs(key.coeff_count);
  for (u32 i = 0; i < key.coeff_count; ++i) {
    u64 bit = static_cast<u64>(i) * w;
    std::size_t wi = bit / 64;
    u32 off = bit % 64;
    u64 v = word(wi) >> off;
    if (off + w > 64) v |= word(wi + 1) << (64 - off);
    coeffs[i] = v & mask;
  }
  return Poly(spec, std::move(coeffs));
}

}  // namespace irredforge::poly
