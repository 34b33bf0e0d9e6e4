#include "irredforge/base_arith.hpp"

#include <algorithm>
#include <numeric>

#include "irredforge/errors.hpp"

namespace irredforge::arith {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<__uint128_t>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 Factorization::value() const {
  u64 v = 1;
  for (auto [p, e] : pairs)
    for (u32 i = 0; i < e; ++i) v *= p;
  return v;
}

bool Factorization::contains(u64 p) const {
  return exponent_of(p) > 0;
}

u32 Factorization::exponent_of(u64 p) const {
  for (auto [q, e] : pairs)
    if (q == p) return e;
  return 0;
}

namespace {

u64 brent_rho(u64 n) {
  // n odd composite, no factor below 2^20
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int lam = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = (mulmod(y, y, n) + c) % n;
      int k = 0;
      while (k < lam && d == 1) {
        u64 ys = y;
        int lim = std::min(128, lam - k);
        for (int i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        if (d == n) {
          // backtrack one step at a time
          d = 1;
          y = ys;
          for (int i = 0; i < lim; ++i) {
            y = (mulmod(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
            if (d != 1) break;
          }
          if (d == 1) d = n;  // retry with another c
        }
        k += lim;
      }
      lam *= 2;
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = brent_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
  if (n == 0) throw PreconditionError("factorize: n must be >= 1");
  std::vector<u64> primes;
  for (u64 d = 2; d < (1u << 20) && d * d <= n; d = (d == 2 ? 3 : d + 2)) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  Factorization f;
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    f.pairs.emplace_back(primes[i], static_cast<u32>(j - i));
    i = j;
  }
  return f;
}

namespace {

u64 carmichael(const Factorization& f) {
  u64 lam = 1;
  for (auto [p, e] : f.pairs) {
    u64 pe = 1;
    for (u32 i = 0; i < e; ++i) pe *= p;
    u64 l = (p == 2 && e >= 3) ? pe / 4 : pe / p * (p - 1);
    lam = std::lcm(lam, l);
  }
  return lam;
}

}  // namespace

u64 mult_order(u64 a, u64 r) {
  if (r == 0) throw PreconditionError("mult_order: modulus must be >= 1");
  if (r == 1) return 1;
  a %= r;
  if (std::gcd(a, r) != 1) throw PreconditionError("mult_order: gcd(a, r) != 1");
  u64 order = carmichael(factorize(r));
  for (auto [p, e] : factorize(order).pairs) {
    (void)e;
    while (order % p == 0 && powmod(a, order / p, r) == 1) order /= p;
  }
  return order;
}

u32 nu_p(u64 p, u64 n) {
  if (!is_prime(p)) throw PreconditionError("nu_p: p must be prime");
  if (n == 0) throw PreconditionError("nu_p: n must be >= 1");
  u32 v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<u64> divisors(const Factorization& fact) {
  std::vector<u64> divs{1};
  for (auto [p, e] : fact.pairs) {
    std::size_t sz = divs.size();
    u64 pe = 1;
    for (u32 i = 0; i < e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::optional<u64> checked_mul(u64 a, u64 b) {
  __uint128_t r = static_cast<__uint128_t>(a) * b;
  if (r > ~0ull) return std::nullopt;
  return static_cast<u64>(r);
}

std::optional<u64> checked_pow(u64 base, u32 exp) {
  u64 r = 1;
  while (exp) {
    if (exp & 1) {
      auto m = checked_mul(r, base);
      if (!m) return std::nullopt;
      r = *m;
    }
    exp >>= 1;
    if (exp) {
      auto s = checked_mul(base, base);
      if (!s) return std::nullopt;
      base = *s;
    }
  }
  return r;
}

}  // namespace irredforge::arith
