#include "irredforge/family.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "irredforge/constructions.hpp"
#include "irredforge/oracle.hpp"
#include "irredforge/orbit.hpp"

namespace irredforge::family {

namespace detail {

u32 k_normality_core(const Poly& f) {
  oracle::ExtensionField ext(f, false);
  auto n = f.deg();
  std::vector<oracle::ExtensionField::Element> conj(n, ext.zero());
  conj[0] = ext.alpha();
  for (std::size_t i = 1; i < n; ++i) conj[i] = ext.frobenius(conj[i - 1]);

  std::vector<oracle::ExtensionField::Element> gcoeffs(n, ext.zero());
  for (std::size_t i = 0; i < n; ++i) gcoeffs[n - 1 - i] = conj[i];
  poly::Polynomial<oracle::ExtensionField> g_alpha(ext, std::move(gcoeffs));

  std::vector<oracle::ExtensionField::Element> xn(n + 1, ext.zero());
  xn[0] = ext.neg(ext.one());
  xn[n] = ext.one();
  poly::Polynomial<oracle::ExtensionField> xn_minus_1(ext, std::move(xn));

  auto g = poly::gcd(xn_minus_1, g_alpha);
  return g.is_zero() ? 0 : static_cast<u32>(g.deg());
}

}  // namespace detail

u32 k_normality(const Poly& f) {
  if (f.is_zero() || f.deg() < 1 || !f.is_monic())
    throw PreconditionError("k_normality: input must be monic of degree >= 1");
  if (!poly::is_irreducible(f))
    throw PreconditionError("k_normality: polynomial is reducible");
  return detail::k_normality_core(f);
}

namespace {

struct SeenMeta {
  u32 member_index;
  u32 branch_id;
  u32 orbit_plus1;  // 0 = not an orbit member
};

void compute_normality(FamilyReport& report, unsigned threads) {
  const auto& spec = report.field();
  std::size_t count = report.members.size();
  report.member_normality.assign(count, 0);
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned t = threads == 0 ? hw : threads;
  t = static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(count, 1)));

  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      Poly p = poly::decode_key(spec, report.members[i]);
      report.member_normality[i] = detail::k_normality_core(p);
    }
  };

  if (t <= 1 || count < 64) {
    work(0, count);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(t);
    std::size_t chunk = (count + t - 1) / t;
    for (unsigned w = 0; w < t; ++w) {
      std::size_t lo = std::min<std::size_t>(w * chunk, count);
      std::size_t hi = std::min<std::size_t>(lo + chunk, count);
      pool.emplace_back([&, lo, hi, w]() {
        try {
          work(lo, hi);
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }

  report.normality_hist.clear();
  for (std::size_t i = 0; i < count; ++i)
    ++report.normality_hist[{report.member_weights[i], report.member_normality[i]}];
}

}  // namespace

FamilyReport enumerate_family(const Poly& f, const FamilyOptions& options) {
  cons::detail::require_construction_input(f);
  const auto& spec = f.field();
  u64 e = poly::poly_order(f);

  FamilyReport report;
  report.base_poly = f;
  report.order_e = e;
  auto qm1 = arith::factorize(spec.size() - 1);
  for (auto [p, v] : qm1.pairs) {
    (void)v;
    report.primes.push_back(p);
  }

  if (report.primes.empty()) {
    report.members.push_back(poly::make_key(f));
    report.member_orders.push_back(e);
    report.member_weights.push_back(poly::weight(f));
    report.weight_hist[report.member_weights[0]] = 1;
    report.order_hist[e] = 1;
    if (options.normality) compute_normality(report, options.threads);
    return report;
  }

  std::vector<u64> outer(report.primes.begin(), report.primes.end() - 1);
  u64 p_last = report.primes.back();

  if (options.caps) {
    if (options.caps->size() != outer.size())
      throw PreconditionError("enumerate_family: need one cap per prime below the largest");
    report.caps_used = *options.caps;
  } else {
    for (u64 p : outer) {
      auto trace = orbit::iterate_prime(f, p);
      report.prime_traces.push_back({p, static_cast<u32>(trace.tail_length),
                                     static_cast<u64>(trace.orbit_length)});
      report.caps_used.push_back(static_cast<u32>(trace.tail_length + trace.orbit_length));
    }
  }

  std::vector<u32> nu_e(report.primes.size());
  for (std::size_t i = 0; i < report.primes.size(); ++i)
    nu_e[i] = arith::nu_p(report.primes[i], e);

  std::vector<u64> zetas(report.primes.size());
  for (std::size_t i = 0; i < report.primes.size(); ++i) {
    u64 p = report.primes[i];
    zetas[i] = (p == 2) ? spec.neg(spec.one()) : gf::root_of_unity_in(spec, p);
  }
  u64 zeta_last = zetas.back();

  std::unordered_map<PolyKey, SeenMeta, poly::PolyKeyHash> seen;
  std::vector<long long> branch_orbit;  // -1 = unresolved
  std::vector<u32> exps(outer.size(), 0);

  auto order_of = [&](u64 j_last) {
    u64 g = 1;
    for (std::size_t i = 0; i < outer.size(); ++i) {
      u32 lim = std::min(exps[i], nu_e[i]);
      for (u32 t = 0; t < lim; ++t) g *= outer[i];
    }
    u32 lim = std::min<u64>(j_last, nu_e.back());
    for (u32 t = 0; t < lim; ++t) g *= p_last;
    return e / g;
  };

  auto start_k_mod_e = [&](u64 j_last) {
    u64 k = 1 % e;
    for (std::size_t i = 0; i < outer.size(); ++i)
      k = arith::mulmod(k, arith::powmod(outer[i] % e, exps[i], e), e);
    return arith::mulmod(k, arith::powmod(p_last % e, j_last, e), e);
  };

  auto leaf = [&](const Poly& base) {
    u32 bid = static_cast<u32>(branch_orbit.size());
    branch_orbit.push_back(-1);
    std::unordered_map<PolyKey, u32, poly::PolyKeyHash> local;
    std::size_t first_new = report.members.size();
    Poly cur = base;
    u32 j = 0;
    while (true) {
      auto key = poly::make_key(cur);
      auto lit = local.find(key);
      if (lit != local.end()) {
        u32 l = lit->second;
        u32 oid = static_cast<u32>(report.orbits.size());
        OrbitSummary orb;
        for (std::size_t i = 0; i < outer.size(); ++i)
          orb.start_exponents.emplace_back(outer[i], exps[i]);
        orb.start_exponents.emplace_back(p_last, l);
        orb.start_k_mod_e = start_k_mod_e(l);
        orb.order = order_of(l);
        orb.first_member_index = first_new + l;
        orb.size = j - l;
        orb.representative = report.members[orb.first_member_index];
        for (std::size_t idx = orb.first_member_index; idx < first_new + j; ++idx)
          seen[report.members[idx]].orbit_plus1 = oid + 1;
        report.orbits.push_back(std::move(orb));
        branch_orbit[bid] = oid;
        return;
      }
      seen.emplace(key, SeenMeta{static_cast<u32>(report.members.size()), bid, 0});
      report.members.push_back(std::move(key));
      report.member_orders.push_back(order_of(j));
      report.member_weights.push_back(poly::weight(cur));
      local.emplace(report.members.back(), j);
      ++j;
      cur = cons::detail::prime_step_core(cur, p_last, zeta_last);
    }
  };

  auto recurse = [&](auto&& self, std::size_t idx, const Poly& base) -> void {
    if (idx == outer.size()) {
      leaf(base);
      return;
    }
    Poly cur = base;
    for (u32 i = 0;; ++i) {
      exps[idx] = i;
      self(self, idx + 1, cur);
      if (i >= report.caps_used[idx]) break;
      cur = cons::detail::prime_step_core(cur, outer[idx], zetas[idx]);
    }
  };
  recurse(recurse, 0, f);

  for (std::size_t i = 0; i < report.members.size(); ++i) {
    ++report.weight_hist[report.member_weights[i]];
    ++report.order_hist[report.member_orders[i]];
  }
  if (options.normality) compute_normality(report, options.threads);
  return report;
}

std::vector<Poly> enumerate_restricted(const Poly& f) {
  cons::detail::require_construction_input(f);
  const auto& spec = f.field();
  u64 e = poly::poly_order(f);
  std::vector<u64> primes;
  for (auto [p, v] : arith::factorize(spec.size() - 1).pairs) {
    (void)v;
    primes.push_back(p);
  }

  std::vector<u64> ks;
  auto gen = [&](auto&& self, std::size_t idx, u64 val) -> void {
    if (idx == primes.size()) {
      if (val > 1) ks.push_back(val);
      return;
    }
    u64 v = val;
    while (true) {
      self(self, idx + 1, v);
      if (v > (e - 1) / primes[idx]) break;
      v *= primes[idx];
    }
  };
  if (e > 1) gen(gen, 0, 1);
  std::sort(ks.begin(), ks.end());
  if (ks.size() > 200000)
    throw PreconditionError("enumerate_restricted: exponent set too large");

  std::unordered_map<PolyKey, bool, poly::PolyKeyHash> dedup;
  std::vector<Poly> out;
  for (u64 k : ks) {
    auto g = cons::construct_general(f, k).output;
    auto key = poly::make_key(g);
    if (dedup.emplace(std::move(key), true).second) out.push_back(std::move(g));
  }
  return out;
}

std::map<u32, u64> weight_distribution(const FamilyReport& report) {
  return report.weight_hist;
}

std::map<std::pair<u32, u32>, u64> normality_distribution(const FamilyReport& report) {
  if (report.member_normality.size() != report.members.size())
    throw PreconditionError("normality_distribution: report lacks normality data");
  return report.normality_hist;
}

}  // namespace irredforge::family
