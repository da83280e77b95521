#include "hq/subgroup_catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace hq {

namespace {

std::pair<u64, unsigned> require_prime_power(u64 q) {
  auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return *pp;
}

// a is a square in F_{p^k} (0 counts as a square).
bool square_in(long long a, u64 p, unsigned k) {
  const u64 r = static_cast<u64>(((a % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p));
  if (r == 0 || k % 2 == 0 || p == 2) return true;
  return powmod(r, (p - 1) / 2, p) == 1;
}

CatalogEntry entry(std::string label, std::string formula, BigInt order, std::string params = "") {
  CatalogEntry e;
  e.label = std::move(label);
  e.formula = std::move(formula);
  e.params = std::move(params);
  e.order = std::move(order);
  return e;
}

BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace

BigInt psu3_order(u64 Q) {
  const BigInt q = Q;
  return q * q * q * (q * q - 1) * (q * q * q + 1) / (Q % 3 == 2 ? 3 : 1);
}

BigInt pgu3_order_big(u64 Q) {
  const BigInt q = Q;
  return q * q * q * (q * q - 1) * (q * q * q + 1);
}

std::vector<CatalogEntry> mh_orders(u64 qv) {
  const auto [p, k] = require_prime_power(qv);
  const BigInt q = qv;
  const unsigned d = (qv % 3 == 2) ? 3 : 1;
  std::vector<CatalogEntry> out;
  out.push_back(entry("MH-i", "q^3(q^2-1)/d", q * q * q * (q * q - 1) / d));
  out.push_back(entry("MH-ii", "q(q-1)(q+1)^2/d", q * (q - 1) * (q + 1) * (q + 1) / d));
  out.push_back(entry("MH-iii", "6(q+1)^2/d", 6 * (q + 1) * (q + 1) / d));
  out.push_back(entry("MH-iv", "3(q^2-q+1)/d", 3 * (q * q - q + 1) / d));
  if (p > 2) {
    out.push_back(entry("MH-v", "q(q^2-1)", q * (q * q - 1)));
    for (unsigned m = 1; m < k; ++m) {
      if (k % m || (k / m) % 2 == 0) continue;
      CatalogEntry e = entry("MH-vi", "|PSU(3,p^m)|", psu3_order(checked_pow(p, m)), "m=" + std::to_string(m));
      e.subfield_q = checked_pow(p, m);
      out.push_back(e);
    }
    for (unsigned m = 1; m < k; ++m) {
      if (k % m || (k / m) % 2 == 0 || (k / m) % 3 || (qv + 1) % 3) continue;
      CatalogEntry e = entry("MH-vii", "3|PSU(3,p^m)|", 3 * psu3_order(checked_pow(p, m)), "m=" + std::to_string(m));
      e.subfield_q = checked_pow(p, m);
      out.push_back(e);
    }
    if ((qv + 1) % 9 == 0) out.push_back(entry("MH-viii", "216", 216));
    if ((qv + 1) % 3 == 0) {
      out.push_back(entry("MH-viii", "72", 72));
      out.push_back(entry("MH-viii", "36", 36));
    }
    if (p == 7 || !square_in(-7, p, k)) out.push_back(entry("MH-ix", "168", 168));
    if ((p == 3 && k % 2 == 0) || (square_in(5, p, k) && (qv - 1) % 3 != 0)) out.push_back(entry("MH-x", "360", 360));
    if (p == 5 && k % 2 == 1) {
      out.push_back(entry("MH-xi", "720", 720));
      out.push_back(entry("MH-xii", "2520", 2520));
    }
  } else {
    for (unsigned m = 1; m < k; ++m) {
      if (k % m || (k / m) % 2 == 0 || !is_prime(k / m)) continue;
      CatalogEntry e = entry("MH-xiii", "|PSU(3,2^m)|", psu3_order(checked_pow(2, m)), "m=" + std::to_string(m));
      e.subfield_q = checked_pow(2, m);
      out.push_back(e);
    }
    if (k % 3 == 0 && (k / 3) % 2 == 1) {
      const unsigned m = k / 3;
      CatalogEntry e = entry("MH-xiv", "3|PSU(3,2^m)|", 3 * psu3_order(checked_pow(2, m)), "m=" + std::to_string(m));
      e.subfield_q = checked_pow(2, m);
      out.push_back(e);
    }
    if (k == 1) out.push_back(entry("MH-xv", "36", 36));
  }
  return out;
}

std::vector<CatalogEntry> order_excluded(const BigInt &m, u64 q, unsigned multiplier) {
  if (m < 1) throw std::invalid_argument("order must be positive");
  std::vector<CatalogEntry> out;
  for (auto &e : mh_orders(q))
    if ((e.order * multiplier) % m == 0) out.push_back(e);
  return out;
}

std::vector<CatalogEntry> dickson_orders(u64 qv) {
  const auto [p, k] = require_prime_power(qv);
  const BigInt q = qv;
  std::vector<CatalogEntry> out;
  std::vector<u64> hs = divisors(qv - 1);
  for (u64 h : divisors(qv + 1)) hs.push_back(h);
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  for (u64 h : hs) {
    CatalogEntry e = entry("Di-i", "h", h, "h=" + std::to_string(h));
    e.cyclic = true;
    out.push_back(e);
  }
  for (unsigned f = 1; f <= k; ++f) {
    CatalogEntry e = entry("Di-ii", "p^f", checked_pow(p, f), "f=" + std::to_string(f));
    e.cyclic = f == 1;
    out.push_back(e);
  }
  for (u64 h : hs) {
    if (h < 2) continue;
    CatalogEntry e = entry("Di-iii", "2h", 2 * BigInt(h), "h=" + std::to_string(h));
    e.cyclic = h == 1;
    out.push_back(e);
  }
  if (p > 2 || k % 2 == 0) out.push_back(entry("Di-iv", "12", 12));
  if ((q * q - 1) % 16 == 0) out.push_back(entry("Di-v", "24", 24));
  if (p == 5 || (q * q - 1) % 5 == 0) out.push_back(entry("Di-vi", "60", 60));
  for (unsigned f = 1; f <= k; ++f)
    for (u64 h : divisors(qv - 1)) {
      if (h < 2) continue;
      out.push_back(entry("Di-vii", "p^f h", BigInt(checked_pow(p, f)) * h, "f=" + std::to_string(f) + ",h=" + std::to_string(h)));
    }
  for (unsigned f = 1; f <= k; ++f) {
    if (k % f) continue;
    const BigInt pf = checked_pow(p, f);
    const unsigned g = p == 2 ? 1 : 2;
    out.push_back(entry("Di-viii", "p^f(p^2f-1)/gcd(2,p^f-1)", pf * (pf * pf - 1) / g, "f=" + std::to_string(f)));
    out.push_back(entry("Di-ix", "p^f(p^2f-1)", pf * (pf * pf - 1), "f=" + std::to_string(f)));
  }
  return out;
}

std::vector<CatalogEntry> noncyclic_odd_order(u64 q) {
  std::vector<CatalogEntry> out;
  for (auto &e : dickson_orders(q))
    if (!e.cyclic && e.order % 2 == 1) out.push_back(e);
  return out;
}

std::vector<CatalogEntry> noncyclic_odd_coprime(u64 q) {
  const u64 p = require_prime_power(q).first;
  std::vector<CatalogEntry> out;
  for (auto &e : noncyclic_odd_order(q))
    if (e.order % p != 0) out.push_back(e);
  return out;
}

ScanReport lemmino_scan(unsigned m_max) {
  if (m_max < 3 || m_max > 60) throw std::invalid_argument("m_max must lie in [3, 60]");
  ScanReport rep;
  auto fail = [&](unsigned pp, unsigned m, const std::string &c) {
    rep.counterexamples.push_back("p'=" + std::to_string(pp) + " m=" + std::to_string(m) + " case " + c);
  };
  for (unsigned pp = 3; pp <= m_max; pp += 2) {
    if (!is_prime(pp)) continue;
    for (unsigned m = 1; m <= m_max; m += 2) {
      if (pp == 3 && m < 5) continue;
      const BigInt two_m = pow2(m);
      const BigInt top = pow2(pp * m) + 1;
      const BigInt G = top / 3;
      const BigInt S = top / (two_m + 1);
      const std::vector<CatalogEntry> sub = mh_orders(checked_pow(2, m));
      auto order_of_case = [&](const std::string &label) {
        for (const auto &e : sub)
          if (e.label == label) return e.order;
        throw std::logic_error("missing case " + label);
      };
      ++rep.checks;
      if ((two_m * two_m - 1) % S == 0 || order_of_case("MH-ii") % G == 0) fail(pp, m, "ii");
      ++rep.checks;
      if (S <= 3 * (two_m + 1) || order_of_case("MH-iii") % G == 0) fail(pp, m, "iii");
      ++rep.checks;
      if (G <= two_m * two_m - two_m + 1 || order_of_case("MH-iv") % G == 0) fail(pp, m, "iv");
      for (const auto &e : sub) {
        if (e.label == "MH-xiii") {
          ++rep.checks;
          BigInt biggest = 0;
          for (const auto &f : mh_orders(e.subfield_q)) biggest = std::max(biggest, f.order);
          if (G <= biggest) fail(pp, m, "xiii " + e.params);
        } else if (e.label == "MH-xiv") {
          for (const auto &f : mh_orders(e.subfield_q)) {
            ++rep.checks;
            if ((3 * f.order) % G == 0) fail(pp, m, "xiv " + e.params + " " + f.label);
          }
        }
      }
      if (m == 1) {
        ++rep.checks;
        if (36 % G == 0) fail(pp, m, "xv");
      }
    }
  }
  return rep;
}

std::vector<QuattordiciSurvivor> quattordici(unsigned m_max) {
  if (m_max > 60) throw std::invalid_argument("m_max must be at most 60");
  std::vector<QuattordiciSurvivor> out;
  for (unsigned m = 3; m <= m_max; ++m) {
    const BigInt G = (pow2(3 * m) + 1) / 3;
    for (const auto &e : order_excluded(G, checked_pow(2, m), 3)) out.push_back({m, e.label});
  }
  return out;
}

std::vector<long long> primovalore_remainder() {
  // q^9 (q^9+1)(q^6-1) = q^24 - q^18 + q^15 - q^9
  std::vector<BigInt> a(25, 0);
  a[24] = 1;
  a[18] = -1;
  a[15] = 1;
  a[9] = -1;
  // divide by q^2 + q + 2 (monic)
  for (int n = 24; n >= 2; --n) {
    const BigInt c = a[n];
    if (c == 0) continue;
    a[n] -= c;
    a[n - 1] -= c;
    a[n - 2] -= 2 * c;
  }
  return {static_cast<long long>(a[0]), static_cast<long long>(a[1])};
}

PrimovaloreResult primovalore_scan(u64 q_max, unsigned threads) {
  if (q_max < 1 || q_max > (u64{1} << 30)) throw std::invalid_argument("q_max out of range");
  PrimovaloreResult res;
  res.remainder = primovalore_remainder();
  const long long r0 = res.remainder[0], r1 = res.remainder[1];
  threads = std::max(1u, threads);
  std::vector<std::vector<u64>> direct(threads);
  auto work = [&](unsigned t) {
    for (u64 q = 1 + t; q <= q_max; q += threads) {
      const BigInt b = q;
      const BigInt q3 = b * b * b;
      const BigInt q6 = q3 * q3;
      const BigInt q9 = q6 * q3;
      const BigInt n = q9 * (q9 + 1) * (q6 - 1);
      if (n % (b * b + b + 2) == 0) direct[t].push_back(q);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto &th : pool) th.join();
  }
  for (auto &v : direct) res.direct.insert(res.direct.end(), v.begin(), v.end());
  std::sort(res.direct.begin(), res.direct.end());
  for (u64 q = 1; q <= q_max; ++q) {
    const __int128 d = static_cast<__int128>(q) * q + q + 2;
    const __int128 v = static_cast<__int128>(r1) * q + r0;
    if (v % d == 0) res.linear.push_back(q);
  }
  return res;
}

SecondovaloreResult secondovalore_check(u64 q) {
  const u64 Q = checked_pow(q, 3);
  SecondovaloreResult res;
  res.group_order = BigInt(q) * q + q + 1;
  const BigInt &m = res.group_order;
  for (const auto &e : mh_orders(Q)) {
    const std::string name = e.label + (e.params.empty() ? "" : "[" + e.params + "]");
    if (e.subfield_q) {
      for (const auto &f : mh_orders(e.subfield_q))
        for (unsigned mult : {1u, 3u}) {
          ++res.checked;
          const std::string sub = name + "/" + f.label + (mult == 3 ? "x3" : "");
          ((f.order * mult) % m == 0 ? res.survivors : res.excluded).push_back(sub);
        }
    } else {
      ++res.checked;
      (e.order % m == 0 ? res.survivors : res.excluded).push_back(name);
    }
  }
  return res;
}

}  // namespace hq
