#include "hq/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace hq {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd_u64(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::map<u64, unsigned> &out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<u64, unsigned> factor(u64 n) {
  if (n == 0) throw std::invalid_argument("factor(0)");
  std::map<u64, unsigned> out;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  factor_into(n, out);
  return out;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) throw std::overflow_error("checked_pow overflow");
    result *= base;
  }
  return result;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = factor(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f.begin()->first, f.begin()->second);
}

u64 inverse_mod(u64 a, u64 m) {
  // extended Euclid on signed 128-bit values
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 quot = r / new_r;
    __int128 tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

FactoredInt::FactoredInt(u64 n) {
  if (n == 0) throw std::invalid_argument("FactoredInt(0)");
  primes_ = factor(n);
}

FactoredInt &FactoredInt::operator*=(const FactoredInt &other) {
  for (auto [p, e] : other.primes_) primes_[p] += e;
  return *this;
}

bool FactoredInt::divisible_by(u64 prime) const { return primes_.count(prime) != 0; }

void FactoredInt::divide_by_prime(u64 prime) {
  auto it = primes_.find(prime);
  if (it == primes_.end()) throw std::invalid_argument("FactoredInt: not divisible");
  if (--it->second == 0) primes_.erase(it);
}

std::optional<u64> FactoredInt::value() const {
  u128 v = 1;
  for (auto [p, e] : primes_) {
    for (unsigned i = 0; i < e; ++i) {
      v *= p;
      if (v > UINT64_MAX) return std::nullopt;
    }
  }
  return static_cast<u64>(v);
}

}  // namespace hq

namespace hq {

std::vector<u64> divisors(u64 n) {
  if (n == 0) throw std::invalid_argument("divisors of 0");
  std::vector<u64> out{1};
  for (const auto &[p, e] : factor(n)) {
    const size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hq
