#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hq {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 gcd_u64(u64 a, u64 b);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

// Prime factorisation (trial division + Pollard rho). factor(1) is empty.
std::map<u64, unsigned> factor(u64 n);

// All positive divisors in increasing order; divisors(0) throws.
std::vector<u64> divisors(u64 n);

// Throws std::overflow_error if the result does not fit in 64 bits.
u64 checked_pow(u64 base, unsigned exp);

// q = p^k with p prime, or nullopt.
std::optional<std::pair<u64, unsigned>> prime_power(u64 q);

// Inverse of a modulo m (gcd(a,m) must be 1).
u64 inverse_mod(u64 a, u64 m);

/// A positive integer held as its prime factorisation; lets group orders
/// such as q^3 (q^3+1)(q^2-1) exceed 64 bits while exponents stay small.
class FactoredInt {
public:
  FactoredInt() = default;
  explicit FactoredInt(u64 n);

  FactoredInt &operator*=(const FactoredInt &other);
  FactoredInt &operator*=(u64 n) { return *this *= FactoredInt(n); }

  const std::map<u64, unsigned> &primes() const { return primes_; }
  bool divisible_by(u64 prime) const;
  void divide_by_prime(u64 prime);
  // Value if it fits in 64 bits.
  std::optional<u64> value() const;

private:
  std::map<u64, unsigned> primes_;
};

}  // namespace hq
