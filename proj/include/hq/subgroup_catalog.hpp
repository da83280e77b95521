#pragma once

// Order catalogs for the maximal subgroups of PSU(3,q) and the subgroups of
// PGL(2,q), and the integer case scans built on them.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hq/numtheory.hpp"

namespace hq {

using BigInt = boost::multiprecision::cpp_int;

struct CatalogEntry {
  std::string label;    // "MH-ii", "Di-vii", ...
  std::string formula;  // order as a formula in q and the entry's parameters
  std::string params;   // e.g. "m=2" or "h=5"; empty when none
  BigInt order;
  bool cyclic = false;  // Dickson entries only
  u64 subfield_q = 0;   // Q of the PSU(3,Q) in the subfield cases
};

BigInt psu3_order(u64 Q);  // Q^3 (Q^2-1)(Q^3+1)/gcd(3,Q+1)
BigInt pgu3_order_big(u64 Q);

// Applicable maximal-subgroup cases of PSU(3,q), one entry per parameter value.
// Throws std::invalid_argument if q is not a prime power.
std::vector<CatalogEntry> mh_orders(u64 q);

// Entries whose order times multiplier is divisible by m.
std::vector<CatalogEntry> order_excluded(const BigInt &m, u64 q, unsigned multiplier);

// Subgroup orders of PGL(2,q).
std::vector<CatalogEntry> dickson_orders(u64 q);
// Non-cyclic entries of odd order; empty means every odd-order subgroup is cyclic.
std::vector<CatalogEntry> noncyclic_odd_order(u64 q);
// Same restricted to orders coprime to p.
std::vector<CatalogEntry> noncyclic_odd_coprime(u64 q);

struct ScanReport {
  u64 checks = 0;
  std::vector<std::string> counterexamples;
};

// For odd primes p' <= m_max and odd m <= m_max with p' >= 5, or p' = 3 and
// m >= 5: the impossibility conditions for |G| = (2^{p'm}+1)/3 against the
// maximal subgroups of PSU(3,2^m).
ScanReport lemmino_scan(unsigned m_max);

struct QuattordiciSurvivor {
  unsigned m = 0;
  std::string label;
};

// For m in [3, m_max]: cases of PSU(3,2^m) whose order times 3 is divisible
// by (2^{3m}+1)/3.
std::vector<QuattordiciSurvivor> quattordici(unsigned m_max);

struct PrimovaloreResult {
  std::vector<u64> direct;  // q with q^2+q+2 | q^9 (q^9+1)(q^6-1)
  std::vector<u64> linear;  // q with q^2+q+2 | 2128 q - 1568
  std::vector<long long> remainder;  // remainder of the polynomial division, low degree first
  bool agree() const { return direct == linear; }
};

// Integer coefficients of q^9 (q^9+1)(q^6-1) mod q^2+q+2.
std::vector<long long> primovalore_remainder();
PrimovaloreResult primovalore_scan(u64 q_max, unsigned threads = 1);

struct SecondovaloreResult {
  BigInt group_order;  // q^2+q+1
  std::vector<std::string> survivors;  // case labels whose orders are divisible
  std::vector<std::string> excluded;
  u64 checked = 0;
};

// Candidate order q^2+q+1 against the maximal subgroups of PSU(3,q^3) and,
// for the subfield cases, against the maximal subgroups of PSU(3,p^m) with
// multipliers 1 and 3.
SecondovaloreResult secondovalore_check(u64 q);

}  // namespace hq
