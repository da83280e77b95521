#pragma once

// Riemann-Hurwitz accounting for subgroups of PGU(3,Q) acting on H_Q.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hq/group_action.hpp"

namespace hq {

class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Contribution {
  u64 value = 0;
  std::string tag;  // tame-fixed-points, tame-homology, wild-involution, wild-order-4
};

// Different contribution of a nontrivial unitary projectivity. Tame elements
// contribute their fixed curve points; in characteristic 2 involutions give
// Q+2 and elements of order 4 give 2. Other wild elements throw UnsupportedError.
Contribution i_sigma(const Projectivity &sigma, const CurveModel &model);

struct ElementRecord {
  std::size_t element_id = 0;  // index in the group's element list
  u64 order = 0;
  bool wild = false;
  u64 value = 0;
  std::string tag;
};

struct RamificationLedger {
  std::string model;
  u64 group_order = 0;
  std::vector<ElementRecord> records;
  u64 delta = 0;
  u64 g_top = 0;
  std::optional<u64> g_quot;  // only when 2g-2-delta = |G|(2g'-2) has a solution g' >= 0
  bool consistent() const { return g_quot.has_value(); }
};

RamificationLedger different_degree(const SubgroupSpec &g, const CurveModel &model);

// (2 g_top - 2) - n (2 g_quot - 2)
long long expected_delta(long long g_top, long long g_quot, long long n);

// Quotient genus from Riemann-Hurwitz, if integral and nonnegative.
std::optional<u64> quotient_genus(u64 g_top, u64 n, u64 delta);

struct ProfileEntry {
  u64 order = 0;
  u64 count = 0;
};

struct Feasibility {
  bool feasible = false;
  u64 forced = 0;  // sum over elements whose contribution is determined
  std::string explanation;
};

// Whether the given element orders can have contributions summing to delta.
// Tame elements may contribute 0, 1, 2, 3 or Q+1; wild ones follow i_sigma.
Feasibility ledger_feasibility(u64 delta, const std::vector<ProfileEntry> &profile, const CurveModel &model);

}  // namespace hq
