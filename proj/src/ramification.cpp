#include "hq/ramification.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace hq {

namespace {

void require_hermitian(const CurveModel &model) {
  if (!model.hermitian()) throw UnsupportedError("ramification is only tracked on Hermitian curves, not " + model.name());
}

// Possible contributions of an element of the given order.
std::vector<u64> allowed_values(u64 order, const CurveModel &model) {
  const u64 p = model.base()->characteristic(), Q = model.q();
  if (order % p != 0) return {0, 1, 2, 3, Q + 1};
  if (p == 2 && order == 2) return {Q + 2};
  if (p == 2 && order == 4) return {2};
  throw UnsupportedError("no different contribution is tabulated for wild elements of order " + std::to_string(order));
}

std::string join_values(const std::vector<u64> &v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

Contribution i_sigma(const Projectivity &sigma, const CurveModel &model) {
  require_hermitian(model);
  if (sigma.is_identity()) throw FieldError("i(sigma) is defined for nontrivial elements only");
  if (!is_unitary(sigma, model)) throw FieldError("element does not preserve " + model.name());
  const u64 order = order_of(sigma);
  const u64 p = model.base()->characteristic();
  if (order % p != 0) {
    const FixedPointSet fp = fixed_points(sigma, model);
    return {fp.on_curve_count(), fp.axis ? "tame-homology" : "tame-fixed-points"};
  }
  if (p == 2 && order == 2) return {model.q() + 2, "wild-involution"};
  if (p == 2 && order == 4) return {2, "wild-order-4"};
  throw UnsupportedError("no different contribution is tabulated for wild elements of order " + std::to_string(order));
}

long long expected_delta(long long g_top, long long g_quot, long long n) { return (2 * g_top - 2) - n * (2 * g_quot - 2); }

std::optional<u64> quotient_genus(u64 g_top, u64 n, u64 delta) {
  // 2g - 2 - delta = n (2g' - 2)
  const long long lhs = 2 * static_cast<long long>(g_top) - 2 - static_cast<long long>(delta);
  const long long nn = static_cast<long long>(n);
  if (lhs % (2 * nn) != 0) return std::nullopt;
  const long long gq = 1 + lhs / (2 * nn);
  if (gq < 0) return std::nullopt;
  return static_cast<u64>(gq);
}

RamificationLedger different_degree(const SubgroupSpec &g, const CurveModel &model) {
  require_hermitian(model);
  RamificationLedger led;
  led.model = model.name();
  led.group_order = g.order();
  led.g_top = model.genus();
  const u64 p = model.base()->characteristic();
  for (std::size_t id = 0; id < g.elements().size(); ++id) {
    const Projectivity &s = g.elements()[id];
    if (s.is_identity()) continue;
    const Contribution c = i_sigma(s, model);
    const u64 order = order_of(s);
    led.records.push_back({id, order, order % p == 0, c.value, c.tag});
    led.delta += c.value;
  }
  led.g_quot = quotient_genus(led.g_top, led.group_order, led.delta);
  return led;
}

Feasibility ledger_feasibility(u64 delta, const std::vector<ProfileEntry> &profile, const CurveModel &model) {
  require_hermitian(model);
  Feasibility out;
  std::ostringstream why;
  std::vector<std::pair<ProfileEntry, std::vector<u64>>> free;
  for (const auto &e : profile) {
    std::vector<u64> vals = allowed_values(e.order, model);
    if (vals.size() == 1) {
      out.forced += e.count * vals[0];
      why << e.count << "x" << vals[0] << " (order " << e.order << ") ";
    } else if (e.count) {
      free.push_back({e, vals});
    }
  }
  why << "= " << out.forced;
  if (out.forced > delta) {
    why << " > " << delta;
    out.explanation = why.str();
    return out;
  }
  const u64 rest = delta - out.forced;
  std::vector<char> reach(rest + 1, 0);
  reach[0] = 1;
  for (const auto &[e, vals] : free) {
    for (u64 i = 0; i < e.count; ++i) {
      std::vector<char> next(rest + 1, 0);
      for (u64 s = 0; s <= rest; ++s) {
        if (!reach[s]) continue;
        for (u64 v : vals)
          if (s + v <= rest) next[s + v] = 1;
      }
      reach.swap(next);
    }
    why << "; " << e.count << " elements of order " << e.order << " contribute from " << join_values(vals);
  }
  out.feasible = reach[rest] != 0;
  why << "; remaining " << rest << (out.feasible ? " is reachable" : " is not reachable");
  out.explanation = why.str();
  return out;
}

}  // namespace hq
