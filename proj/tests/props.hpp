#pragma once

// Property checks shared by the unit tests and the acceptance runner.
// Generators are plain mt19937_64 draws so every failure reproduces from its seed.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hq/group_action.hpp"
#include "hq/verifier.hpp"

namespace hq::props {

using Rng = std::mt19937_64;

inline FieldElem random_elem(const FieldCtx &f, Rng &rng) {
  return f.element(std::uniform_int_distribution<u64>(0, f.size() - 1)(rng));
}

inline FieldElem random_unit(const FieldCtx &f, Rng &rng) {
  return f.element(std::uniform_int_distribution<u64>(1, f.size() - 1)(rng));
}

inline ProjPoint random_point(const FieldCtx &f, Rng &rng) {
  for (;;) {
    Triple t{random_elem(f, rng), random_elem(f, rng), random_elem(f, rng)};
    if (!t[0].is_zero() || !t[1].is_zero() || !t[2].is_zero()) return ProjPoint(t);
  }
}

// Ring axioms, inverses, Frobenius additivity and Fermat's little theorem.
inline bool field_axioms(const Field &field, u64 seed, int trials) {
  const FieldCtx &f = *field;
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const FieldElem a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
    if (a + b != b + a || a * b != b * a) return false;
    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) return false;
    if (a * (b + c) != a * b + a * c) return false;
    if (a + f.zero() != a || a * f.one() != a || a - a != f.zero() || a + (-a) != f.zero()) return false;
    if ((a + b).frobenius() != a.frobenius() + b.frobenius()) return false;
    if (a.pow(f.size()) != a) return false;
    if (!a.is_zero() && (a * a.inverse() != f.one() || (b / a) * a != b)) return false;
  }
  return true;
}

// pole(polar(P)) = P, conjugate symmetry of incidence, and P on the curve
// exactly when P lies on its own polar.
inline bool polarity_involution(const CurveModel &model, u64 seed, int trials) {
  const FieldCtx &f = *model.base();
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const ProjPoint p = random_point(f, rng), r = random_point(f, rng);
    const ProjLine l = polar(p, model);
    if (pole(l, model.form()) != p) return false;
    if (incident(r, l) != incident(p, polar(r, model))) return false;
    if (incident(p, l) != contains(model, p)) return false;
  }
  for (const auto &p : rational_points(model))
    if (!incident(p, polar(p, model))) return false;
  return true;
}

// |orbit| * |stabilizer| = |G| for every orbit of a closed point set.
inline bool orbit_stabilizer(const SubgroupSpec &g, const std::vector<ProjPoint> &points) {
  for (const auto &orb : orbits(g, points)) {
    std::size_t stab = 0;
    for (const auto &x : g.elements()) stab += x.apply(orb.front()) == orb.front() ? 1 : 0;
    if (orb.size() * stab != g.order()) return false;
  }
  return true;
}

// Counting pairs (sigma != 1, P) with sigma P = P by elements and by points.
inline bool incidence_double_count(const SubgroupSpec &g, const CurveModel &model) {
  const StabilizerCensus c = incidence_census(g, model);
  if (!c.complete || c.incidence != c.incidence_by_points) return false;
  u64 by_points = 0;
  for (const auto &x : g.elements()) {
    if (x.is_identity()) continue;
    std::map<const FieldCtx *, Projectivity> over;
    for (const auto &p : c.points) {
      auto it = over.find(&p.field());
      if (it == over.end()) it = over.emplace(&p.field(), x.lifted(p.field())).first;
      if (it->second.apply(p) == p) ++by_points;
    }
  }
  return by_points == c.incidence;
}

// W swaps P_inf and the origin on the norm-trace model; with the Borel
// generators it reaches all of PGU(3,Q).
inline std::vector<Projectivity> pgu_generators(const CurveModel &nt) {
  const FieldCtx &f = *nt.base();
  const u64 Q = nt.q();
  const FieldElem z = f.zero(), o = f.one();
  std::vector<Projectivity> gens{Projectivity(Mat3{Triple{z, z, o}, Triple{z, o, z}, Triple{o, z, z}}),
                                 make_alpha_a(f.generator(), Q)};
  for (u64 b = 0; b < f.size() && gens.size() < 5; ++b) {
    const FieldElem bb = f.element(b), rhs = bb.pow(Q + 1);
    for (u64 c = 0; c < f.size(); ++c) {
      const FieldElem cc = f.element(c);
      if (cc.pow(Q) + cc == rhs && !(bb.is_zero() && cc.is_zero())) {
        gens.push_back(make_unipotent(bb, cc, Q));
        break;
      }
    }
  }
  return gens;
}

inline Projectivity random_word(const std::vector<Projectivity> &gens, Rng &rng, int length) {
  Projectivity w = Projectivity::identity(gens.front().field());
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int i = 0; i < length; ++i) w = w * gens[pick(rng)];
  return w;
}

// Eigen fixed points against brute force over the rational points; random
// PGU(3,Q) words on the norm-trace model.
inline bool fixed_point_oracle(u64 Q, u64 seed, int trials) {
  const CurveModel m = CurveModel::norm_trace(Q);
  const std::vector<ProjPoint> pts = rational_points(m);
  const std::vector<Projectivity> gens = pgu_generators(m);
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const Projectivity s = random_word(gens, rng, 1 + i % 12);
    if (!is_unitary(s, m)) return false;
    std::set<ProjPoint> brute;
    for (const auto &p : pts)
      if (s.apply(p) == p) brute.insert(p);
    const FixedPointSet fp = fixed_points(s, m);
    if (fp.kind == FixedKind::All) {
      if (!s.is_identity() || brute.size() != pts.size()) return false;
      continue;
    }
    std::set<ProjPoint> eigen;
    for (const auto &p : fp.curve_points())
      if (&p.field() == m.base().get()) eigen.insert(p);
    if (fp.complete() && eigen != brute) return false;
    if (fp.extension_degree == 1 && fp.complete() && fp.on_curve_count() != brute.size()) return false;
    for (const auto &p : brute)
      if (fp.complete() && !eigen.count(p)) return false;
  }
  return true;
}

inline std::string dump_all(const RunSummary &s) {
  std::string out;
  for (const auto &r : s.reports) out += r.to_json(false).dump() + "\n";
  return out;
}

// Byte-identical reports for 1 and `workers` concurrent checks.
inline bool run_all_deterministic(const std::string &filter, unsigned workers) {
  const std::string a = dump_all(run_all(filter, 1));
  const std::string b = dump_all(run_all(filter, workers));
  const std::string c = dump_all(run_all(filter, workers, RunOptions{workers, ""}));
  return !a.empty() && a == b && a == c;
}

}  // namespace hq::props
