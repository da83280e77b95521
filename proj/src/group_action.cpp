#include "hq/group_action.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hq/poly.hpp"

namespace hq {

namespace {

Field owning(const FieldCtx &f) {
  Field F = build_field(f.characteristic(), f.degree());
  if (F.get() != &f) throw FieldError(f.name() + " is not a registry field");
  return F;
}

// Null space basis of a 3x3 matrix.
std::vector<Triple> kernel(Mat3 a) {
  const FieldCtx &f = a[0][0].field();
  std::vector<int> pivot_of_col(3, -1);
  size_t row = 0;
  for (size_t c = 0; c < 3 && row < 3; ++c) {
    size_t piv = row;
    while (piv < 3 && a[piv][c].is_zero()) ++piv;
    if (piv == 3) continue;
    std::swap(a[piv], a[row]);
    const FieldElem inv = a[row][c].inverse();
    for (auto &x : a[row]) x *= inv;
    for (size_t r = 0; r < 3; ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const FieldElem m = a[r][c];
      for (size_t cc = 0; cc < 3; ++cc) a[r][cc] -= m * a[row][cc];
    }
    pivot_of_col[c] = static_cast<int>(row);
    ++row;
  }
  std::vector<Triple> basis;
  for (size_t free = 0; free < 3; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Triple v{f.zero(), f.zero(), f.zero()};
    v[free] = f.one();
    for (size_t c = 0; c < 3; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -a[pivot_of_col[c]][free];
    basis.push_back(v);
  }
  return basis;
}

Triple cross(const Triple &u, const Triple &v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// Coordinates pulled back to the subfield when they all lie there.
Triple pull_back(const Triple &v, const TowerMap *emb) {
  if (!emb) return v;
  for (const auto &x : v)
    if (!emb->in_image(x)) return v;
  return {emb->preimage(v[0]), emb->preimage(v[1]), emb->preimage(v[2])};
}

bool fixes(const Projectivity &g, const ProjPoint &p) { return g.apply(p) == p; }

}  // namespace

u64 FixedPointSet::on_curve_count() const {
  u64 n = 0;
  for (const auto &p : points) n += p.on_curve ? 1 : 0;
  if (axis) n += axis->curve_points;
  return n;
}

std::vector<ProjPoint> FixedPointSet::curve_points() const {
  std::vector<ProjPoint> out;
  for (const auto &p : points)
    if (p.on_curve) out.push_back(p.point);
  if (axis) out.insert(out.end(), axis->points.begin(), axis->points.end());
  std::sort(out.begin(), out.end());
  return out;
}

FixedPointSet fixed_points(const Projectivity &sigma, const CurveModel &model) {
  const HermitianForm &form = model.form();
  const FieldCtx &F = sigma.field();
  if (&F != model.base().get()) throw FieldError("projectivity and curve are over different fields");
  FixedPointSet out;
  if (sigma.is_identity()) {
    out.kind = FixedKind::All;
    return out;
  }
  const Mat3 &m = sigma.mat();
  const FieldElem tr = m[0][0] + m[1][1] + m[2][2];
  const FieldElem c2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                       m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const FieldElem det = mat_det(m);
  const poly::Poly chi{-det, c2, -tr, F.one()};

  // splitting degree from the factorization pattern over F
  poly::Poly rest = chi;
  for (const auto &r : poly::roots(chi)) {
    while (poly::degree(rest) > 0 && poly::eval(rest, r).is_zero()) rest = poly::divmod(rest, poly::Poly{-r, F.one()}).first;
  }
  const int rd = poly::degree(rest);
  out.extension_degree = rd == 0 ? 1 : static_cast<unsigned>(rd);

  const Field base = owning(F);
  Field E = base;
  const TowerMap *emb = nullptr;
  if (out.extension_degree > 1) {
    E = build_field(F.characteristic(), F.degree() * out.extension_degree);
    emb = &embed(base, E);
  }
  const Mat3 mE = emb ? mat_map(*emb, m) : m;
  poly::Poly chiE;
  for (const auto &c : chi) chiE.push_back(emb ? (*emb)(c) : c);

  for (const auto &e : poly::roots(chiE)) {
    Mat3 a = mE;
    for (size_t i = 0; i < 3; ++i) a[i][i] -= e;
    const std::vector<Triple> ker = kernel(a);
    if (ker.size() == 1) {
      ProjPoint p(pull_back(ProjPoint(ker[0]).coords(), emb));
      out.points.push_back({p, contains(model, p)});
    } else if (ker.size() == 2) {
      FixedAxis ax;
      ax.line = ProjLine(pull_back(ProjLine(cross(ker[0], ker[1])).coords(), emb));
      if (&ax.line.field() != &F) throw FieldError("axis of a projectivity is not rational over " + F.name());
      ax.tangent = contains(model, pole(ax.line, form));
      ax.curve_points = ax.tangent ? 1 : form.q + 1;
      if (F.table_mode()) {
        for (const auto &p : line_points(ax.line, base))
          if (contains(model, p)) ax.points.push_back(p);
        ax.enumerated = true;
        ax.curve_points = ax.points.size();
      }
      out.axis = std::move(ax);
      out.kind = FixedKind::LinePlusPoint;
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const FixedPoint &a, const FixedPoint &b) { return a.point < b.point; });
  return out;
}

bool is_semiregular(const SubgroupSpec &g, const CurveModel &model) {
  for (const auto &s : g.elements()) {
    if (s.is_identity()) continue;
    if (fixed_points(s, model).on_curve_count() != 0) return false;
  }
  return true;
}

std::vector<std::vector<ProjPoint>> orbits(const SubgroupSpec &g, const std::vector<ProjPoint> &points) {
  std::map<ProjPoint, size_t> idx;
  for (const auto &p : points) idx.emplace(p, idx.size());
  std::vector<ProjPoint> uniq;
  for (const auto &[p, i] : idx) uniq.push_back(p);
  std::set<ProjPoint> seen;
  std::vector<std::vector<ProjPoint>> out;
  for (const auto &start : uniq) {
    if (seen.count(start)) continue;
    std::vector<ProjPoint> orbit{start};
    seen.insert(start);
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (const auto &gen : g.generators()) {
        ProjPoint img = gen.apply(orbit[i]);
        if (!idx.count(img)) throw FieldError("point set is not closed under the group: " + img.str());
        if (seen.insert(img).second) orbit.push_back(img);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return out;
}

StabilizerCensus incidence_census(const SubgroupSpec &gbar, const CurveModel &model) {
  StabilizerCensus census;
  std::set<ProjPoint> pts;
  for (const auto &s : gbar.elements()) {
    if (s.is_identity()) continue;
    const FixedPointSet fp = fixed_points(s, model);
    census.incidence += fp.on_curve_count();
    if (!fp.complete()) census.complete = false;
    for (const auto &p : fp.curve_points()) pts.insert(p);
  }
  census.points.assign(pts.begin(), pts.end());
  std::map<const FieldCtx *, std::vector<const ProjPoint *>> by_field;
  for (const auto &p : census.points) by_field[&p.field()].push_back(&p);
  for (const auto &s : gbar.elements()) {
    if (s.is_identity()) continue;
    for (const auto &[f, group] : by_field) {
      const Projectivity t = s.lifted(*f);
      for (const ProjPoint *p : group) census.incidence_by_points += fixes(t, *p) ? 1 : 0;
    }
  }
  return census;
}

StabilizerCensus stabilizer_census(const SubgroupSpec &gbar, const SubgroupSpec &g_normal, const CurveModel &model) {
  if (!g_normal.is_subgroup_of(gbar) || !g_normal.is_normal_in(gbar))
    throw FieldError("census requires a normal subgroup");
  StabilizerCensus census = incidence_census(gbar, model);
  census.orbits = orbits(g_normal, census.points);
  return census;
}

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b) {
  Mat2 r;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

Mat2 mat2_canonical(const Mat2 &a) {
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      if (!a[i][j].is_zero()) {
        const FieldElem s = a[i][j].inverse();
        Mat2 r;
        for (size_t u = 0; u < 2; ++u)
          for (size_t v = 0; v < 2; ++v) r[u][v] = a[u][v] * s;
        return r;
      }
  throw FieldError("zero 2x2 matrix");
}

LineFrame::LineFrame(const ProjLine &l) {
  const FieldCtx &f = l.field();
  // rows: two unit vectors completing l to a basis of the dual space
  const Mat3 id = mat_identity(f);
  for (size_t a = 0; a < 3; ++a)
    for (size_t b = a + 1; b < 3; ++b) {
      Mat3 c{id[a], id[b], l.coords()};
      const FieldElem d = mat_det(c);
      if (d.is_zero()) continue;
      c_ = c;
      cinv_ = mat_scale(mat_adjugate(c), d.inverse());
      return;
    }
  throw FieldError("no frame for line " + l.str());
}

Mat3 LineFrame::conjugated(const Projectivity &sigma) const {
  if (&sigma.field() != &c_[0][0].field()) throw FieldError("projectivity and line are over different fields");
  return mat_mul(mat_mul(c_, sigma.mat()), cinv_);
}

bool LineFrame::stabilizes(const Projectivity &sigma) const {
  const Mat3 s = conjugated(sigma);
  return s[2][0].is_zero() && s[2][1].is_zero();
}

Mat2 LineFrame::restrict(const Projectivity &sigma) const {
  const Mat3 s = conjugated(sigma);
  if (!s[2][0].is_zero() || !s[2][1].is_zero()) throw FieldError("projectivity does not stabilize the line");
  const FieldElem inv = s[2][2].inverse();
  return Mat2{{{s[0][0] * inv, s[0][1] * inv}, {s[1][0] * inv, s[1][1] * inv}}};
}

Mat2 restrict_to_line(const Projectivity &sigma, const ProjLine &l) { return LineFrame(l).restrict(sigma); }

u64 element_order(const Projectivity &g, u64 bound) {
  Projectivity x = g;
  for (u64 k = 1; k <= bound; ++k) {
    if (x.is_identity()) return k;
    x = x * g;
  }
  throw FieldError("element order exceeds bound");
}

namespace {

bool is_power_of(u64 n, u64 p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<ProjPoint> common_fixed_curve_points(const SubgroupSpec &s, const CurveModel &model) {
  const Projectivity *first = nullptr;
  for (const auto &g : s.generators())
    if (!g.is_identity()) {
      first = &g;
      break;
    }
  if (!first) throw FieldError("trivial subgroup has no finite fixed-point set");
  const FixedPointSet fp = fixed_points(*first, model);
  if (!fp.complete()) throw FieldError("fixed curve points could not be listed");
  std::vector<ProjPoint> out;
  for (const auto &p : fp.curve_points()) {
    bool all = true;
    for (const auto &g : s.generators()) all = all && fixes(g, p);
    if (all) out.push_back(p);
  }
  return out;
}

}  // namespace

SylowCensus sylow_census(const SubgroupSpec &g, u64 p, const CurveModel &model) {
  const u64 n = g.order();
  if (!is_prime(p) || n % p != 0) throw FieldError(std::to_string(p) + " does not divide the group order");
  u64 sylow_order = 1;
  for (u64 t = n; t % p == 0; t /= p) sylow_order *= p;

  std::vector<Projectivity> p_elements;
  for (const auto &x : g.elements())
    if (!x.is_identity() && is_power_of(element_order(x, n), p)) p_elements.push_back(x);

  // grow a p-subgroup through normalizing p-elements until it is Sylow
  std::vector<Projectivity> gens;
  SubgroupSpec h = generate({Projectivity::identity(g.elements()[0].field())});
  while (h.order() < sylow_order) {
    bool grown = false;
    for (const auto &x : p_elements) {
      if (h.contains(x)) continue;
      const Projectivity xi = x.inverse();
      bool normalizes = true;
      for (const auto &y : h.generators()) normalizes = normalizes && h.contains(x * y * xi);
      if (!normalizes) continue;
      std::vector<Projectivity> trial = gens;
      trial.push_back(x);
      SubgroupSpec k = generate(trial);
      if (!is_power_of(k.order(), p)) continue;
      gens = trial;
      h = std::move(k);
      grown = true;
      break;
    }
    if (!grown) throw FieldError("failed to grow a Sylow subgroup");
  }

  SylowCensus out;
  out.prime = p;
  std::set<std::vector<Projectivity>> seen;
  for (const auto &x : g.elements()) {
    const Projectivity xi = x.inverse();
    std::vector<Projectivity> conj_gens, elems;
    for (const auto &y : gens) conj_gens.push_back(x * y * xi);
    for (const auto &y : h.elements()) elems.push_back(x * y * xi);
    std::sort(elems.begin(), elems.end());
    if (!seen.insert(elems).second) continue;
    out.subgroups.push_back(generate(conj_gens));
  }
  out.count = out.subgroups.size();
  std::vector<ProjPoint> all;
  for (const auto &s : out.subgroups) {
    out.fixed_points.push_back(common_fixed_curve_points(s, model));
    all.insert(all.end(), out.fixed_points.back().begin(), out.fixed_points.back().end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (!all.empty()) {
    try {
      out.fixed_points_single_orbit = orbits(g, all).size() == 1;
    } catch (const FieldError &) {
      out.fixed_points_single_orbit = false;
    }
  }
  return out;
}

bool sharply_2_transitive(const SubgroupSpec &g, const std::vector<ProjPoint> &orbit_in) {
  std::vector<ProjPoint> orbit = orbit_in;
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  const auto parts = orbits(g, orbit);  // validates closure
  const u64 n = orbit.size();
  if (n <= 1) return g.order() == 1;
  if (parts.size() != 1 || g.order() != n * (n - 1)) return false;
  for (const auto &s : g.elements()) {
    if (s.is_identity()) continue;
    u64 fixed = 0;
    for (const auto &p : orbit) fixed += fixes(s, p) ? 1 : 0;
    if (fixed >= 2) return false;
  }
  return true;
}

}  // namespace hq
