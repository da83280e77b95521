#include "hq/proj3.hpp"

#include <sstream>
#include <tuple>

namespace hq {

namespace {

Triple normalized(const Triple &c) {
  const FieldCtx *f = c[0].field_ptr();
  if (!f || c[1].field_ptr() != f || c[2].field_ptr() != f)
    throw FieldError("projective coordinates must share one field");
  for (size_t i = 0; i < 3; ++i) {
    if (!c[i].is_zero()) {
      const FieldElem s = c[i].inverse();
      return {c[0] * s, c[1] * s, c[2] * s};
    }
  }
  throw FieldError("the zero triple is not a projective point");
}

Triple cross(const Triple &u, const Triple &v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

std::string triple_str(const Triple &c, char open, char close) {
  std::ostringstream os;
  os << open << c[0].value() << ',' << c[1].value() << ',' << c[2].value() << close;
  return os.str();
}

// (chart, a, b): chart 0 uses the affine coordinates X/T, Y/T.
std::tuple<int, u64, u64, u64> order_key(const Triple &c) {
  if (!c[2].is_zero()) {
    const FieldElem inv = c[2].inverse();
    return {0, (c[0] * inv).value(), (c[1] * inv).value(), 0};
  }
  return {1, c[0].value(), c[1].value(), 0};
}

bool triple_less(const Triple &a, const Triple &b) {
  if (a[0].field_ptr() != b[0].field_ptr()) {
    const FieldCtx &fa = a[0].field(), &fb = b[0].field();
    return std::make_pair(fa.size(), fa.characteristic()) < std::make_pair(fb.size(), fb.characteristic());
  }
  return order_key(a) < order_key(b);
}

}  // namespace

ProjPoint::ProjPoint(const Triple &coords) : c_(normalized(coords)) {}

std::string ProjPoint::str() const { return triple_str(c_, '(', ')'); }

bool ProjPoint::operator<(const ProjPoint &o) const { return triple_less(c_, o.c_); }

ProjLine::ProjLine(const Triple &coords) : c_(normalized(coords)) {}

std::string ProjLine::str() const { return triple_str(c_, '[', ']'); }

bool ProjLine::operator<(const ProjLine &o) const { return triple_less(c_, o.c_); }

ProjPoint normalize(const Triple &coords) { return ProjPoint(coords); }

bool incident(const ProjPoint &p, const ProjLine &l) {
  return (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]).is_zero();
}

ProjLine join(const ProjPoint &a, const ProjPoint &b) { return ProjLine(cross(a.coords(), b.coords())); }

ProjPoint meet(const ProjLine &a, const ProjLine &b) { return ProjPoint(cross(a.coords(), b.coords())); }

ProjPoint map_point(const TowerMap &m, const ProjPoint &p) { return ProjPoint(m(p[0]), m(p[1]), m(p[2])); }

HermitianForm HermitianForm::fermat(u64 q) {
  HermitianForm h;
  h.q = q;
  h.gram = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  return h;
}

HermitianForm HermitianForm::norm_trace(u64 q) {
  HermitianForm h;
  h.q = q;
  h.gram = {{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}};
  return h;
}

FieldElem conj(const FieldElem &x, u64 q) { return x.pow(q); }

FieldElem conj_inverse(const FieldElem &x, u64 q) {
  const FieldCtx &f = x.field();
  unsigned e = 0;
  for (u64 t = q; t > 1; t /= f.characteristic()) ++e;
  if (e == 0 || f.degree() % e != 0) throw FieldError("conjugation x -> x^q is not an automorphism of " + f.name());
  FieldElem r = x;
  for (unsigned i = 1; i < f.degree() / e; ++i) r = r.pow(q);
  return r;
}

FieldElem HermitianForm::value(const ProjPoint &p) const {
  const FieldCtx &f = p.field();
  FieldElem acc = f.zero();
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (gram[i][j]) acc += f.from_int(gram[i][j]) * p[i] * conj(p[j], q);
  return acc;
}

ProjLine polar(const ProjPoint &p, const HermitianForm &h) {
  const FieldCtx &f = p.field();
  Triple l{f.zero(), f.zero(), f.zero()};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (h.gram[i][j]) l[i] += f.from_int(h.gram[i][j]) * conj(p[j], h.q);
  return ProjLine(l);
}

ProjPoint pole(const ProjLine &l, const HermitianForm &h) {
  // Integer adjugate of the Gram matrix; the supported forms have det = +-1.
  const auto &g = h.gram;
  std::array<std::array<int, 3>, 3> adj{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = g[r0][c0] * g[r1][c1] - g[r0][c1] * g[r1][c0];
    }
  const int det = g[0][0] * adj[0][0] + g[0][1] * adj[1][0] + g[0][2] * adj[2][0];
  if (det != 1 && det != -1) throw FieldError("Gram matrix is not unimodular");
  const FieldCtx &f = l.field();
  Triple u{f.zero(), f.zero(), f.zero()};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (adj[i][j]) u[i] += f.from_int(adj[i][j] * det) * l[j];
  for (auto &x : u) x = conj_inverse(x, h.q);
  return ProjPoint(u);
}

std::vector<ProjPoint> line_points(const ProjLine &l, const Field &f) {
  if (l[0].field_ptr() != f.get()) throw FieldError("line is not defined over " + f->name());
  if (f->size() > (u64{1} << 24)) throw FieldError("line enumeration cap exceeded");
  const FieldElem a = l[0], b = l[1], c = l[2];
  const FieldElem zero = f->zero(), one = f->one();
  std::vector<ProjPoint> pts;
  pts.reserve(f->size() + 1);
  if (!b.is_zero()) {
    const FieldElem binv = -b.inverse();
    for (u64 v = 0; v < f->size(); ++v) {
      const FieldElem x = f->element(v);
      pts.emplace_back(x, (a * x + c) * binv, one);
    }
  } else if (!a.is_zero()) {
    const FieldElem x = -(c / a);
    for (u64 v = 0; v < f->size(); ++v) pts.emplace_back(x, f->element(v), one);
  }
  if (a.is_zero() && b.is_zero()) {
    pts.emplace_back(zero, one, zero);
    for (u64 v = 0; v < f->size(); ++v) pts.emplace_back(one, f->element(v), zero);
  } else {
    pts.emplace_back(-b, a, zero);
  }
  return pts;
}

}  // namespace hq
