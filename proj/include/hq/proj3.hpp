#pragma once

// Points and lines of the projective plane PG(2,F) and the unitary polarity
// of a Hermitian form.

#include <array>
#include <string>
#include <vector>

#include "hq/gf_tower.hpp"

namespace hq {

using Triple = std::array<FieldElem, 3>;

// Coordinates normalized so the first nonzero entry is 1.
class ProjPoint {
public:
  ProjPoint() = default;
  explicit ProjPoint(const Triple &coords);  // throws FieldError on (0,0,0)
  ProjPoint(const FieldElem &x, const FieldElem &y, const FieldElem &t) : ProjPoint(Triple{x, y, t}) {}

  const Triple &coords() const { return c_; }
  const FieldElem &operator[](size_t i) const { return c_[i]; }
  const FieldCtx &field() const { return c_[0].field(); }
  std::string str() const;

  // Equality of normalized coordinates; points over different fields differ.
  bool operator==(const ProjPoint &o) const { return c_ == o.c_; }
  bool operator!=(const ProjPoint &o) const { return !(*this == o); }
  // Canonical order: affine chart T=1 by (X/T, Y/T) first, then T=0.
  bool operator<(const ProjPoint &o) const;

private:
  Triple c_;
};

// Dual coordinates [a,b,c] of aX + bY + cT = 0, normalized like points.
class ProjLine {
public:
  ProjLine() = default;
  explicit ProjLine(const Triple &coords);
  ProjLine(const FieldElem &a, const FieldElem &b, const FieldElem &c) : ProjLine(Triple{a, b, c}) {}

  const Triple &coords() const { return c_; }
  const FieldElem &operator[](size_t i) const { return c_[i]; }
  const FieldCtx &field() const { return c_[0].field(); }
  std::string str() const;

  bool operator==(const ProjLine &o) const { return c_ == o.c_; }
  bool operator!=(const ProjLine &o) const { return !(*this == o); }
  bool operator<(const ProjLine &o) const;

private:
  Triple c_;
};

ProjPoint normalize(const Triple &coords);
bool incident(const ProjPoint &p, const ProjLine &l);
ProjLine join(const ProjPoint &a, const ProjPoint &b);
ProjPoint meet(const ProjLine &a, const ProjLine &b);
ProjPoint map_point(const TowerMap &m, const ProjPoint &p);

// Sesquilinear form h(u,v) = sum G_ij u_i v_j^q with integer Gram entries,
// defined over F_{q^2}.
struct HermitianForm {
  u64 q = 0;
  std::array<std::array<int, 3>, 3> gram{};

  static HermitianForm fermat(u64 q);      // X^{q+1} + Y^{q+1} + T^{q+1}
  static HermitianForm norm_trace(u64 q);  // X^q T + X T^q - Y^{q+1}

  FieldElem value(const ProjPoint &p) const;  // h(P,P) on the stored coordinates
};

// x -> x^q on a field containing F_{q^2}, and its inverse.
FieldElem conj(const FieldElem &x, u64 q);
FieldElem conj_inverse(const FieldElem &x, u64 q);

ProjLine polar(const ProjPoint &p, const HermitianForm &h);
ProjPoint pole(const ProjLine &l, const HermitianForm &h);

// All points of PG(2,f) on l in canonical order. The field must have at
// most 2^24 elements.
std::vector<ProjPoint> line_points(const ProjLine &l, const Field &f);

}  // namespace hq
