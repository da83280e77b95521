#pragma once

// Action of projectivities and finite subgroups on Hermitian curves.

#include <optional>
#include <vector>

#include "hq/pgu3.hpp"

namespace hq {

struct FixedPoint {
  ProjPoint point;  // over the matrix field when rational there, else its extension
  bool on_curve = false;
};

// A pointwise-fixed line (axis of a homology or elation).
struct FixedAxis {
  ProjLine line;
  bool tangent = false;     // its pole lies on the curve
  u64 curve_points = 0;     // 1 if tangent, else q+1
  bool enumerated = false;  // points below were listed from the line
  std::vector<ProjPoint> points;
};

enum class FixedKind { Points, LinePlusPoint, All };

struct FixedPointSet {
  FixedKind kind = FixedKind::Points;
  std::vector<FixedPoint> points;  // isolated fixed points, canonical order
  std::optional<FixedAxis> axis;
  unsigned extension_degree = 1;  // splitting field degree of the characteristic polynomial over F_{q^2}

  // Fixed points on the curve, counting the axis intersection.
  u64 on_curve_count() const;
  // The listed fixed curve points; complete unless an axis was not enumerated.
  std::vector<ProjPoint> curve_points() const;
  bool complete() const { return !axis || axis->enumerated; }
};

// Eigen-analysis over the splitting field of the characteristic polynomial.
// Requires a Hermitian model over the matrix field.
FixedPointSet fixed_points(const Projectivity &sigma, const CurveModel &model);

bool is_semiregular(const SubgroupSpec &g, const CurveModel &model);

// Orbits under the group generated by g's generators; each orbit sorted,
// orbits sorted by least point. Throws if the points are not closed.
std::vector<std::vector<ProjPoint>> orbits(const SubgroupSpec &g, const std::vector<ProjPoint> &points);

struct StabilizerCensus {
  u64 incidence = 0;            // sum over nontrivial elements of fixed curve points
  u64 incidence_by_points = 0;  // sum over census points of (|stabilizer| - 1), by direct action
  std::vector<ProjPoint> points;
  std::vector<std::vector<ProjPoint>> orbits;  // of points under the normal subgroup
  bool complete = true;
};

// Incidence and census points of gbar alone; orbits left empty.
StabilizerCensus incidence_census(const SubgroupSpec &gbar, const CurveModel &model);

// Throws FieldError unless g_normal is a normal subgroup of gbar.
StabilizerCensus stabilizer_census(const SubgroupSpec &gbar, const SubgroupSpec &g_normal, const CurveModel &model);

using Mat2 = std::array<std::array<FieldElem, 2>, 2>;

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b);
Mat2 mat2_canonical(const Mat2 &a);  // first nonzero entry 1

// Change of frame sending a line to T = 0.
class LineFrame {
public:
  explicit LineFrame(const ProjLine &l);
  bool stabilizes(const Projectivity &sigma) const;
  // Top-left block of the conjugated matrix scaled so its (3,3) entry is 1.
  // Throws FieldError if sigma does not stabilize the line.
  Mat2 restrict(const Projectivity &sigma) const;

private:
  Mat3 conjugated(const Projectivity &sigma) const;
  Mat3 c_, cinv_;
};

Mat2 restrict_to_line(const Projectivity &sigma, const ProjLine &l);

struct SylowCensus {
  u64 prime = 0;
  u64 count = 0;
  std::vector<SubgroupSpec> subgroups;
  std::vector<std::vector<ProjPoint>> fixed_points;  // common fixed curve points of each
  bool fixed_points_single_orbit = false;
};

// Throws FieldError if p does not divide |g|.
SylowCensus sylow_census(const SubgroupSpec &g, u64 p, const CurveModel &model);

// |g| = n(n-1) and only the identity fixes two orbit points; for a single
// point this holds only for the trivial group.
bool sharply_2_transitive(const SubgroupSpec &g, const std::vector<ProjPoint> &orbit);

// Least k >= 1 with g^k = 1.
u64 element_order(const Projectivity &g, u64 bound);

}  // namespace hq
