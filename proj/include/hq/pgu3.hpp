#pragma once

// Projectivities of PG(2,F): 3x3 invertible matrices modulo scalars, the
// unitary groups of a Hermitian form, named elements, and subgroup closure.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hq/curve_models.hpp"

namespace hq {

using Mat3 = std::array<Triple, 3>;

Mat3 mat_identity(const FieldCtx &f);
Mat3 mat_mul(const Mat3 &a, const Mat3 &b);
FieldElem mat_det(const Mat3 &a);
Mat3 mat_adjugate(const Mat3 &a);
Mat3 mat_scale(const Mat3 &a, const FieldElem &s);
Mat3 mat_map(const TowerMap &m, const Mat3 &a);
bool mat_is_scalar(const Mat3 &a);

class Projectivity {
public:
  Projectivity() = default;
  // Throws FieldError if singular.
  explicit Projectivity(const Mat3 &m);
  static Projectivity identity(const FieldCtx &f);

  // Canonical representative: first nonzero entry (row-major) equal to 1.
  const Mat3 &mat() const { return m_; }
  const FieldCtx &field() const { return m_[0][0].field(); }
  bool is_identity() const;

  Projectivity operator*(const Projectivity &o) const;
  Projectivity inverse() const;
  Projectivity pow(u64 e) const;
  ProjPoint apply(const ProjPoint &p) const;  // embeds into the point's field when needed
  ProjLine apply(const ProjLine &l) const;    // image of a line: l * M^{-1}
  // Same projectivity with entries embedded in an extension of field().
  Projectivity lifted(const FieldCtx &ext) const;

  bool operator==(const Projectivity &o) const { return m_ == o.m_; }
  bool operator!=(const Projectivity &o) const { return !(*this == o); }
  bool operator<(const Projectivity &o) const;
  std::size_t hash() const;
  std::string str() const;

private:
  Mat3 m_;
};

struct ProjectivityHash {
  std::size_t operator()(const Projectivity &p) const { return p.hash(); }
};

// lambda with conj(M)^T G M = lambda G, if any.
std::optional<FieldElem> unitary_scalar(const Mat3 &m, const HermitianForm &h);
bool is_unitary(const Mat3 &m, const HermitianForm &h);
bool is_unitary(const Projectivity &m, const CurveModel &model);
// det is a cube in F_{q^2} (scalar normalization does not change the class).
// Throws FieldError if m is not unitary.
bool in_psu(const Projectivity &m, const HermitianForm &h);

FactoredInt pgu_order(u64 q);                 // q^3 (q^3+1)(q^2-1)
FactoredInt pgl3_order(const FieldCtx &f);    // |PGL(3,F)|
// Least n >= 1 with m^n scalar, by descent over the divisors of |PGL(3,F)|.
u64 order_of(const Projectivity &m);

Projectivity make_alpha(const FieldElem &theta, long long i);       // diag(theta, theta^i, 1)
enum class CycleShape { XYT, XTY };
// XYT: [[0,l,0],[0,0,m],[1,0,0]]; XTY: [[0,0,l],[m,0,0],[0,1,0]].
// Requires l^{q+1} = m^{q+1} = 1.
Projectivity make_three_cycle(const FieldElem &lambda, const FieldElem &mu, u64 q, CycleShape shape = CycleShape::XYT);
// (X + cT, Y, T) with c^Q + c = 0.
Projectivity make_beta(const FieldElem &c, u64 Q);
// (a^{Q+1} X, a Y, T), a != 0.
Projectivity make_alpha_a(const FieldElem &a, u64 Q);
// (X + b^Q Y + c T, Y + b T, T) with c^Q + c = b^{Q+1}: norm-trace Sylow p-element.
Projectivity make_unipotent(const FieldElem &b, const FieldElem &c, u64 Q);

class ClosureCapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SubgroupSpec {
public:
  SubgroupSpec() = default;
  SubgroupSpec(std::vector<Projectivity> gens, std::vector<Projectivity> elements);

  const std::vector<Projectivity> &generators() const { return gens_; }
  // Breadth-first closure order; identity first.
  const std::vector<Projectivity> &elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Projectivity &g) const { return index_.count(g) != 0; }
  std::size_t index_of(const Projectivity &g) const;
  bool is_normal_in(const SubgroupSpec &over) const;  // conjugation of generators
  bool is_subgroup_of(const SubgroupSpec &over) const;

private:
  std::vector<Projectivity> gens_;
  std::vector<Projectivity> elements_;
  std::unordered_map<Projectivity, std::size_t, ProjectivityHash> index_;
};

inline constexpr std::size_t kDefaultClosureCap = 2'000'000;
SubgroupSpec generate(const std::vector<Projectivity> &gens, std::size_t cap = kDefaultClosureCap);

}  // namespace hq
