#pragma once

// The curve families: Hermitian curves (Fermat and norm-trace models), the
// generalized GK curves C_{l^n} and the plane curves X_l : Y^{l^2-l+1} = X^{l^2} - X.

#include <optional>
#include <string>
#include <vector>

#include "hq/proj3.hpp"

namespace hq {

enum class Family { FermatHermitian, NormTraceHermitian, GeneralizedGK, GarciaStichtenoth };

class CurveModel {
public:
  static CurveModel fermat(u64 q);
  static CurveModel norm_trace(u64 q);
  // X^l + X = Y^{l+1}, Y^{l^2} - Y = Z^{(l^n+1)/(l+1)}; n >= 3 odd.
  static CurveModel gk(u64 ell, unsigned n);
  static CurveModel gs(u64 ell);

  Family family() const { return family_; }
  // Hermitian: q. GK: l^n. GS: l.
  u64 q() const { return q_; }
  u64 ell() const { return ell_; }
  unsigned n() const { return n_; }
  unsigned dimension() const { return family_ == Family::GeneralizedGK ? 3 : 2; }
  bool hermitian() const { return family_ == Family::FermatHermitian || family_ == Family::NormTraceHermitian; }
  // Field of maximality: F_{q^2}, F_{l^{2n}} or F_{l^6}.
  const Field &base() const { return base_; }
  u64 genus() const { return genus_; }
  std::string name() const;

  // Throws FieldError for non-Hermitian models.
  const HermitianForm &form() const;

private:
  CurveModel() = default;

  Family family_{};
  u64 q_ = 0, ell_ = 0;
  unsigned n_ = 0;
  Field base_;
  u64 genus_ = 0;
  std::optional<HermitianForm> form_;
};

// Plane models: exact evaluation of the projective equation. For X_l the
// projective closure is Y^{d} T^{l^2-d} = X^{l^2} - X T^{l^2-1}, d = l^2-l+1.
bool contains(const CurveModel &model, const ProjPoint &p);
// GK model: affine (x,y,z), or nullopt for the unique point at infinity.
bool contains(const CurveModel &model, const std::optional<std::array<FieldElem, 3>> &affine);

ProjLine polar(const ProjPoint &p, const CurveModel &model);

// Points rational over `over` (default: the model's maximality field),
// counted on the nonsingular model (one place at infinity for X_l and GK).
u64 count_rational_points(const CurveModel &model, const Field &over = nullptr, unsigned threads = 1);
// Every point of a Hermitian curve over `over`, canonical order.
std::vector<ProjPoint> rational_points(const CurveModel &model, const Field &over = nullptr);

// |F| + 1 + 2 g sqrt|F|, for a square field size.
u64 hasse_weil_bound(const CurveModel &model, const Field &over);
bool maximality_check(const CurveModel &model, const Field &over = nullptr, unsigned threads = 1);

inline constexpr u64 kEnumerationCap = u64{1} << 24;

}  // namespace hq
