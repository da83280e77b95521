#pragma once

// Linearized polynomials sum c_i X^{p^i} over F_{p^m}, their p-associates
// sum c_i t^i, and division in the twisted ring where t a = a^p t.

#include <optional>
#include <string>
#include <vector>

#include "hq/gf_tower.hpp"
#include "hq/poly.hpp"

namespace hq {

class LinearizedPoly {
public:
  LinearizedPoly() = default;
  // coeffs[i] multiplies X^{p^i}; trailing zeros are dropped.
  LinearizedPoly(Field f, std::vector<FieldElem> coeffs);
  static LinearizedPoly x(Field f);                  // X
  static LinearizedPoly monomial(Field f, unsigned i, const FieldElem &c);  // c X^{p^i}

  const Field &field() const { return field_; }
  const std::vector<FieldElem> &coeffs() const { return c_; }
  FieldElem coeff(unsigned i) const;
  int p_degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  u64 degree() const;                                             // p^{p_degree}; 0 for zero
  bool is_zero() const { return c_.empty(); }
  bool separable() const { return !c_.empty() && !c_[0].is_zero(); }

  FieldElem operator()(const FieldElem &x) const;
  // Roots in the coefficient field: an F_p-basis and the root count.
  std::vector<FieldElem> kernel_basis() const;
  u64 kernel_size() const;
  // All roots in the coefficient field, canonical order; needs kernel_size() <= 2^20.
  std::vector<FieldElem> kernel() const;

  LinearizedPoly operator+(const LinearizedPoly &o) const;
  LinearizedPoly operator-(const LinearizedPoly &o) const;
  bool operator==(const LinearizedPoly &o) const { return c_ == o.c_; }
  std::string str() const;

private:
  Field field_;
  std::vector<FieldElem> c_;
};

// Monic linearized polynomial with the given roots. Throws FieldError unless
// the set is an additive subgroup of a single field.
LinearizedPoly from_kernel(const Field &f, const std::vector<FieldElem> &roots);

// outer(inner(X))
LinearizedPoly compose(const LinearizedPoly &outer, const LinearizedPoly &inner);
// F with F(inner(X)) = target, if it exists.
std::optional<LinearizedPoly> decompose(const LinearizedPoly &target, const LinearizedPoly &inner);

enum class Convention { Conventional, Twisted };

struct AssociatePoly {
  Field field;
  std::vector<FieldElem> coeffs;  // coeffs[i] multiplies t^i
  Convention convention = Convention::Conventional;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const AssociatePoly &o) const { return coeffs == o.coeffs && convention == o.convention; }
  std::string str() const;
};

AssociatePoly p_associate(const LinearizedPoly &l, Convention convention);
LinearizedPoly inverse_associate(const AssociatePoly &a);

// Product in the associate's ring; both factors must share field and convention.
AssociatePoly associate_mul(const AssociatePoly &a, const AssociatePoly &b);

struct AssociateDivision {
  AssociatePoly quotient;
  AssociatePoly remainder;
};

// a = q * b + r (right division). Twisted: a = q b; conventional: ordinary division.
AssociateDivision divide_right(const AssociatePoly &a, const AssociatePoly &b);
// a = b * q + r (left division, twisted only; conventional falls back to ordinary division).
AssociateDivision divide_left(const AssociatePoly &a, const AssociatePoly &b);

enum class Side { Left, Right };

// Twisted divisibility of m by l. Left: m = l o F; right: m = F o l.
bool symbolic_divides(const LinearizedPoly &l, const LinearizedPoly &m, Side side);

struct DivisibilityReport {
  bool division = false;                  // twisted division with zero remainder
  std::optional<bool> kernel_containment; // right side only, when l splits over its field
  bool conventional = false;              // conventional associate divides
  bool agree() const { return !kernel_containment || *kernel_containment == division; }
};

DivisibilityReport divisibility(const LinearizedPoly &l, const LinearizedPoly &m, Side side);

// Family A X^{q^2} + B X with A = a^{q^2}/k, B = -a/k over F_{q^6}, against
// X^{q^3} + X. Left scalars are normalized away: A t^2s + B = (a^{q^2}/k)(t^2s + w)
// with w = -a^{1-q^2}, so it suffices to scan the distinct w and every
// nonzero multiple c (X^{q^3}+X).
struct FamilyScan {
  u64 q = 0;
  u64 w_classes = 0;
  u64 pairs = 0;
  u64 twisted_divisible = 0;
  u64 conventional_divisible = 0;
};

FamilyScan prop1sylow_family_scan(u64 q, unsigned threads = 1);

}  // namespace hq
