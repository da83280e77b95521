#pragma once

// Dense univariate polynomials over a FieldCtx, low degree first.
// The zero polynomial is the empty vector; results are always trimmed.

#include <utility>
#include <vector>

#include "hq/gf_tower.hpp"

namespace hq::poly {

using Poly = std::vector<FieldElem>;

void trim(Poly &a);
int degree(const Poly &a);  // -1 for zero

Poly add(const Poly &a, const Poly &b);
Poly sub(const Poly &a, const Poly &b);
Poly mul(const Poly &a, const Poly &b);
Poly scale(const Poly &a, const FieldElem &c);
Poly monic(const Poly &a);

// a = q*b + r with deg r < deg b; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
Poly mod(const Poly &a, const Poly &b);
Poly gcd(Poly a, Poly b);  // monic, or zero
Poly powmod(Poly base, u64 e, const Poly &m);

FieldElem eval(const Poly &a, const FieldElem &x);

// Distinct roots of f in its coefficient field, in canonical order.
std::vector<FieldElem> roots(const Poly &f);

}  // namespace hq::poly
