#include "hq/poly.hpp"

#include <algorithm>

namespace hq::poly {

void trim(Poly &a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int degree(const Poly &a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly &a, const Poly &b) {
  Poly r = a.size() >= b.size() ? a : b;
  const Poly &s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  trim(r);
  return r;
}

Poly sub(const Poly &a, const Poly &b) {
  Poly nb;
  for (const auto &c : b) nb.push_back(-c);
  return add(a, nb);
}

Poly mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty()) return {};
  const FieldCtx &f = a[0].field();
  Poly r(a.size() + b.size() - 1, f.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly &a, const FieldElem &c) {
  Poly r;
  for (const auto &x : a) r.push_back(x * c);
  trim(r);
  return r;
}

Poly monic(const Poly &a) {
  if (a.empty()) return a;
  return scale(a, a.back().inverse());
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
  if (b.empty()) throw FieldError("polynomial division by zero");
  Poly r = a;
  trim(r);
  const FieldCtx &f = b[0].field();
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, f.zero());
  const FieldElem lead_inv = b.back().inverse();
  while (r.size() >= b.size()) {
    const size_t shift = r.size() - b.size();
    const FieldElem c = r.back() * lead_inv;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly mod(const Poly &a, const Poly &b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly powmod(Poly base, u64 e, const Poly &m) {
  const FieldCtx &f = m[0].field();
  Poly result = mod(Poly{f.one()}, m);
  base = mod(base, m);
  while (e) {
    if (e & 1) result = mod(mul(result, base), m);
    e >>= 1;
    if (e) base = mod(mul(base, base), m);
  }
  return result;
}

FieldElem eval(const Poly &a, const FieldElem &x) {
  FieldElem acc = x.field().zero();
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

namespace {

// g monic, squarefree, splits into distinct linear factors over its field.
void split(const Poly &g, std::vector<FieldElem> &out) {
  const int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(-g[0]);
    return;
  }
  const FieldCtx &f = g[0].field();
  const u64 p = f.characteristic();
  for (u64 v = 1; v < f.size(); ++v) {
    const FieldElem beta = f.element(v);
    Poly h;
    if (p == 2) {
      // absolute trace of beta*X modulo g
      Poly term = mod(Poly{f.zero(), beta}, g), acc;
      for (unsigned i = 0; i < f.degree(); ++i) {
        acc = add(acc, term);
        term = mod(mul(term, term), g);
      }
      h = gcd(g, acc);
    } else {
      Poly t = powmod(Poly{beta, f.one()}, (f.size() - 1) / 2, g);
      h = gcd(g, sub(t, Poly{f.one()}));
    }
    if (degree(h) > 0 && degree(h) < d) {
      split(h, out);
      split(divmod(g, h).first, out);
      return;
    }
  }
  throw FieldError("root splitting did not terminate");
}

}  // namespace

std::vector<FieldElem> roots(const Poly &f_in) {
  Poly f = f_in;
  trim(f);
  if (f.empty()) throw FieldError("roots of the zero polynomial");
  if (degree(f) == 0) return {};
  const FieldCtx &field = f[0].field();
  f = monic(f);
  Poly xq = powmod(Poly{field.zero(), field.one()}, field.size(), f);
  Poly g = gcd(f, sub(xq, Poly{field.zero(), field.one()}));
  std::vector<FieldElem> out;
  split(g, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hq::poly
