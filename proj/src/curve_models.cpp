#include "hq/curve_models.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

namespace hq {

namespace {

std::pair<u64, unsigned> require_prime_power(u64 q) {
  auto pp = prime_power(q);
  if (!pp) throw FieldError(std::to_string(q) + " is not a prime power");
  return *pp;
}

u64 parallel_sum(u64 n, unsigned threads, const std::function<u64(u64, u64)> &chunk) {
  threads = std::max(1u, std::min<unsigned>(threads, 64));
  if (threads == 1 || n < 4096) return chunk(0, n);
  std::vector<u64> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const u64 lo = n * t / threads, hi = n * (t + 1) / threads;
    pool.emplace_back([&, t, lo, hi] { partial[t] = chunk(lo, hi); });
  }
  for (auto &th : pool) th.join();
  u64 total = 0;
  for (u64 v : partial) total += v;
  return total;
}

// Image of an F_p-linear map on F, as a basis of the image and the kernel size.
struct LinearImage {
  std::vector<u64> basis;
  u64 kernel_size = 1;
};

LinearImage linear_image(const FieldCtx &f, const std::function<u64(u64)> &map) {
  const u64 p = f.characteristic();
  const unsigned k = f.degree();
  std::vector<std::vector<u64>> rows;  // echelon rows (digit vectors)
  std::vector<unsigned> pivots;
  LinearImage out;
  u64 unit = 1;
  for (unsigned i = 0; i < k; ++i, unit *= p) {
    const u64 img = map(unit);
    std::vector<u64> d = f.digits(img);
    for (size_t r = 0; r < rows.size(); ++r) {
      const u64 c = d[pivots[r]];
      if (!c) continue;
      for (unsigned j = 0; j < k; ++j) d[j] = (d[j] + (p - mulmod(c, rows[r][j], p))) % p;
    }
    unsigned piv = 0;
    while (piv < k && d[piv] == 0) ++piv;
    if (piv == k) {
      out.kernel_size *= p;
      continue;
    }
    const u64 inv = inverse_mod(d[piv], p);
    for (auto &x : d) x = mulmod(x, inv, p);
    rows.push_back(d);
    pivots.push_back(piv);
    out.basis.push_back(img);
  }
  return out;
}

// The index-th element of the span (base-p digits of index as coefficients).
u64 span_element(const FieldCtx &f, const std::vector<u64> &basis, u64 index) {
  const u64 p = f.characteristic();
  u64 acc = 0;
  for (size_t j = 0; j < basis.size() && index; ++j, index /= p) {
    const u64 c = index % p;
    if (!c) continue;
    acc = f.add(acc, c == 1 ? basis[j] : f.mul(f.from_int(static_cast<long long>(c)).value(), basis[j]));
  }
  return acc;
}

u64 span_size(const FieldCtx &f, const LinearImage &img) { return checked_pow(f.characteristic(), static_cast<unsigned>(img.basis.size())); }

u64 isqrt_exact(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

}  // namespace

CurveModel CurveModel::fermat(u64 q) {
  auto [p, e] = require_prime_power(q);
  CurveModel m;
  m.family_ = Family::FermatHermitian;
  m.q_ = q;
  m.base_ = build_field(p, 2 * e);
  m.genus_ = q * (q - 1) / 2;
  m.form_ = HermitianForm::fermat(q);
  return m;
}

CurveModel CurveModel::norm_trace(u64 q) {
  CurveModel m = fermat(q);
  m.family_ = Family::NormTraceHermitian;
  m.form_ = HermitianForm::norm_trace(q);
  return m;
}

CurveModel CurveModel::gk(u64 ell, unsigned n) {
  auto [p, e] = require_prime_power(ell);
  if (n < 3 || n % 2 == 0) throw FieldError("generalized GK curve needs n >= 3 odd");
  CurveModel m;
  m.family_ = Family::GeneralizedGK;
  m.ell_ = ell;
  m.n_ = n;
  m.q_ = checked_pow(ell, n);
  m.base_ = build_field(p, 2 * e * n);
  m.genus_ = (ell - 1) * (ell * m.q_ + m.q_ - ell * ell) / 2;
  return m;
}

CurveModel CurveModel::gs(u64 ell) {
  auto [p, e] = require_prime_power(ell);
  CurveModel m;
  m.family_ = Family::GarciaStichtenoth;
  m.ell_ = ell;
  m.q_ = ell;
  m.base_ = build_field(p, 6 * e);
  m.genus_ = (ell - 1) * (ell * ell * ell - ell) / 2;
  return m;
}

std::string CurveModel::name() const {
  switch (family_) {
    case Family::FermatHermitian: return "H_" + std::to_string(q_) + " (Fermat)";
    case Family::NormTraceHermitian: return "H_" + std::to_string(q_) + " (norm-trace)";
    case Family::GeneralizedGK: return "C_" + std::to_string(q_);
    case Family::GarciaStichtenoth: return "X_" + std::to_string(ell_);
  }
  return "?";
}

const HermitianForm &CurveModel::form() const {
  if (!form_) throw FieldError(name() + " is not a Hermitian model");
  return *form_;
}

bool contains(const CurveModel &model, const ProjPoint &p) {
  if (p.field().characteristic() != model.base()->characteristic())
    throw FieldError("point characteristic does not match " + model.name());
  if (model.hermitian()) return model.form().value(p).is_zero();
  if (model.family() == Family::GarciaStichtenoth) {
    const u64 l = model.ell(), d = l * l - l + 1;
    const FieldElem &x = p[0], &y = p[1], &t = p[2];
    const FieldElem lhs = y.pow(d) * t.pow(l - 1);
    const FieldElem rhs = x.pow(l * l) - x * t.pow(l * l - 1);
    return lhs == rhs;
  }
  throw FieldError(model.name() + " is not a plane model");
}

bool contains(const CurveModel &model, const std::optional<std::array<FieldElem, 3>> &affine) {
  if (model.family() != Family::GeneralizedGK) throw FieldError(model.name() + " is not a space model");
  if (!affine) return true;
  const auto &[x, y, z] = *affine;
  if (x.field().characteristic() != model.base()->characteristic())
    throw FieldError("point characteristic does not match " + model.name());
  const u64 l = model.ell();
  const u64 m = (model.q() + 1) / (l + 1);
  return x.pow(l) + x == y.pow(l + 1) && y.pow(l * l) - y == z.pow(m);
}

ProjLine polar(const ProjPoint &p, const CurveModel &model) { return polar(p, model.form()); }

u64 count_rational_points(const CurveModel &model, const Field &over_in, unsigned threads) {
  const Field over = over_in ? over_in : model.base();
  const FieldCtx &f = *over;
  if (f.characteristic() != model.base()->characteristic())
    throw FieldError("field characteristic does not match " + model.name());
  if (f.size() > kEnumerationCap) throw FieldError("enumeration cap exceeded for " + f.name());
  const u64 N = f.size();

  switch (model.family()) {
    case Family::FermatHermitian: {
      const u64 d = model.q() + 1;
      const u64 minus_one = f.neg(1);
      u64 total = parallel_sum(N, threads, [&](u64 lo, u64 hi) {
        u64 c = 0;
        for (u64 x = lo; x < hi; ++x) c += f.count_dth_roots(f.sub(minus_one, f.pow(x, d)), d);
        return c;
      });
      return total + f.count_dth_roots(minus_one, d);
    }
    case Family::NormTraceHermitian: {
      const u64 q = model.q();
      u64 total = parallel_sum(N, threads, [&](u64 lo, u64 hi) {
        u64 c = 0;
        for (u64 x = lo; x < hi; ++x) c += f.count_dth_roots(f.add(f.pow(x, q), x), q + 1);
        return c;
      });
      return total + 1;
    }
    case Family::GarciaStichtenoth: {
      // Affine points: x ranges over a coset of the kernel of x^{l^2} - x
      // for each image value w, so count |ker| * #{y : y^d = w} over w.
      const u64 l = model.ell(), d = l * l - l + 1;
      LinearImage img = linear_image(f, [&](u64 x) { return f.sub(f.pow(x, l * l), x); });
      const u64 size = span_size(f, img);
      u64 total = parallel_sum(size, threads, [&](u64 lo, u64 hi) {
        u64 c = 0;
        for (u64 i = lo; i < hi; ++i) c += f.count_dth_roots(span_element(f, img.basis, i), d);
        return c;
      });
      return total * img.kernel_size + 1;
    }
    case Family::GeneralizedGK: {
      const u64 l = model.ell();
      const u64 m = (model.q() + 1) / (l + 1);
      LinearImage img = linear_image(f, [&](u64 x) { return f.add(f.pow(x, l), x); });
      std::vector<bool> in_image(N, false);
      for (u64 i = 0, s = span_size(f, img); i < s; ++i) in_image[span_element(f, img.basis, i)] = true;
      u64 total = parallel_sum(N, threads, [&](u64 lo, u64 hi) {
        u64 c = 0;
        for (u64 y = lo; y < hi; ++y) {
          if (!in_image[f.pow(y, l + 1)]) continue;
          c += img.kernel_size * f.count_dth_roots(f.sub(f.pow(y, l * l), y), m);
        }
        return c;
      });
      return total + 1;
    }
  }
  return 0;
}

std::vector<ProjPoint> rational_points(const CurveModel &model, const Field &over_in) {
  const Field over = over_in ? over_in : model.base();
  const FieldCtx &f = *over;
  if (!model.hermitian()) throw FieldError("point listing is only provided for Hermitian models");
  if (!f.table_mode()) throw FieldError("point listing needs a table-mode field");
  const u64 d = model.q() + 1;
  const FieldElem one = f.one(), zero = f.zero();
  std::vector<ProjPoint> pts;
  const bool fermat = model.family() == Family::FermatHermitian;
  for (u64 x = 0; x < f.size(); ++x) {
    const u64 v = fermat ? f.sub(f.neg(1), f.pow(x, d)) : f.add(f.pow(x, model.q()), x);
    for (u64 y : f.dth_roots(v, d)) pts.emplace_back(f.element(x), f.element(y), one);
  }
  if (fermat) {
    for (u64 y : f.dth_roots(f.neg(1), d)) pts.emplace_back(one, f.element(y), zero);
  } else {
    pts.emplace_back(one, zero, zero);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

u64 hasse_weil_bound(const CurveModel &model, const Field &over) {
  const u64 s = isqrt_exact(over->size());
  if (s == 0) throw FieldError(over->name() + " has non-square size");
  return over->size() + 1 + 2 * model.genus() * s;
}

bool maximality_check(const CurveModel &model, const Field &over_in, unsigned threads) {
  const Field over = over_in ? over_in : model.base();
  if (isqrt_exact(over->size()) == 0) return false;
  return count_rational_points(model, over, threads) == hasse_weil_bound(model, over);
}

}  // namespace hq
