#include "hq/linpoly.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace hq {

namespace {

void same_field(const Field &a, const Field &b) {
  if (a.get() != b.get()) throw FieldError("linearized polynomials over different fields");
}

void trim(std::vector<FieldElem> &c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Row reduction over F_p of digit vectors; returns the echelon rows' pivots.
struct Echelon {
  u64 p;
  std::vector<std::vector<u64>> rows;
  std::vector<size_t> pivots;

  // Reduces v against the rows; returns true if it was independent (and adds it).
  bool insert(std::vector<u64> v, size_t width) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const u64 c = v[pivots[r]];
      if (!c) continue;
      for (size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p - mulmod(c, rows[r][j], p))) % p;
    }
    size_t piv = 0;
    while (piv < width && v[piv] == 0) ++piv;
    if (piv == width) return false;
    const u64 inv = inverse_mod(v[piv], p);
    for (auto &x : v) x = mulmod(x, inv, p);
    for (size_t r = 0; r < rows.size(); ++r) {
      const u64 c = rows[r][piv];
      if (!c) continue;
      for (size_t j = 0; j < v.size(); ++j) rows[r][j] = (rows[r][j] + (p - mulmod(c, v[j], p))) % p;
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }
};

std::string term_power(u64 p, unsigned i, const char *var, bool linearized) {
  if (!linearized) return i == 0 ? "" : (i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i));
  if (i == 0) return var;
  try {
    return std::string(var) + "^" + std::to_string(checked_pow(p, i));
  } catch (const std::overflow_error &) {
    return std::string(var) + "^(" + std::to_string(p) + "^" + std::to_string(i) + ")";
  }
}

std::string format_terms(const std::vector<FieldElem> &c, u64 p, const char *var, bool linearized) {
  if (c.empty()) return "0";
  std::string s;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const std::string mono = term_power(p, static_cast<unsigned>(i), var, linearized);
    if (c[i].is_one() && !mono.empty()) {
      s += mono;
    } else {
      s += std::to_string(c[i].value());
      if (!mono.empty()) s += "*" + mono;
    }
  }
  return s;
}

// x^{p^e} with e taken modulo the field degree; negative e inverts Frobenius.
FieldElem frob(const FieldElem &x, long long e) {
  const long long m = x.field().degree();
  return x.frobenius(static_cast<unsigned>(((e % m) + m) % m));
}

AssociatePoly make_assoc(const Field &f, std::vector<FieldElem> c, Convention conv) {
  trim(c);
  return {f, std::move(c), conv};
}

void require_compatible(const AssociatePoly &a, const AssociatePoly &b) {
  same_field(a.field, b.field);
  if (a.convention != b.convention) throw FieldError("associates use different conventions");
  if (b.coeffs.empty()) throw FieldError("division by the zero associate");
}

AssociateDivision conventional_division(const AssociatePoly &a, const AssociatePoly &b) {
  auto [q, r] = poly::divmod(a.coeffs, b.coeffs);
  return {make_assoc(a.field, q, a.convention), make_assoc(a.field, r, a.convention)};
}

}  // namespace

LinearizedPoly::LinearizedPoly(Field f, std::vector<FieldElem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  for (const auto &c : c_)
    if (c.field_ptr() != field_.get()) throw FieldError("coefficient outside " + field_->name());
  trim(c_);
}

LinearizedPoly LinearizedPoly::x(Field f) {
  const FieldElem one = f->one();
  return LinearizedPoly(std::move(f), {one});
}

LinearizedPoly LinearizedPoly::monomial(Field f, unsigned i, const FieldElem &c) {
  std::vector<FieldElem> v(i + 1, f->zero());
  v[i] = c;
  return LinearizedPoly(std::move(f), std::move(v));
}

FieldElem LinearizedPoly::coeff(unsigned i) const { return i < c_.size() ? c_[i] : field_->zero(); }

u64 LinearizedPoly::degree() const { return c_.empty() ? 0 : checked_pow(field_->characteristic(), static_cast<unsigned>(c_.size() - 1)); }

FieldElem LinearizedPoly::operator()(const FieldElem &x) const {
  if (x.field_ptr() != field_.get()) throw FieldError("evaluation point outside " + field_->name());
  FieldElem acc = field_->zero(), xp = x;
  for (size_t i = 0; i < c_.size(); ++i) {
    acc += c_[i] * xp;
    xp = xp.frobenius(1);
  }
  return acc;
}

std::vector<FieldElem> LinearizedPoly::kernel_basis() const {
  if (c_.empty()) throw FieldError("the zero polynomial has no finite kernel");
  const FieldCtx &f = *field_;
  const u64 p = f.characteristic();
  const unsigned m = f.degree();
  // rows [image digits | coordinate digits]; zero image part gives a kernel vector
  Echelon ech{p, {}, {}};
  std::vector<FieldElem> basis;
  u64 unit = 1;
  std::vector<std::vector<u64>> dependent;
  for (unsigned i = 0; i < m; ++i, unit *= p) {
    std::vector<u64> row = f.digits((*this)(f.element(unit)).value());
    row.resize(2 * m, 0);
    row[m + i] = 1;
    // reduce only on the image part
    for (size_t r = 0; r < ech.rows.size(); ++r) {
      const u64 c = row[ech.pivots[r]];
      if (!c) continue;
      for (size_t j = 0; j < row.size(); ++j) row[j] = (row[j] + (p - mulmod(c, ech.rows[r][j], p))) % p;
    }
    size_t piv = 0;
    while (piv < m && row[piv] == 0) ++piv;
    if (piv == m) {
      basis.push_back(f.element(f.from_digits(std::vector<u64>(row.begin() + m, row.end()))));
      continue;
    }
    const u64 inv = inverse_mod(row[piv], p);
    for (auto &x : row) x = mulmod(x, inv, p);
    ech.rows.push_back(std::move(row));
    ech.pivots.push_back(piv);
  }
  return basis;
}

u64 LinearizedPoly::kernel_size() const { return checked_pow(field_->characteristic(), static_cast<unsigned>(kernel_basis().size())); }

std::vector<FieldElem> LinearizedPoly::kernel() const {
  const std::vector<FieldElem> basis = kernel_basis();
  const u64 p = field_->characteristic();
  const u64 n = checked_pow(p, static_cast<unsigned>(basis.size()));
  if (n > (u64{1} << 20)) throw FieldError("kernel too large to list");
  std::vector<FieldElem> out;
  out.reserve(n);
  for (u64 idx = 0; idx < n; ++idx) {
    FieldElem acc = field_->zero();
    u64 t = idx;
    for (size_t j = 0; j < basis.size(); ++j, t /= p)
      if (t % p) acc += field_->from_int(static_cast<long long>(t % p)) * basis[j];
    out.push_back(acc);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinearizedPoly LinearizedPoly::operator+(const LinearizedPoly &o) const {
  same_field(field_, o.field_);
  std::vector<FieldElem> c(std::max(c_.size(), o.c_.size()), field_->zero());
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return LinearizedPoly(field_, std::move(c));
}

LinearizedPoly LinearizedPoly::operator-(const LinearizedPoly &o) const {
  same_field(field_, o.field_);
  std::vector<FieldElem> c(std::max(c_.size(), o.c_.size()), field_->zero());
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return LinearizedPoly(field_, std::move(c));
}

std::string LinearizedPoly::str() const { return format_terms(c_, field_->characteristic(), "X", true); }

std::string AssociatePoly::str() const { return format_terms(coeffs, field->characteristic(), "t", false); }

LinearizedPoly from_kernel(const Field &f, const std::vector<FieldElem> &roots_in) {
  std::set<u64> vals;
  for (const auto &r : roots_in) {
    if (r.field_ptr() != f.get()) throw FieldError("root outside " + f->name());
    vals.insert(r.value());
  }
  if (!vals.count(0)) throw FieldError("root set does not contain 0");
  const u64 p = f->characteristic();
  const unsigned m = f->degree();
  Echelon ech{p, {}, {}};
  std::vector<FieldElem> basis;
  for (u64 v : vals) {
    std::vector<u64> d = f->digits(v);
    if (ech.insert(d, m)) basis.push_back(f->element(v));
  }
  if (checked_pow(p, static_cast<unsigned>(basis.size())) != vals.size())
    throw FieldError("root set is not an additive subgroup");
  LinearizedPoly l = LinearizedPoly::x(f);
  for (const auto &b : basis) {
    const FieldElem v = l(b);
    // (X^p - v^{p-1} X) o l vanishes on l's roots and on b + l's roots
    LinearizedPoly step(f, {-(v.pow(p - 1)), f->one()});
    l = compose(step, l);
  }
  return l;
}

LinearizedPoly compose(const LinearizedPoly &outer, const LinearizedPoly &inner) {
  same_field(outer.field(), inner.field());
  const Field &f = outer.field();
  if (outer.is_zero() || inner.is_zero()) return LinearizedPoly(f, {});
  std::vector<FieldElem> c(outer.coeffs().size() + inner.coeffs().size() - 1, f->zero());
  for (size_t i = 0; i < outer.coeffs().size(); ++i) {
    if (outer.coeffs()[i].is_zero()) continue;
    for (size_t j = 0; j < inner.coeffs().size(); ++j)
      c[i + j] += outer.coeffs()[i] * frob(inner.coeffs()[j], static_cast<long long>(i));
  }
  return LinearizedPoly(f, std::move(c));
}

std::optional<LinearizedPoly> decompose(const LinearizedPoly &target, const LinearizedPoly &inner) {
  same_field(target.field(), inner.field());
  const AssociateDivision d = divide_right(p_associate(target, Convention::Twisted), p_associate(inner, Convention::Twisted));
  if (!d.remainder.coeffs.empty()) return std::nullopt;
  return inverse_associate(d.quotient);
}

AssociatePoly p_associate(const LinearizedPoly &l, Convention convention) { return {l.field(), l.coeffs(), convention}; }

LinearizedPoly inverse_associate(const AssociatePoly &a) { return LinearizedPoly(a.field, a.coeffs); }

AssociatePoly associate_mul(const AssociatePoly &a, const AssociatePoly &b) {
  same_field(a.field, b.field);
  if (a.convention != b.convention) throw FieldError("associates use different conventions");
  if (a.convention == Convention::Conventional) return make_assoc(a.field, poly::mul(a.coeffs, b.coeffs), a.convention);
  return p_associate(compose(inverse_associate(a), inverse_associate(b)), Convention::Twisted);
}

AssociateDivision divide_right(const AssociatePoly &a, const AssociatePoly &b) {
  require_compatible(a, b);
  if (a.convention == Convention::Conventional) return conventional_division(a, b);
  const Field &f = a.field;
  std::vector<FieldElem> r = a.coeffs;
  const int e = b.degree();
  std::vector<FieldElem> q(std::max(0, a.degree() - e + 1), f->zero());
  const FieldElem &lead = b.coeffs.back();
  while (static_cast<int>(r.size()) - 1 >= e) {
    const int n = static_cast<int>(r.size()) - 1;
    const int s = n - e;
    // (c t^s) b has leading coefficient c lead^{p^s}
    const FieldElem c = r.back() / frob(lead, s);
    q[s] = c;
    for (int j = 0; j <= e; ++j) r[s + j] -= c * frob(b.coeffs[j], s);
    trim(r);
  }
  return {make_assoc(f, q, a.convention), make_assoc(f, r, a.convention)};
}

AssociateDivision divide_left(const AssociatePoly &a, const AssociatePoly &b) {
  require_compatible(a, b);
  if (a.convention == Convention::Conventional) return conventional_division(a, b);
  const Field &f = a.field;
  std::vector<FieldElem> r = a.coeffs;
  const int e = b.degree();
  std::vector<FieldElem> q(std::max(0, a.degree() - e + 1), f->zero());
  const FieldElem &lead = b.coeffs.back();
  while (static_cast<int>(r.size()) - 1 >= e) {
    const int n = static_cast<int>(r.size()) - 1;
    const int s = n - e;
    // b (c t^s) has leading coefficient lead c^{p^e}
    const FieldElem c = frob(r.back() / lead, -e);
    q[s] = c;
    for (int j = 0; j <= e; ++j) r[s + j] -= b.coeffs[j] * frob(c, j);
    trim(r);
  }
  return {make_assoc(f, q, a.convention), make_assoc(f, r, a.convention)};
}

bool symbolic_divides(const LinearizedPoly &l, const LinearizedPoly &m, Side side) {
  same_field(l.field(), m.field());
  const AssociatePoly a = p_associate(m, Convention::Twisted), b = p_associate(l, Convention::Twisted);
  const AssociateDivision d = side == Side::Right ? divide_right(a, b) : divide_left(a, b);
  return d.remainder.coeffs.empty();
}

DivisibilityReport divisibility(const LinearizedPoly &l, const LinearizedPoly &m, Side side) {
  DivisibilityReport rep;
  rep.division = symbolic_divides(l, m, side);
  if (side == Side::Right && l.separable() && l.kernel_size() == l.degree()) {
    bool contained = true;
    for (const auto &b : l.kernel_basis()) contained = contained && m(b).is_zero();
    rep.kernel_containment = contained;
  }
  const AssociateDivision c = divide_right(p_associate(m, Convention::Conventional), p_associate(l, Convention::Conventional));
  rep.conventional = c.remainder.coeffs.empty();
  return rep;
}

FamilyScan prop1sylow_family_scan(u64 q, unsigned threads) {
  const auto pp = prime_power(q);
  if (!pp) throw FieldError(std::to_string(q) + " is not a prime power");
  const auto [p, s] = *pp;
  const Field f = build_field(p, 6 * s);
  const FieldCtx &F = *f;
  const u64 N = F.size();
  const u64 q2 = q * q;

  std::set<u64> ws;
  for (u64 a = 1; a < N; ++a) ws.insert(F.neg(F.inv(F.pow(a, q2 - 1))));
  const std::vector<u64> wlist(ws.begin(), ws.end());

  // X^{q^3} + X  <->  t^{3s} + 1
  std::vector<FieldElem> target(3 * s + 1, F.zero());
  target[0] = F.one();
  target[3 * s] = F.one();

  FamilyScan out;
  out.q = q;
  out.w_classes = wlist.size();
  out.pairs = wlist.size() * (N - 1);

  threads = std::max(1u, threads);
  std::vector<u64> tw(threads, 0), conv(threads, 0);
  auto work = [&](unsigned t) {
    for (size_t i = t; i < wlist.size(); i += threads) {
      std::vector<FieldElem> d(2 * s + 1, F.zero());
      d[0] = F.element(wlist[i]);
      d[2 * s] = F.one();
      const AssociatePoly dt{f, d, Convention::Twisted}, dc{f, d, Convention::Conventional};
      if (divide_right(AssociatePoly{f, target, Convention::Conventional}, dc).remainder.coeffs.empty()) conv[t] += N - 1;
      for (u64 c = 1; c < N; ++c) {
        std::vector<FieldElem> ct = target;
        for (auto &x : ct) x *= F.element(c);
        if (divide_left(AssociatePoly{f, ct, Convention::Twisted}, dt).remainder.coeffs.empty()) ++tw[t];
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto &th : pool) th.join();
  }
  for (unsigned t = 0; t < threads; ++t) {
    out.twisted_divisible += tw[t];
    out.conventional_divisible += conv[t];
  }
  return out;
}

}  // namespace hq
