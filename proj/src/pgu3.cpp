#include "hq/pgu3.hpp"

#include <deque>
#include <sstream>

namespace hq {

Mat3 mat_identity(const FieldCtx &f) {
  Mat3 m;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m[i][j] = i == j ? f.one() : f.zero();
  return m;
}

Mat3 mat_mul(const Mat3 &a, const Mat3 &b) {
  Mat3 r;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

FieldElem mat_det(const Mat3 &a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 mat_adjugate(const Mat3 &a) {
  Mat3 r;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      const size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    }
  return r;
}

Mat3 mat_scale(const Mat3 &a, const FieldElem &s) {
  Mat3 r;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) r[i][j] = a[i][j] * s;
  return r;
}

Mat3 mat_map(const TowerMap &m, const Mat3 &a) {
  Mat3 r;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) r[i][j] = m(a[i][j]);
  return r;
}

bool mat_is_scalar(const Mat3 &a) {
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (i != j && !a[i][j].is_zero()) return false;
  return !a[0][0].is_zero() && a[0][0] == a[1][1] && a[1][1] == a[2][2];
}

namespace {

Mat3 canonical(const Mat3 &m) {
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (!m[i][j].is_zero()) return m[i][j].is_one() ? m : mat_scale(m, m[i][j].inverse());
  throw FieldError("zero matrix");
}

Field owning(const FieldCtx &f) {
  Field F = build_field(f.characteristic(), f.degree());
  if (F.get() != &f) throw FieldError(f.name() + " is not a registry field");
  return F;
}

Mat3 raw_pow(Mat3 base, u64 e) {
  Mat3 result = mat_identity(base[0][0].field());
  while (e) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return result;
}

}  // namespace

Projectivity::Projectivity(const Mat3 &m) {
  const FieldCtx *f = m[0][0].field_ptr();
  for (const auto &row : m)
    for (const auto &x : row)
      if (x.field_ptr() != f || !f) throw FieldError("matrix entries must share one field");
  if (mat_det(m).is_zero()) throw FieldError("singular matrix is not a projectivity");
  m_ = canonical(m);
}

Projectivity Projectivity::identity(const FieldCtx &f) { return Projectivity(mat_identity(f)); }

bool Projectivity::is_identity() const { return mat_is_scalar(m_); }

Projectivity Projectivity::operator*(const Projectivity &o) const {
  Projectivity r;
  r.m_ = canonical(mat_mul(m_, o.m_));
  return r;
}

Projectivity Projectivity::inverse() const {
  Projectivity r;
  r.m_ = canonical(mat_adjugate(m_));
  return r;
}

Projectivity Projectivity::pow(u64 e) const {
  Projectivity r;
  r.m_ = canonical(raw_pow(m_, e));
  return r;
}

ProjPoint Projectivity::apply(const ProjPoint &p) const {
  Mat3 m = m_;
  if (&p.field() != &field()) m = mat_map(embed(owning(field()), owning(p.field())), m_);
  Triple r;
  for (size_t i = 0; i < 3; ++i) r[i] = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
  return ProjPoint(r);
}

Projectivity Projectivity::lifted(const FieldCtx &ext) const {
  if (&ext == &field()) return *this;
  Projectivity r;
  r.m_ = mat_map(embed(owning(field()), owning(ext)), m_);
  return r;
}

ProjLine Projectivity::apply(const ProjLine &l) const {
  Mat3 inv = mat_adjugate(m_);
  if (&l.field() != &field()) inv = mat_map(embed(owning(field()), owning(l.field())), inv);
  Triple r;
  for (size_t j = 0; j < 3; ++j) r[j] = l[0] * inv[0][j] + l[1] * inv[1][j] + l[2] * inv[2][j];
  return ProjLine(r);
}

bool Projectivity::operator<(const Projectivity &o) const {
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (m_[i][j].value() != o.m_[i][j].value()) return m_[i][j].value() < o.m_[i][j].value();
  return false;
}

std::size_t Projectivity::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto &row : m_)
    for (const auto &x : row) h = (h ^ x.value()) * 1099511628211ull;
  return h;
}

std::string Projectivity::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < 3; ++i) {
    os << (i ? ";" : "");
    for (size_t j = 0; j < 3; ++j) os << (j ? " " : "") << m_[i][j].value();
  }
  os << ']';
  return os.str();
}

std::optional<FieldElem> unitary_scalar(const Mat3 &m, const HermitianForm &h) {
  const FieldCtx &f = m[0][0].field();
  // C = M^T G conj(M)
  Mat3 cm;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) cm[i][j] = conj(m[i][j], h.q);
  std::optional<FieldElem> lambda;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      FieldElem c = f.zero();
      for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b)
          if (h.gram[a][b]) c += m[a][i] * f.from_int(h.gram[a][b]) * cm[b][j];
      const FieldElem g = f.from_int(h.gram[i][j]);
      if (g.is_zero()) {
        if (!c.is_zero()) return std::nullopt;
        continue;
      }
      const FieldElem l = c / g;
      if (lambda && *lambda != l) return std::nullopt;
      lambda = l;
    }
  if (!lambda || lambda->is_zero()) return std::nullopt;
  return lambda;
}

bool is_unitary(const Mat3 &m, const HermitianForm &h) { return unitary_scalar(m, h).has_value(); }

bool is_unitary(const Projectivity &m, const CurveModel &model) {
  if (&m.field() != model.base().get()) return false;
  return is_unitary(m.mat(), model.form());
}

bool in_psu(const Projectivity &m, const HermitianForm &h) {
  if (!is_unitary(m.mat(), h)) throw FieldError("PSU membership of a non-unitary matrix");
  return is_dth_power(mat_det(m.mat()), 3);
}

FactoredInt pgu_order(u64 q) {
  FactoredInt n(q);
  n *= FactoredInt(q);
  n *= FactoredInt(q);
  n *= FactoredInt(q * q * q + 1);
  n *= FactoredInt(q * q - 1);
  return n;
}

FactoredInt pgl3_order(const FieldCtx &f) {
  // N^3 (N^3 - 1)(N^2 - 1), factored piecewise to stay within 64 bits
  const u64 N = f.size();
  if (N >= (u64{1} << 31)) throw FieldError("PGL(3) order is only factored for fields below 2^31");
  FactoredInt n(N);
  n *= FactoredInt(N);
  n *= FactoredInt(N);
  n *= FactoredInt(N - 1);
  n *= FactoredInt(N * N + N + 1);
  n *= FactoredInt(N - 1);
  n *= FactoredInt(N + 1);
  return n;
}

u64 order_of(const Projectivity &m) {
  const FactoredInt n = pgl3_order(m.field());
  u64 order = 1;
  for (auto [r, a] : n.primes()) {
    // x = m^{n / r^a}, then the r-part of the order is the least r^j with x^{r^j} scalar
    Mat3 x = m.mat();
    for (auto [s, b] : n.primes()) {
      if (s == r) continue;
      for (unsigned t = 0; t < b; ++t) x = canonical(raw_pow(x, s));
    }
    unsigned j = 0;
    while (!mat_is_scalar(x)) {
      if (j == a) throw FieldError("order computation failed");
      x = canonical(raw_pow(x, r));
      ++j;
      order *= r;
    }
  }
  return order;
}

Projectivity make_alpha(const FieldElem &theta, long long i) {
  if (theta.is_zero()) throw FieldError("make_alpha: theta = 0");
  const FieldCtx &f = theta.field();
  const FieldElem t2 = i >= 0 ? theta.pow(static_cast<u64>(i)) : theta.inverse().pow(static_cast<u64>(-i));
  Mat3 m = mat_identity(f);
  m[0][0] = theta;
  m[1][1] = t2;
  return Projectivity(m);
}

Projectivity make_three_cycle(const FieldElem &lambda, const FieldElem &mu, u64 q, CycleShape shape) {
  if (!lambda.pow(q + 1).is_one() || !mu.pow(q + 1).is_one())
    throw FieldError("three-cycle entries must satisfy x^{q+1} = 1");
  const FieldCtx &f = lambda.field();
  Mat3 m;
  for (auto &row : m) row = {f.zero(), f.zero(), f.zero()};
  if (shape == CycleShape::XYT) {
    m[0][1] = lambda;
    m[1][2] = mu;
    m[2][0] = f.one();
  } else {
    m[0][2] = lambda;
    m[1][0] = mu;
    m[2][1] = f.one();
  }
  return Projectivity(m);
}

Projectivity make_beta(const FieldElem &c, u64 Q) {
  if (!(c.pow(Q) + c).is_zero()) throw FieldError("make_beta: c^Q + c != 0");
  Mat3 m = mat_identity(c.field());
  m[0][2] = c;
  return Projectivity(m);
}

Projectivity make_alpha_a(const FieldElem &a, u64 Q) {
  if (a.is_zero()) throw FieldError("make_alpha_a: a = 0");
  Mat3 m = mat_identity(a.field());
  m[0][0] = a.pow(Q + 1);
  m[1][1] = a;
  return Projectivity(m);
}

Projectivity make_unipotent(const FieldElem &b, const FieldElem &c, u64 Q) {
  if (c.pow(Q) + c != b.pow(Q + 1)) throw FieldError("make_unipotent: c^Q + c != b^{Q+1}");
  Mat3 m = mat_identity(b.field());
  m[0][1] = b.pow(Q);
  m[0][2] = c;
  m[1][2] = b;
  return Projectivity(m);
}

SubgroupSpec::SubgroupSpec(std::vector<Projectivity> gens, std::vector<Projectivity> elements)
    : gens_(std::move(gens)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::size_t SubgroupSpec::index_of(const Projectivity &g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw std::out_of_range("element not in subgroup");
  return it->second;
}

bool SubgroupSpec::is_normal_in(const SubgroupSpec &over) const {
  for (const auto &g : over.generators()) {
    const Projectivity gi = g.inverse();
    for (const auto &n : gens_)
      if (!contains(g * n * gi)) return false;
  }
  return true;
}

bool SubgroupSpec::is_subgroup_of(const SubgroupSpec &over) const {
  for (const auto &g : gens_)
    if (!over.contains(g)) return false;
  return true;
}

SubgroupSpec generate(const std::vector<Projectivity> &gens, std::size_t cap) {
  if (gens.empty()) throw FieldError("generate needs at least one generator");
  const FieldCtx &f = gens[0].field();
  for (const auto &g : gens)
    if (&g.field() != &f) throw FieldError("generators over different fields");
  std::vector<Projectivity> elems{Projectivity::identity(f)};
  std::unordered_map<Projectivity, std::size_t, ProjectivityHash> seen{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto &g : gens) {
      Projectivity y = elems[i] * g;
      if (seen.count(y)) continue;
      if (elems.size() >= cap) throw ClosureCapExceeded("closure exceeds cap of " + std::to_string(cap));
      seen.emplace(y, elems.size());
      elems.push_back(std::move(y));
    }
  }
  return SubgroupSpec(gens, std::move(elems));
}

}  // namespace hq
