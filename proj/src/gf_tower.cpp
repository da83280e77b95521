#include "hq/gf_tower.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hq {

namespace {

// Dense polynomials over F_p, coefficient i = coefficient of X^i.
using PolyP = std::vector<u64>;

void trim(PolyP &a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 addp(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 subp(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

// a mod f, f monic
PolyP poly_mod(PolyP a, const PolyP &f, u64 p) {
  const size_t df = f.size() - 1;
  trim(a);
  while (a.size() > df) {
    u64 lead = a.back();
    size_t shift = a.size() - 1 - df;
    for (size_t i = 0; i <= df; ++i) a[shift + i] = subp(a[shift + i], mulmod(lead, f[i], p), p);
    trim(a);
  }
  return a;
}

PolyP poly_mulmod(const PolyP &a, const PolyP &b, const PolyP &f, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = addp(r[i + j], mulmod(a[i], b[j], p), p);
  }
  return poly_mod(std::move(r), f, p);
}

PolyP poly_powmod(PolyP base, u64 e, const PolyP &f, u64 p) {
  PolyP result = poly_mod(PolyP{1}, f, p);
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

PolyP poly_gcd(PolyP a, PolyP b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    u64 inv = inverse_mod(b.back(), p);
    for (auto &c : b) c = mulmod(c, inv, p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

PolyP full_modulus(const std::vector<u64> &modulus) {
  PolyP f = modulus;
  f.push_back(1);
  return f;
}

bool poly_is_one(const PolyP &a) { return a.size() == 1 && a[0] == 1; }

}  // namespace

bool is_irreducible_mod_p(u64 p, const std::vector<u64> &modulus) {
  const unsigned k = static_cast<unsigned>(modulus.size());
  if (k == 0) return false;
  if (k == 1) return true;
  const PolyP f = full_modulus(modulus);
  const PolyP x{0, 1};
  // frob[i] = X^(p^i) mod f
  std::vector<PolyP> frob{poly_mod(x, f, p)};
  for (unsigned i = 1; i <= k; ++i) frob.push_back(poly_powmod(frob.back(), p, f, p));
  if (frob[k] != poly_mod(x, f, p)) return false;
  for (auto [r, e] : factor(k)) {
    (void)e;
    PolyP h = frob[k / r];
    h.resize(std::max<size_t>(h.size(), 2), 0);
    h[1] = subp(h[1], 1, p);
    trim(h);
    PolyP g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool is_primitive_mod_p(u64 p, const std::vector<u64> &modulus) {
  if (!is_irreducible_mod_p(p, modulus)) return false;
  const unsigned k = static_cast<unsigned>(modulus.size());
  const u64 order = checked_pow(p, k) - 1;
  const PolyP f = full_modulus(modulus);
  const PolyP x{0, 1};
  if (!poly_is_one(poly_powmod(x, order, f, p))) return false;
  for (auto [r, e] : factor(order == 0 ? 1 : order)) {
    (void)e;
    if (poly_is_one(poly_powmod(x, order / r, f, p))) return false;
  }
  return true;
}

std::vector<u64> default_modulus(u64 p, unsigned k) {
  const u64 count = checked_pow(p, k);
  std::vector<u64> c(k);
  // c_0 = 0 only gives the root 0, so start at c_0 = 1 when k > 1.
  for (u64 n = k > 1 ? count / p : 0; n < count; ++n) {
    // c_0 is the most significant digit of n: lexicographic from c_0.
    u64 t = n;
    for (unsigned i = k; i-- > 0;) {
      c[i] = t % p;
      t /= p;
    }
    if (is_primitive_mod_p(p, c)) return c;
  }
  throw FieldError("no primitive polynomial found");
}

// ---------------------------------------------------------------- FieldElem

const FieldCtx &FieldElem::field() const {
  if (!field_) throw FieldError("use of an unbound field element");
  return *field_;
}

bool FieldElem::is_one() const { return value_ == 1; }

void FieldElem::same_field(const FieldElem &o) const {
  if (field_ != o.field_ || !field_) throw FieldError("cross-field arithmetic without an embedding");
}

FieldElem FieldElem::operator+(const FieldElem &o) const {
  same_field(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElem FieldElem::operator-(const FieldElem &o) const {
  same_field(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElem FieldElem::operator*(const FieldElem &o) const {
  same_field(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElem FieldElem::operator/(const FieldElem &o) const {
  same_field(o);
  return {field_, field_->mul(value_, field_->inv(o.value_))};
}
FieldElem FieldElem::operator-() const { return {field_, field().neg(value_)}; }
FieldElem FieldElem::pow(u64 e) const { return {field_, field().pow(value_, e)}; }
FieldElem FieldElem::inverse() const { return {field_, field().inv(value_)}; }

FieldElem FieldElem::frobenius(unsigned times) const {
  FieldElem r = *this;
  const u64 p = field().characteristic();
  for (unsigned i = 0; i < times % field().degree(); ++i) r = r.pow(p);
  return r;
}

u64 FieldElem::order() const {
  if (is_zero()) throw FieldError("order of zero");
  const FieldCtx &f = field();
  u64 o = f.size() - 1;
  for (auto [r, e] : f.unit_group_factors()) {
    (void)e;
    while (o % r == 0 && f.pow(value_, o / r) == 1) o /= r;
  }
  return o;
}

// ----------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(u64 p, unsigned k, std::vector<u64> modulus, FieldOptions options)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw FieldError("extension degree must be positive");
  try {
    size_ = checked_pow(p, k);
  } catch (const std::overflow_error &) {
    throw FieldError("field size cap exceeded");
  }
  if (size_ > (u64{1} << 62)) throw FieldError("field size cap exceeded");
  if (modulus_.size() != k) throw FieldError("modulus has the wrong degree");
  for (u64 c : modulus_)
    if (c >= p) throw FieldError("modulus coefficient not reduced mod p");
  if (!is_irreducible_mod_p(p, modulus_)) throw FieldError("modulus is not irreducible");
  modulus_primitive_ = is_primitive_mod_p(p, modulus_);
  if (p == 2) {
    modulus_bits_ = u64{1} << k;
    for (unsigned i = 0; i < k; ++i)
      if (modulus_[i]) modulus_bits_ |= u64{1} << i;
    const u64 top = u64{1} << k, mask = top - 1;
    auto mulx = [&](u64 v) {
      v <<= 1;
      return (v & top) ? (v ^ modulus_bits_) & mask : v;
    };
    fold_.assign(8 * 256, 0);
    u64 basis = modulus_bits_ & mask;  // x^k mod modulus
    for (unsigned j = 0; j < 8; ++j) {
      u64 bit_images[8];
      for (unsigned b = 0; b < 8; ++b) {
        bit_images[b] = basis;
        basis = mulx(basis);
      }
      for (unsigned v = 1; v < 256; ++v) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(v));
        fold_[256 * j + v] = fold_[256 * j + (v & (v - 1))] ^ bit_images[low];
      }
    }
  }
  root_ = k >= 2 ? p : (p - modulus_[0]) % p;
  unit_factors_ = factor(size_ - 1 == 0 ? 1 : size_ - 1);

  auto has_full_order = [&](u64 v) {
    if (v == 0) return false;
    if (pow(v, size_ - 1) != 1) return false;
    for (auto [r, e] : unit_factors_) {
      (void)e;
      if (pow(v, (size_ - 1) / r) == 1) return false;
    }
    return true;
  };
  if (modulus_primitive_ && root_ != 0) {
    generator_ = root_;
  } else {
    generator_ = 1;
    while (!has_full_order(generator_)) ++generator_;
  }

  const u64 threshold = std::min(options.table_threshold, options.table_cap);
  if (size_ <= threshold) {
    const u64 n = size_ - 1;
    exp_.resize(2 * n);
    log_.assign(size_, 0);
    u64 x = 1;
    for (u64 i = 0; i < n; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      exp_[i + n] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = poly_mul(x, generator_);
    }
  }
}

std::string FieldCtx::name() const {
  if (k_ == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^" + std::to_string(k_);
}

FieldElem FieldCtx::element(u64 value) const {
  if (value >= size_) throw FieldError("element value out of range");
  return {this, value};
}

FieldElem FieldCtx::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return {this, static_cast<u64>(r)};
}

std::vector<u64> FieldCtx::digits(u64 v) const {
  std::vector<u64> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

u64 FieldCtx::from_digits(const std::vector<u64> &d) const {
  u64 v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
  return v;
}

u64 FieldCtx::add(u64 a, u64 b) const {
  if (p_ == 2) return a ^ b;
  u64 r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

u64 FieldCtx::neg(u64 a) const {
  if (p_ == 2) return a;
  u64 r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

u64 FieldCtx::sub(u64 a, u64 b) const { return add(a, neg(b)); }

namespace {

// Carry-less product of two polynomials over F_2, four bits of b at a time.
u128 clmul(u64 a, u64 b) {
  u128 table[16];
  table[0] = 0;
  for (int i = 1; i < 16; ++i) table[i] = (i & 1) ? table[i ^ 1] ^ a : table[i >> 1] << 1;
  u128 prod = 0;
  if (b == 0) return 0;
  for (int shift = (63 - __builtin_clzll(b)) & ~3; shift >= 0; shift -= 4) prod = (prod << 4) ^ table[(b >> shift) & 15];
  return prod;
}

int bit_degree(u64 x) { return 63 - __builtin_clzll(x); }

}  // namespace

u64 FieldCtx::poly_mul(u64 a, u64 b) const {
  if (p_ == 2) {
    const u128 prod = clmul(a, b);
    u64 r = static_cast<u64>(prod) & ((u64{1} << k_) - 1);
    u64 high = static_cast<u64>(prod >> k_);
    for (unsigned j = 0; high; ++j, high >>= 8) r ^= fold_[256 * j + (high & 255)];
    return r;
  }
  std::vector<u64> da = digits(a), db = digits(b);
  std::vector<u64> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
  }
  for (size_t i = prod.size(); i-- > k_;) {
    u64 lead = prod[i];
    if (!lead) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k_; ++j)
      prod[i - k_ + j] = subp(prod[i - k_ + j], mulmod(lead, modulus_[j], p_), p_);
  }
  prod.resize(k_);
  return from_digits(prod);
}

u64 FieldCtx::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return poly_mul(a, b);
}

u64 FieldCtx::inv(u64 a) const {
  if (a == 0) throw FieldError("inverse of zero");
  if (!exp_.empty()) {
    const u64 n = size_ - 1;
    return exp_[(n - log_[a]) % n];
  }
  if (p_ == 2) {
    // extended Euclid in F_2[x]
    u64 u = a, v = modulus_bits_, g1 = 1, g2 = 0;
    while (u != 1) {
      int j = bit_degree(u) - bit_degree(v);
      if (j < 0) {
        std::swap(u, v);
        std::swap(g1, g2);
        j = -j;
      }
      u ^= v << j;
      g1 ^= g2 << j;
    }
    return g1;
  }
  return pow(a, size_ - 2);
}

u64 FieldCtx::pow(u64 a, u64 e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const u64 n = size_ - 1;
    return exp_[static_cast<u64>(static_cast<u128>(log_[a]) * (e % n) % n)];
  }
  u64 result = 1;
  while (e) {
    if (e & 1) result = poly_mul(result, a);
    e >>= 1;
    if (e) a = poly_mul(a, a);
  }
  return result;
}

u64 FieldCtx::log(u64 a) const {
  if (exp_.empty()) throw FieldError("discrete log requires table mode");
  if (a == 0) throw FieldError("log of zero");
  return log_[a];
}

u64 FieldCtx::exp(u64 e) const {
  if (!exp_.empty()) return exp_[e % (size_ - 1)];
  return pow(generator_, e);
}

std::vector<u64> FieldCtx::dth_roots(u64 v, u64 d) const {
  if (d == 0) throw FieldError("0-th roots");
  if (v == 0) return {0};
  if (exp_.empty()) throw FieldError("root listing requires table mode");
  const u64 n = size_ - 1;
  const u64 g = gcd_u64(d % n == 0 ? n : d % n, n);
  const u64 l = log_[v];
  if (l % g != 0) return {};
  const u64 m = n / g;
  const u64 e0 = m == 1 ? 0 : mulmod((l / g) % m, inverse_mod((d / g) % m, m), m);
  std::vector<u64> roots;
  roots.reserve(g);
  for (u64 j = 0; j < g; ++j) roots.push_back(exp_[(e0 + j * m) % n]);
  std::sort(roots.begin(), roots.end());
  return roots;
}

u64 FieldCtx::count_dth_roots(u64 v, u64 d) const {
  if (d == 0) throw FieldError("0-th roots");
  if (v == 0) return 1;
  const u64 n = size_ - 1;
  const u64 g = gcd_u64(d, n);
  if (!exp_.empty()) return log_[v] % g == 0 ? g : 0;
  return pow(v, n / g) == 1 ? g : 0;
}

// ----------------------------------------------------------------- TowerMap

namespace {

FieldElem eval_modulus(const FieldCtx &src, const FieldElem &x) {
  const FieldCtx &dst = x.field();
  FieldElem acc = dst.one();
  for (size_t i = src.modulus().size(); i-- > 0;) acc = acc * x + dst.from_int(static_cast<long long>(src.modulus()[i]));
  return acc;
}

// Solve sum_i c_i * col_i = target over F_p; columns given as digit vectors.
std::optional<std::vector<u64>> solve_mod_p(std::vector<std::vector<u64>> cols, std::vector<u64> target, u64 p) {
  const size_t rows = target.size(), ncols = cols.size();
  // augmented matrix in row-major
  std::vector<std::vector<u64>> m(rows, std::vector<u64>(ncols + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
    m[r][ncols] = target[r];
  }
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t c = 0; c < ncols && row < rows; ++c) {
    size_t piv = row;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    u64 inv = inverse_mod(m[row][c], p);
    for (auto &v : m[row]) v = mulmod(v, inv, p);
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      u64 f = m[r][c];
      for (size_t cc = 0; cc <= ncols; ++cc) m[r][cc] = subp(m[r][cc], mulmod(f, m[row][cc], p), p);
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (size_t r = row; r < rows; ++r)
    if (m[r][ncols] != 0) return std::nullopt;
  std::vector<u64> sol(ncols, 0);
  for (size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = m[r][ncols];
  return sol;
}

}  // namespace

TowerMap::TowerMap(Field src, Field dst, FieldElem image_of_root)
    : src_(std::move(src)), dst_(std::move(dst)), image_(image_of_root) {
  if (src_->characteristic() != dst_->characteristic()) throw FieldError("embedding: characteristic mismatch");
  if (dst_->degree() % src_->degree() != 0) throw FieldError("embedding: degree does not divide");
  if (image_.field_ptr() != dst_.get()) throw FieldError("embedding: image not in destination");
  if (!eval_modulus(*src_, image_).is_zero()) throw FieldError("embedding: image is not a root of the source modulus");
  FieldElem power = dst_->one();
  for (unsigned i = 0; i < src_->degree(); ++i) {
    basis_images_.push_back(power.value());
    power = power * image_;
  }
}

FieldElem TowerMap::operator()(const FieldElem &x) const {
  if (x.field_ptr() != src_.get()) throw FieldError("embedding applied to an element of another field");
  if (src_.get() == dst_.get()) return x;
  const FieldCtx &d = *dst_;
  std::vector<u64> digits = src_->digits(x.value());
  u64 acc = 0;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (!digits[i]) continue;
    acc = d.add(acc, d.mul(d.from_int(static_cast<long long>(digits[i])).value(), basis_images_[i]));
  }
  return {dst_.get(), acc};
}

FieldElem TowerMap::preimage(const FieldElem &y) const {
  if (y.field_ptr() != dst_.get()) throw FieldError("preimage of an element of another field");
  std::vector<std::vector<u64>> cols;
  for (u64 b : basis_images_) cols.push_back(dst_->digits(b));
  auto sol = solve_mod_p(std::move(cols), dst_->digits(y.value()), dst_->characteristic());
  if (!sol) throw FieldError("element is not in the image of the embedding");
  return {src_.get(), src_->from_digits(*sol)};
}

bool TowerMap::in_image(const FieldElem &y) const {
  try {
    preimage(y);
    return true;
  } catch (const FieldError &) {
    return false;
  }
}

TowerMap TowerMap::after(const TowerMap &inner) const {
  if (inner.dst_.get() != src_.get()) throw FieldError("embedding composition: fields do not chain");
  return TowerMap(inner.src_, dst_, (*this)(inner.image_));
}

TowerMap compute_embedding(const Field &src, const Field &dst) {
  if (src->characteristic() != dst->characteristic()) throw FieldError("embedding: characteristic mismatch");
  if (dst->degree() % src->degree() != 0) throw FieldError("embedding: degree does not divide");
  const u64 p = src->characteristic();
  if (src->degree() == 1) {
    return TowerMap(src, dst, dst->from_int(static_cast<long long>((p - src->modulus()[0]) % p)));
  }
  const u64 ns = src->size(), nd = dst->size();
  // Roots of src's modulus are nonzero and lie in the order-(ns-1) subgroup.
  const FieldElem base = dst->generator().pow((nd - 1) / (ns - 1));
  FieldElem x = dst->one();
  std::optional<FieldElem> found;
  for (u64 e = 0; e < ns - 1; ++e, x = x * base) {
    if (src->modulus_primitive() && gcd_u64(e, ns - 1) != 1) continue;
    if (eval_modulus(*src, x).is_zero()) {
      found = x;
      break;
    }
  }
  if (!found) throw FieldError("embedding: no root of the source modulus found");
  FieldElem best = *found, r = *found;
  for (unsigned j = 1; j < src->degree(); ++j) {
    r = r.pow(p);
    if (r.value() < best.value()) best = r;
  }
  return TowerMap(src, dst, best);
}

// ------------------------------------------------------------ FieldRegistry

FieldRegistry &FieldRegistry::global() {
  static FieldRegistry registry;
  return registry;
}

Field FieldRegistry::get(u64 p, unsigned k) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw FieldError("extension degree must be positive");
  u64 size;
  try {
    size = checked_pow(p, k);
  } catch (const std::overflow_error &) {
    throw FieldError("field size cap exceeded");
  }
  if (size > (u64{1} << 62)) throw FieldError("field size cap exceeded");
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(p, k);
  if (auto it = fields_.find(key); it != fields_.end()) return it->second;
  auto ov = overrides_.find(key);
  std::vector<u64> modulus = ov != overrides_.end() ? ov->second : default_modulus(p, k);
  auto field = std::make_shared<const FieldCtx>(p, k, std::move(modulus), options_);
  fields_.emplace(key, field);
  return field;
}

const TowerMap &FieldRegistry::embedding(const Field &src, const Field &dst) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(src.get(), dst.get());
  auto it = embeddings_.find(key);
  if (it == embeddings_.end()) {
    it = embeddings_.emplace(key, std::make_unique<TowerMap>(compute_embedding(src, dst))).first;
  }
  return *it->second;
}

void FieldRegistry::set_modulus(u64 p, unsigned k, std::vector<u64> modulus) {
  if (modulus.size() != k) throw FieldError("modulus override has the wrong degree");
  for (u64 c : modulus)
    if (c >= p) throw FieldError("modulus override coefficient not reduced");
  if (!is_irreducible_mod_p(p, modulus)) throw FieldError("modulus override is not irreducible");
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(p, k);
  if (auto it = fields_.find(key); it != fields_.end() && it->second->modulus() != modulus)
    throw FieldError("modulus override after the field was built");
  overrides_[key] = std::move(modulus);
}

void FieldRegistry::load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FieldError("cannot open field config " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw FieldError(path + ":" + std::to_string(lineno) + ": expected key = value");
      continue;
    }
    std::istringstream key_stream(line.substr(0, eq));
    std::string key;
    key_stream >> key;
    std::istringstream value(line.substr(eq + 1));
    if (key == "table_threshold") {
      u64 t;
      if (!(value >> t)) throw FieldError(path + ":" + std::to_string(lineno) + ": bad threshold");
      FieldOptions o = options();
      o.table_threshold = t;
      set_options(o);
    } else if (key.rfind("modulus.", 0) == 0) {
      u64 p;
      unsigned k;
      char dot;
      std::istringstream ks(key.substr(8));
      if (!(ks >> p >> dot >> k) || dot != '.') throw FieldError(path + ":" + std::to_string(lineno) + ": bad key");
      std::vector<u64> coeffs;
      u64 c;
      while (value >> c) coeffs.push_back(c);
      set_modulus(p, k, coeffs);
    } else {
      throw FieldError(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
  }
}

void FieldRegistry::set_options(FieldOptions options) {
  if (options.table_threshold > options.table_cap) throw FieldError("table threshold above cap");
  std::lock_guard lock(mutex_);
  options_ = options;
}

FieldOptions FieldRegistry::options() const {
  std::lock_guard lock(mutex_);
  return options_;
}

Field build_field(u64 p, unsigned k) { return FieldRegistry::global().get(p, k); }

const TowerMap &embed(const Field &src, const Field &dst) { return FieldRegistry::global().embedding(src, dst); }

namespace {

Field owning_field(const FieldElem &e) {
  const FieldCtx &f = e.field();
  return FieldRegistry::global().get(f.characteristic(), f.degree());
}

void check_subfield(const FieldCtx &f, const FieldCtx &sub) {
  if (f.characteristic() != sub.characteristic() || f.degree() % sub.degree() != 0)
    throw FieldError(sub.name() + " is not a subfield of " + f.name());
}

}  // namespace

FieldElem norm(const FieldElem &e, const Field &sub) {
  Field f = owning_field(e);
  if (f.get() != e.field_ptr()) throw FieldError("norm: element does not belong to a registry field");
  check_subfield(*f, *sub);
  FieldElem n = e.pow((f->size() - 1) / (sub->size() - 1));
  return embed(sub, f).preimage(n);
}

FieldElem trace(const FieldElem &e, const Field &sub) {
  Field f = owning_field(e);
  if (f.get() != e.field_ptr()) throw FieldError("trace: element does not belong to a registry field");
  check_subfield(*f, *sub);
  FieldElem sum = f->zero(), conj = e;
  const unsigned steps = f->degree() / sub->degree();
  for (unsigned i = 0; i < steps; ++i) {
    sum = sum + conj;
    conj = conj.frobenius(sub->degree());
  }
  return embed(sub, f).preimage(sum);
}

FieldElem root_of_unity(const Field &f, u64 m) {
  if (m == 0 || (f->size() - 1) % m != 0)
    throw FieldError("no primitive " + std::to_string(m) + "-th root of unity in " + f->name());
  return f->generator().pow((f->size() - 1) / m);
}

bool is_dth_power(const FieldElem &e, u64 d) {
  if (e.is_zero()) throw FieldError("is_dth_power of zero");
  const u64 n = e.field().size() - 1;
  return e.pow(n / gcd_u64(d, n)).is_one();
}

}  // namespace hq
