#pragma once

// Finite fields F_{p^k} with p^k < 2^63.
//
// Elements are stored as their canonical integer: the coefficient vector in
// the polynomial basis 1, a, a^2, ... (a a root of the modulus) read as a
// base-p numeral with the constant term least significant. That integer is
// also the canonical element order used wherever "smallest" is specified.
//
// Small fields (p^k <= table threshold) multiply through log/antilog tables;
// larger ones use coefficient arithmetic with reduction by the modulus.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hq/numtheory.hpp"

namespace hq {

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class FieldElem {
public:
  FieldElem() = default;
  FieldElem(const FieldCtx *field, u64 value) : field_(field), value_(value) {}

  const FieldCtx &field() const;
  const FieldCtx *field_ptr() const { return field_; }
  u64 value() const { return value_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const;

  FieldElem operator+(const FieldElem &o) const;
  FieldElem operator-(const FieldElem &o) const;
  FieldElem operator*(const FieldElem &o) const;
  FieldElem operator/(const FieldElem &o) const;
  FieldElem operator-() const;
  FieldElem &operator+=(const FieldElem &o) { return *this = *this + o; }
  FieldElem &operator-=(const FieldElem &o) { return *this = *this - o; }
  FieldElem &operator*=(const FieldElem &o) { return *this = *this * o; }

  FieldElem pow(u64 e) const;
  FieldElem inverse() const;
  // x -> x^(p^times)
  FieldElem frobenius(unsigned times = 1) const;
  // Multiplicative order; throws on zero.
  u64 order() const;

  // Equality requires the same owning field.
  bool operator==(const FieldElem &o) const { return field_ == o.field_ && value_ == o.value_; }
  bool operator!=(const FieldElem &o) const { return !(*this == o); }
  bool operator<(const FieldElem &o) const { return value_ < o.value_; }

private:
  void same_field(const FieldElem &o) const;

  const FieldCtx *field_ = nullptr;
  u64 value_ = 0;
};

struct FieldOptions {
  u64 table_threshold = u64{1} << 20;  // log/antilog tables when p^k <= threshold
  u64 table_cap = u64{1} << 26;        // hard ceiling for the threshold
};

class FieldCtx {
public:
  // modulus: coefficients c_0..c_{k-1} of the monic degree-k modulus.
  // Throws FieldError if it is not irreducible.
  FieldCtx(u64 p, unsigned k, std::vector<u64> modulus, FieldOptions options = {});

  u64 characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  u64 size() const { return size_; }
  const std::vector<u64> &modulus() const { return modulus_; }
  bool table_mode() const { return !exp_.empty(); }
  bool modulus_primitive() const { return modulus_primitive_; }
  std::string name() const;

  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, 1}; }
  FieldElem element(u64 value) const;
  FieldElem from_int(long long n) const;
  FieldElem root() const { return {this, root_}; }           // root of the modulus
  FieldElem generator() const { return {this, generator_}; }  // primitive element
  const std::map<u64, unsigned> &unit_group_factors() const { return unit_factors_; }

  std::vector<u64> digits(u64 v) const;
  u64 from_digits(const std::vector<u64> &d) const;

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const;

  // Discrete log to base generator(); table mode only.
  u64 log(u64 a) const;
  u64 exp(u64 e) const;

  // All y with y^d = v (table mode), in canonical order.
  std::vector<u64> dth_roots(u64 v, u64 d) const;
  // Number of y with y^d = v (any mode).
  u64 count_dth_roots(u64 v, u64 d) const;

private:
  u64 poly_mul(u64 a, u64 b) const;

  u64 p_;
  unsigned k_;
  u64 size_;
  std::vector<u64> modulus_;
  u64 modulus_bits_ = 0;  // p = 2: full modulus including x^k
  std::vector<u64> fold_;  // p = 2: fold_[256 j + v] = v x^(k + 8j) mod modulus
  bool modulus_primitive_ = false;
  u64 root_ = 0;
  u64 generator_ = 0;
  std::map<u64, unsigned> unit_factors_;
  std::vector<std::uint32_t> exp_;  // length 2(size-1)
  std::vector<std::uint32_t> log_;
};

// Monic irreducible/primitive tests over F_p; coefficients c_0..c_{k-1}.
bool is_irreducible_mod_p(u64 p, const std::vector<u64> &modulus);
bool is_primitive_mod_p(u64 p, const std::vector<u64> &modulus);
// Smallest monic primitive irreducible of degree k, comparing coefficient
// sequences lexicographically from c_0 upwards.
std::vector<u64> default_modulus(u64 p, unsigned k);

/// Embedding of a subfield: sends the root of src's modulus to image_of_root.
class TowerMap {
public:
  TowerMap(Field src, Field dst, FieldElem image_of_root);

  const Field &src() const { return src_; }
  const Field &dst() const { return dst_; }
  const FieldElem &image_of_root() const { return image_; }

  FieldElem operator()(const FieldElem &x) const;
  // Inverse on the image; throws FieldError for elements outside it.
  FieldElem preimage(const FieldElem &y) const;
  bool in_image(const FieldElem &y) const;

  // (*this) after inner: F_a -> F_b -> F_c
  TowerMap after(const TowerMap &inner) const;

private:
  Field src_;
  Field dst_;
  FieldElem image_;
  std::vector<u64> basis_images_;  // images of root^i, i < src degree
};

class FieldRegistry {
public:
  static FieldRegistry &global();

  FieldRegistry() = default;
  FieldRegistry(const FieldRegistry &) = delete;
  FieldRegistry &operator=(const FieldRegistry &) = delete;

  Field get(u64 p, unsigned k);
  const TowerMap &embedding(const Field &src, const Field &dst);

  // Override the modulus for (p,k); must precede first use of that field.
  void set_modulus(u64 p, unsigned k, std::vector<u64> modulus);
  // Key-value file, one entry per line: "modulus.<p>.<k> = c0 c1 ... c_{k-1}"
  // plus optional "table_threshold = N". '#' starts a comment.
  void load_config(const std::string &path);
  void set_options(FieldOptions options);
  FieldOptions options() const;

private:
  mutable std::mutex mutex_;
  FieldOptions options_;
  std::map<std::pair<u64, unsigned>, std::vector<u64>> overrides_;
  std::map<std::pair<u64, unsigned>, Field> fields_;
  std::map<std::pair<const FieldCtx *, const FieldCtx *>, std::unique_ptr<TowerMap>> embeddings_;
};

// Canonical field for (p,k) from the global registry; idempotent.
// Throws FieldError if p is not prime or p^k exceeds 2^62.
Field build_field(u64 p, unsigned k);

// Deterministic embedding: smallest root of src's modulus in dst (cached).
const TowerMap &embed(const Field &src, const Field &dst);
// Same, without touching the registry cache.
TowerMap compute_embedding(const Field &src, const Field &dst);

// Product / sum of the conjugates of e over sub, returned as an element of sub.
FieldElem norm(const FieldElem &e, const Field &sub);
FieldElem trace(const FieldElem &e, const Field &sub);

// generator^((|F|-1)/m); throws FieldError unless m | |F|-1.
FieldElem root_of_unity(const Field &f, u64 m);
bool is_dth_power(const FieldElem &e, u64 d);

}  // namespace hq
