#include "doctest.h"

#include "hq/gf_tower.hpp"
#include "hq/poly.hpp"
#include "props.hpp"

using namespace hq;

TEST_CASE("numtheory basics") {
  CHECK(is_prime(2));
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(3ull * 11 * 31));
  CHECK(factor(1023) == std::map<u64, unsigned>{{3, 1}, {11, 1}, {31, 1}});
  CHECK(factor(u64{1} << 40) == std::map<u64, unsigned>{{2, 40}});
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS(divisors(0));
  CHECK(prime_power(512) == std::make_pair(u64{2}, 9u));
  CHECK(prime_power(729) == std::make_pair(u64{3}, 6u));
  CHECK_FALSE(prime_power(12));
  CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
  CHECK(inverse_mod(3, 7) == 5);

  FactoredInt f(1023);
  f *= 1025;
  CHECK(f.value() == u64{1023} * 1025);
  CHECK(f.divisible_by(41));
  f.divide_by_prime(41);
  CHECK(f.value() == u64{1023} * 25);
}

TEST_CASE("factor agrees with trial division") {
  props::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    u64 n = std::uniform_int_distribution<u64>(2, 2000000)(rng), m = n;
    std::map<u64, unsigned> expect;
    for (u64 d = 2; d * d <= m; ++d)
      while (m % d == 0) ++expect[d], m /= d;
    if (m > 1) ++expect[m];
    CHECK(factor(n) == expect);
  }
}

TEST_CASE("prime fields and small extensions") {
  const Field f2 = build_field(2, 1);
  CHECK(f2->size() == 2);
  CHECK(f2->modulus() == std::vector<u64>{1});
  CHECK(build_field(2, 1) == f2);

  const Field f5 = build_field(5, 1);
  CHECK(f5->from_int(-1).value() == 4);
  CHECK((f5->element(2) * f5->element(3)).value() == 1);

  const Field f4 = build_field(2, 2);
  const FieldElem w = f4->root();
  CHECK(w * w == w + f4->one());
  CHECK_THROWS_AS(FieldCtx(2, 2, {0, 0}), FieldError);
  CHECK_THROWS_AS(build_field(4, 2), FieldError);
}

TEST_CASE("default modulus is the smallest primitive irreducible") {
  for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{2, 2}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {2, 10}}) {
    const std::vector<u64> m = default_modulus(p, k);
    CHECK(is_primitive_mod_p(p, m));
    // brute force over all monic candidates in lexicographic order from c_0
    const u64 count = checked_pow(p, k);
    std::vector<u64> first;
    for (u64 idx = 0; idx < count && first.empty(); ++idx) {
      std::vector<u64> c(k);
      for (unsigned j = 0; j < k; ++j) c[j] = (idx / checked_pow(p, k - 1 - j)) % p;
      if (is_primitive_mod_p(p, c)) first = c;
    }
    CHECK(m == first);
  }
}

TEST_CASE("generator of F_1024 has order 1023") {
  const Field f = build_field(2, 10);
  const FieldElem g = f->generator();
  CHECK(g.pow(1023).is_one());
  for (u64 r : {3, 11, 31}) CHECK_FALSE(g.pow(1023 / r).is_one());
  CHECK(g.order() == 1023);
  CHECK(f->table_mode());
}

TEST_CASE("F_{2^18} contains exactly 64 solutions of x^64 = x") {
  const Field big = build_field(2, 18);
  u64 fixed = 0;
  for (u64 v = 0; v < big->size(); ++v) fixed += big->pow(v, 64) == v ? 1 : 0;
  CHECK(fixed == 64);
  const Field f64 = build_field(2, 6);
  const TowerMap &m = embed(f64, big);
  for (u64 v = 0; v < f64->size(); ++v) {
    const FieldElem y = m(f64->element(v));
    CHECK(y.pow(64) == y);
    CHECK(m.preimage(y).value() == v);
  }
}

TEST_CASE("field axioms on random samples") {
  for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {2, 4}, {3, 2}, {5, 3}, {2, 10}, {2, 18}, {3, 12}, {7, 4}})
    CHECK_MESSAGE(props::field_axioms(build_field(p, k), 1000 + p * 100 + k, 10000), "F_" << p << "^" << k);
}

TEST_CASE("poly-mode fields: F_{2^54} and forced coefficient arithmetic") {
  const Field f = build_field(2, 54);
  CHECK_FALSE(f->table_mode());
  CHECK(props::field_axioms(f, 54, 10000));
  props::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const FieldElem a = props::random_unit(*f, rng);
    CHECK(a * a.inverse() == f->one());
    CHECK(a.frobenius(54) == a);
  }
  // the same F_64 computed without tables matches the table field
  FieldOptions opt;
  opt.table_threshold = 1;
  const FieldCtx slow(2, 6, default_modulus(2, 6), opt);
  const Field fast = build_field(2, 6);
  CHECK_FALSE(slow.table_mode());
  for (u64 a = 0; a < 64; ++a)
    for (u64 b = 0; b < 64; ++b) REQUIRE(slow.mul(a, b) == fast->mul(a, b));
  for (u64 a = 1; a < 64; ++a) CHECK(slow.inv(a) == fast->inv(a));
  const FieldCtx slow3(3, 4, default_modulus(3, 4), opt);
  const Field fast3 = build_field(3, 4);
  for (u64 a = 0; a < 81; ++a)
    for (u64 b = 0; b < 81; ++b) REQUIRE(slow3.mul(a, b) == fast3->mul(a, b));
}

TEST_CASE("Frobenius is additive, multiplicative and of order k") {
  props::Rng rng(3);
  for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{2, 6}, {3, 4}, {2, 54}}) {
    const Field f = build_field(p, k);
    for (int i = 0; i < 500; ++i) {
      const FieldElem a = props::random_elem(*f, rng), b = props::random_elem(*f, rng);
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
      CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
      CHECK(a.frobenius(k) == a);
    }
  }
}

TEST_CASE("embeddings") {
  const Field f2 = build_field(2, 1), f4 = build_field(2, 2), f8 = build_field(2, 3);
  const TowerMap &e = embed(f2, f4);
  CHECK(e(f2->zero()) == f4->zero());
  CHECK(e(f2->one()) == f4->one());
  CHECK_THROWS_AS(embed(f4, f8), FieldError);
  CHECK_THROWS_AS(embed(f4, build_field(3, 2)), FieldError);

  // ring homomorphism, injective, and fixed by the subfield Frobenius
  props::Rng rng(5);
  for (auto [k1, k2] : std::vector<std::pair<unsigned, unsigned>>{{2, 6}, {3, 6}, {6, 18}, {9, 54}, {2, 10}}) {
    const Field a = build_field(2, k1), b = build_field(2, k2);
    const TowerMap &m = embed(a, b);
    const u64 sub = a->size();
    for (int i = 0; i < 200; ++i) {
      const FieldElem x = props::random_elem(*a, rng), y = props::random_elem(*a, rng);
      CHECK(m(x + y) == m(x) + m(y));
      CHECK(m(x * y) == m(x) * m(y));
      CHECK(m(x).pow(sub) == m(x));
      CHECK(m.preimage(m(x)) == x);
    }
  }
  const Field f3 = build_field(3, 1), f9 = build_field(3, 2), f729 = build_field(3, 6);
  const TowerMap &m = embed(f9, f729);
  CHECK(m(f9->root()).pow(9) == m(f9->root()));
  CHECK(embed(f3, f9)(f3->element(2)) == f9->element(2));
  CHECK_FALSE(m.in_image(f729->generator()));
  CHECK_THROWS_AS(m.preimage(f729->generator()), FieldError);
}

TEST_CASE("norm and trace") {
  const Field f2 = build_field(2, 1), f4 = build_field(2, 2);
  const FieldElem w = f4->generator();
  CHECK(norm(w, f2) == f2->one());
  CHECK(trace(w, f2) == f2->one());
  for (u64 q : {2, 3, 4, 8, 9}) {
    const auto [p, e] = *prime_power(q);
    const Field big = build_field(p, 2 * e), sub = build_field(p, e);
    u64 ones = 0;
    for (u64 v = 1; v < big->size(); ++v) ones += norm(big->element(v), sub) == sub->one() ? 1 : 0;
    CHECK(ones == q + 1);
    // trace is onto with kernel of size q
    u64 zeros = 0;
    for (u64 v = 0; v < big->size(); ++v) zeros += trace(big->element(v), sub).is_zero() ? 1 : 0;
    CHECK(zeros == q);
  }
}

TEST_CASE("roots of unity and power classes") {
  const Field f = build_field(2, 10);
  const FieldElem e = root_of_unity(f, 33);
  CHECK(e.pow(33).is_one());
  CHECK_FALSE(e.pow(11).is_one());
  CHECK_FALSE(e.pow(3).is_one());
  CHECK(e.order() == 33);
  CHECK_THROWS_AS(root_of_unity(f, 9), FieldError);
  CHECK(root_of_unity(f, 1).is_one());
  for (u64 m : divisors(1023)) CHECK(root_of_unity(f, m).order() == m);

  CHECK(is_dth_power(f->one(), 7));
  for (u64 q : {2, 8, 32}) {
    const auto [p, e2] = *prime_power(q);
    const Field fq2 = build_field(p, 2 * e2);
    CHECK_FALSE(is_dth_power(fq2->generator(), 3));
    if (fq2->size() <= 4096) {
      u64 cubes = 0;
      for (u64 v = 1; v < fq2->size(); ++v) cubes += is_dth_power(fq2->element(v), 3) ? 1 : 0;
      CHECK(cubes == (fq2->size() - 1) / 3);
    }
  }
  const Field f54 = build_field(2, 54);
  CHECK_FALSE(is_dth_power(f54->generator(), 3));
  CHECK(is_dth_power(f54->generator().pow(3), 3));
}

TEST_CASE("d-th roots") {
  const Field f = build_field(3, 4);
  for (u64 v = 0; v < f->size(); ++v)
    for (u64 d : {2, 4, 5, 10}) {
      const auto r = f->dth_roots(v, d);
      u64 brute = 0;
      for (u64 y = 0; y < f->size(); ++y) brute += f->pow(y, d) == v ? 1 : 0;
      CHECK(r.size() == brute);
      CHECK(f->count_dth_roots(v, d) == brute);
      for (u64 y : r) CHECK(f->pow(y, d) == v);
    }
}

TEST_CASE("field config file") {
  FieldRegistry reg;
  const std::string path = "hq_field_config_test.txt";
  {
    std::FILE *fp = std::fopen(path.c_str(), "w");
    std::fputs("# comment\nmodulus.2.4 = 1 0 0 1\ntable_threshold = 8\n", fp);
    std::fclose(fp);
  }
  reg.load_config(path);
  std::remove(path.c_str());
  const Field f = reg.get(2, 4);
  CHECK(f->modulus() == std::vector<u64>{1, 0, 0, 1});
  CHECK_FALSE(f->table_mode());
  CHECK(props::field_axioms(f, 4, 2000));
  CHECK_THROWS(reg.set_modulus(2, 4, {1, 1, 0, 0}));
}

TEST_CASE("univariate polynomials") {
  const Field f = build_field(5, 2);
  using poly::Poly;
  const FieldElem one = f->one(), zero = f->zero();
  const Poly x2m1{-one, zero, one};  // x^2 - 1
  CHECK(poly::roots(x2m1) == std::vector<FieldElem>{one, -one});
  props::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    Poly a, b;
    for (int j = 0; j < 6; ++j) a.push_back(props::random_elem(*f, rng));
    for (int j = 0; j < 3; ++j) b.push_back(props::random_elem(*f, rng));
    b.push_back(props::random_unit(*f, rng));
    poly::trim(a);
    const auto [qq, r] = poly::divmod(a, b);
    CHECK(poly::add(poly::mul(qq, b), r) == a);
    CHECK(poly::degree(r) < poly::degree(b));
    // roots are exactly the zeros found by evaluation
    std::vector<FieldElem> brute;
    for (u64 v = 0; v < f->size(); ++v)
      if (poly::eval(b, f->element(v)).is_zero()) brute.push_back(f->element(v));
    CHECK(poly::roots(b) == brute);
  }
}
