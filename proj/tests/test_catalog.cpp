#include "doctest.h"

#include <set>

#include "hq/subgroup_catalog.hpp"

using namespace hq;

namespace {

const CatalogEntry *find(const std::vector<CatalogEntry> &v, const std::string &label, const std::string &params = "") {
  for (const auto &e : v)
    if (e.label == label && (params.empty() || e.params == params)) return &e;
  return nullptr;
}

BigInt bpow(u64 b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(psu3_order(2) == 72);
  CHECK(psu3_order(3) == 6048);
  CHECK(psu3_order(4) == 62400);
  CHECK(pgu3_order_big(2) == 216);
  for (u64 q : {2, 3, 4, 5, 8, 11, 32, 512}) {
    const BigInt Q = q;
    const BigInt d = (q + 1) % 3 == 0 ? 3 : 1;
    CHECK(pgu3_order_big(q) == psu3_order(q) * d);
    CHECK(pgu3_order_big(q) == Q * Q * Q * (Q * Q * Q + 1) * (Q * Q - 1));
  }
}

TEST_CASE("MH catalog examples") {
  const auto m5 = mh_orders(5);
  REQUIRE(find(m5, "MH-i"));
  CHECK(find(m5, "MH-i")->order == 1000);
  const auto m8 = mh_orders(8);
  REQUIRE(find(m8, "MH-iv"));
  CHECK(find(m8, "MH-iv")->order == 57);
  const auto m2 = mh_orders(2);
  REQUIRE(find(m2, "MH-xv"));
  CHECK(find(m2, "MH-xv")->order == 36);
  CHECK_FALSE(find(mh_orders(4), "MH-xv"));
  CHECK_THROWS_AS(mh_orders(6), std::invalid_argument);
  // subfield cases of PSU(3,2^9): 9/m must be an odd prime
  const auto m512 = mh_orders(512);
  CHECK_FALSE(find(m512, "MH-xiii", "m=1"));
  CHECK(find(m512, "MH-xiii", "m=3"));
  CHECK_FALSE(find(m512, "MH-xiii", "m=9"));
  REQUIRE(find(m512, "MH-xiv", "m=3"));
  CHECK(find(m512, "MH-xiv", "m=3")->order == 3 * psu3_order(8));
  CHECK(find(m512, "MH-xiv", "m=3")->subfield_q == 8);
  for (const auto &e : m512) CHECK_FALSE(e.formula.empty());
}

TEST_CASE("every MH order divides |PSU(3,q)|") {
  for (u64 q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 64, 512}) {
    const BigInt g = psu3_order(q);
    for (const auto &e : mh_orders(q)) CHECK_MESSAGE(g % e.order == 0, "q=" << q << " " << e.label << " " << e.params);
  }
}

TEST_CASE("order_excluded") {
  CHECK(order_excluded(1, 4, 1).size() == mh_orders(4).size());
  // 21 = q^2 + q + 1 at q = 4 against PSU(3,64)
  const auto surv = order_excluded(21, 64, 1);
  CHECK_FALSE(find(surv, "MH-iii"));
  CHECK_FALSE(find(surv, "MH-iv"));
  // case iv of PSU(3,2^m) with multiplier 3 contains (2^{3m}+1)/3 exactly when m = 3
  for (unsigned m = 3; m <= 12; ++m) {
    const BigInt target = (bpow(2, 3 * m) + 1) / 3;
    const bool survives = find(order_excluded(target, u64{1} << m, 3), "MH-iv") != nullptr;
    CHECK(survives == (m == 3));
  }
  CHECK_THROWS(order_excluded(0, 4, 1));
}

TEST_CASE("Dickson catalog") {
  const auto d4 = dickson_orders(4);
  std::set<BigInt> cyclic;
  for (const auto &e : d4)
    if (e.label == "Di-i") cyclic.insert(e.order);
  CHECK(cyclic == std::set<BigInt>{1, 3, 5});
  CHECK(find(d4, "Di-vi"));
  CHECK(find(d4, "Di-iv"));
  CHECK_FALSE(find(dickson_orders(8), "Di-iv"));
  CHECK_FALSE(find(dickson_orders(8), "Di-v"));
  CHECK(find(dickson_orders(7), "Di-v"));
  for (u64 q : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32, 49, 64, 81, 128}) {
    const BigInt pgl = BigInt(q) * (BigInt(q) * q - 1);
    for (const auto &e : dickson_orders(q)) CHECK_MESSAGE(pgl % e.order == 0, "q=" << q << " " << e.label << " " << e.params);
    // odd order coprime to p forces a cyclic group
    CHECK(noncyclic_odd_coprime(q).empty());
    for (const auto &e : noncyclic_odd_order(q)) CHECK(e.order % 2 == 1);
  }
}

TEST_CASE("lemmino arithmetic") {
  // p' = 3, m = 5: 1 - 32 + 1024 = 993 > 99
  BigInt alt = 0;
  for (int i = 0; i < 3; ++i) alt += (i % 2 ? -1 : 1) * bpow(32, i);
  CHECK(alt == 993);
  CHECK(alt > 3 * 33);
  CHECK((bpow(2, 5) + 1) / 3 == 11);
  const ScanReport r = lemmino_scan(20);
  CHECK(r.checks > 0);
  CHECK(r.counterexamples.empty());
  CHECK(lemmino_scan(40).counterexamples.empty());
  CHECK_THROWS(lemmino_scan(2));
}

TEST_CASE("quattordici") {
  const auto s = quattordici(20);
  REQUIRE(s.size() == 1);
  CHECK(s[0].m == 3);
  CHECK(s[0].label == "MH-iv");
  CHECK(quattordici(40).size() == 1);
}

TEST_CASE("primovalore") {
  CHECK(primovalore_remainder() == std::vector<long long>{-1568, 2128});
  CHECK(19712 == 112 * 176);
  CHECK(2128 * 10 - 1568 == 19712);
  CHECK((2128 * 4 - 1568) % 22 == 14);
  // the remainder agrees with direct evaluation modulo q^2+q+2 at small q
  for (long long q = 1; q < 200; ++q) {
    const BigInt Q = q, lhs = bpow(q, 9) * (bpow(q, 9) + 1) * (bpow(q, 6) - 1);
    const BigInt mod = Q * Q + Q + 2;
    BigInt r = (BigInt(2128) * q - 1568) % mod;
    if (r < 0) r += mod;
    CHECK(lhs % mod == r);
  }
  const PrimovaloreResult small = primovalore_scan(1000);
  CHECK(small.direct == std::vector<u64>{1, 2, 3, 10});
  CHECK(small.agree());
  const PrimovaloreResult par = primovalore_scan(20000, 4);
  CHECK(par.direct == small.direct);
  CHECK(par.linear == small.linear);
}

TEST_CASE("secondovalore catalog") {
  for (u64 q : {2, 3, 4, 5, 7}) {
    const SecondovaloreResult r = secondovalore_check(q);
    CHECK(r.group_order == q * q + q + 1);
    CHECK(r.checked > 0);
    for (const auto &s : r.survivors) CHECK_MESSAGE((s == "MH-i" || s == "MH-ii" || s == "MH-v"), "q=" << q << " " << s);
  }
}
