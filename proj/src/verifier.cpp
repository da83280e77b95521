#include "hq/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "hq/linpoly.hpp"
#include "hq/ramification.hpp"
#include "hq/subgroup_catalog.hpp"

namespace hq {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unsupported: return "unsupported";
  }
  return "?";
}

nlohmann::ordered_json CheckReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["name"] = name;
  j["params"] = params;
  j["verdict"] = to_string(verdict);
  nlohmann::ordered_json ev = nlohmann::ordered_json::array();
  for (const auto &e : evidence) {
    nlohmann::ordered_json x;
    x["key"] = e.key;
    if (e.expected) x["expected"] = *e.expected;
    x["computed"] = e.computed;
    ev.push_back(x);
  }
  j["evidence"] = ev;
  j["citation"] = citation;
  if (!error.empty()) j["error"] = error;
  if (with_timing) j["millis"] = static_cast<long long>(millis);
  return j;
}

std::string CheckReport::to_table_row(bool with_timing) const {
  std::ostringstream os;
  std::string ps;
  for (const auto &[k, v] : params) ps += (ps.empty() ? "" : ",") + k + "=" + v;
  os << name << (ps.empty() ? "" : "(" + ps + ")") << "  " << to_string(verdict);
  if (with_timing) os << "  " << static_cast<long long>(millis) << "ms";
  for (const auto &e : evidence) {
    os << "\n    " << e.key << " = " << e.computed.dump();
    if (e.expected) os << (*e.expected == e.computed ? "  ok" : "  expected " + e.expected->dump());
  }
  if (!error.empty()) os << "\n    error: " << error;
  return os.str();
}

namespace {

// --- parameter helpers ---

void allow_keys(const Params &p, std::initializer_list<const char *> keys) {
  for (const auto &[k, v] : p) {
    bool ok = false;
    for (const char *a : keys) ok = ok || k == a;
    if (!ok) throw InvalidParams("unknown parameter '" + k + "'");
  }
}

u64 get_u64(const Params &p, const std::string &key, u64 def) {
  auto it = p.find(key);
  if (it == p.end()) return def;
  try {
    size_t pos = 0;
    const unsigned long long v = std::stoull(it->second, &pos);
    if (pos != it->second.size() || it->second.empty() || it->second[0] == '-') throw std::invalid_argument("");
    return v;
  } catch (const std::exception &) {
    throw InvalidParams("parameter " + key + " must be a nonnegative integer, got '" + it->second + "'");
  }
}

u64 require_prime_power(u64 q) {
  if (!prime_power(q)) throw InvalidParams(std::to_string(q) + " is not a prime power");
  return q;
}

json big(const BigInt &v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<u64>::max())) return static_cast<u64>(v);
  return v.str();
}

Evidence ev(std::string key, json expected, json computed) { return {std::move(key), std::move(expected), std::move(computed)}; }
Evidence info(std::string key, json computed) { return {std::move(key), std::nullopt, std::move(computed)}; }

// --- checks ---

std::vector<Evidence> check_hermitian_count(const Params &p, const RunOptions &o) {
  allow_keys(p, {"q", "model"});
  const u64 q = require_prime_power(get_u64(p, "q", 2));
  const std::string kind = p.count("model") ? p.at("model") : "fermat";
  if (kind != "fermat" && kind != "norm-trace") throw InvalidParams("model must be fermat or norm-trace");
  if (q > 4096) throw UnsupportedError("q^2 exceeds the enumeration cap");
  const CurveModel m = kind == "fermat" ? CurveModel::fermat(q) : CurveModel::norm_trace(q);
  const u64 count = count_rational_points(m, nullptr, o.threads);
  const u64 hw = hasse_weil_bound(m, m.base());
  return {ev("count", q * q * q + 1, count), ev("maximal", true, count == hw), info("hasse_weil", hw)};
}

std::vector<Evidence> check_gk_congruence(const Params &p, const RunOptions &o) {
  allow_keys(p, {"n"});
  const u64 n = get_u64(p, "n", 5);
  if (n < 3 || n % 2 == 0 || n > 31) throw InvalidParams("n must be odd in [3,31]");
  const u64 q = u64{1} << n;
  const CurveModel m = CurveModel::gk(2, static_cast<unsigned>(n));
  const u64 formula = 4 * q * q - 4 * q + 1;
  std::vector<Evidence> out{ev("genus", (3 * q - 4) / 2, m.genus()), ev("hasse_weil", formula, hasse_weil_bound(m, m.base()))};
  if (m.base()->size() <= kEnumerationCap) {
    const u64 count = count_rational_points(m, nullptr, o.threads);
    out.push_back(ev("count", formula, count));
    out.push_back(ev("mod3", 0, count % 3));
  } else {
    out.push_back(info("count", "not enumerated"));
    out.push_back(ev("mod3", 0, formula % 3));
  }
  return out;
}

std::vector<Evidence> check_gs_congruence(const Params &p, const RunOptions &o) {
  allow_keys(p, {"q"});
  const u64 q = require_prime_power(get_u64(p, "q", 2));
  if (q > 8) throw UnsupportedError("F_{q^6} exceeds the enumeration cap");
  const CurveModel m = CurveModel::gs(q);
  const u64 count = count_rational_points(m, nullptr, o.threads);
  const u64 q2 = q * q, q3 = q2 * q;
  const u64 expected = q3 * q3 * q - q3 * q2 + q3 * q + 1;
  return {ev("count", expected, count), ev("residue", q2 + 1, count % (q3 + 1)), ev("genus", (q - 1) * (q3 - q) / 2, m.genus())};
}

u64 two_power_param(const Params &p, u64 def) {
  const u64 n = get_u64(p, "n", def);
  if (n < 3 || n % 2 == 0 || n > 15) throw InvalidParams("n must be odd in [3,15]");
  return n;
}

std::vector<Evidence> check_alpha_semiregular(const Params &p, const RunOptions &) {
  allow_keys(p, {"n"});
  const u64 n = two_power_param(p, 5);
  const u64 q = u64{1} << n;
  const CurveModel m = CurveModel::fermat(q);
  const FieldElem zeta = root_of_unity(m.base(), q + 1), theta = zeta.pow(3);
  const SubgroupSpec g = generate({make_alpha(theta, 2)});
  const SubgroupSpec gbar = generate({make_alpha(zeta, 2)});
  bool unitary = true;
  for (const auto &x : gbar.elements()) unitary = unitary && is_unitary(x, m);
  return {ev("order", (q + 1) / 3, g.order()),
          ev("semiregular", true, is_semiregular(g, m)),
          ev("overgroup_order", q + 1, gbar.order()),
          ev("overgroup_semiregular", true, is_semiregular(gbar, m)),
          ev("normal", true, g.is_subgroup_of(gbar) && g.is_normal_in(gbar)),
          ev("unitary", true, unitary)};
}

CycleShape shape_param(const Params &p) {
  const std::string s = p.count("shape") ? p.at("shape") : "xyt";
  if (s == "xyt") return CycleShape::XYT;
  if (s == "xty") return CycleShape::XTY;
  throw InvalidParams("shape must be xyt or xty");
}

std::vector<Evidence> check_triangolo_census(const Params &p, const RunOptions &) {
  allow_keys(p, {"n", "shape"});
  const u64 n = get_u64(p, "n", 9);
  if (n % 6 != 3 || n > 15) throw InvalidParams("n must be 3 mod 6 and at most 15");
  const u64 q = u64{1} << n;
  const CurveModel m = CurveModel::fermat(q);
  const u64 nbar = (q + 1) / 3, nn = (q + 1) / 9;
  const FieldElem theta = root_of_unity(m.base(), nbar), xi = theta.pow(3);
  // exponent i of the diagonal generators: coprime to |Nbar|, and h normalizes N when possible
  long long i = 2;
  for (u64 c = 2; c < nbar; ++c) {
    if (gcd_u64(c, nbar) == 1 && (c * c - c + 1) % nn == 0) {
      i = static_cast<long long>(c);
      break;
    }
  }
  const FieldElem one = m.base()->one();
  const Projectivity h = make_three_cycle(one, one, q, shape_param(p));
  const Projectivity a_theta = make_alpha(theta, i), a_xi = make_alpha(xi, i);
  const SubgroupSpec g = generate({a_xi, h});
  const SubgroupSpec gbar = generate({a_theta, h});
  bool g_in_psu = true;
  for (const auto &x : g.generators()) g_in_psu = g_in_psu && in_psu(x, m.form());

  const StabilizerCensus census = incidence_census(gbar, m);
  std::vector<Evidence> out{info("i", i),
                            ev("g_order", nbar, g.order()),
                            ev("gbar_order", q + 1, gbar.order()),
                            ev("g_in_psu", true, g_in_psu),
                            ev("nbar_h_outside_psu", true, !in_psu(a_theta * h, m.form())),
                            ev("incidence", 4 * (q + 1) / 3, census.incidence),
                            ev("incidence_by_points", census.incidence, census.incidence_by_points),
                            ev("census_points", 2 * (q + 1) / 3, census.points.size())};
  out.push_back(info("g_normal_in_gbar", g.is_subgroup_of(gbar) && g.is_normal_in(gbar)));
  out.push_back(ev("g_orbits", 2, orbits(g, census.points).size()));
  return out;
}

Projectivity cycle_matrix(const FieldElem &a, const FieldElem &b) {
  const FieldCtx &f = a.field();
  Mat3 mm;
  for (auto &row : mm) row = {f.zero(), f.zero(), f.zero()};
  mm[0][1] = a;
  mm[1][2] = b;
  mm[2][0] = f.one();
  return Projectivity(mm);
}

std::vector<Evidence> check_eigen_fixed_points(const Params &p, const RunOptions &) {
  allow_keys(p, {"n"});
  const u64 n = two_power_param(p, 9);
  const u64 q = u64{1} << n;
  const CurveModel m = CurveModel::fermat(q);
  const FieldElem zeta = root_of_unity(m.base(), q + 1), one = m.base()->one();
  u64 noncube = 0, noncube_three_on = 0, noncube_cubic = 0, cube_on_curve = 0;
  FieldElem a = one;
  for (u64 j = 0; j <= q; ++j, a *= zeta) {
    const FixedPointSet fp = fixed_points(cycle_matrix(a, one), m);
    if (is_dth_power(a, 3)) {
      cube_on_curve += fp.on_curve_count();
      continue;
    }
    ++noncube;
    noncube_cubic += fp.extension_degree == 3 ? 1 : 0;
    if (fp.kind == FixedKind::Points && fp.points.size() == 3 && fp.on_curve_count() == 3) ++noncube_three_on;
  }
  return {ev("noncube_elements", 2 * (q + 1) / 3, noncube),
          ev("three_fixed_points_on_curve", noncube, noncube_three_on),
          ev("cubic_extension", noncube, noncube_cubic),
          ev("cube_fixed_points_on_curve", 0, cube_on_curve)};
}

std::vector<Evidence> check_phi_homomorphism(const Params &p, const RunOptions &) {
  allow_keys(p, {"q"});
  const u64 q = require_prime_power(get_u64(p, "q", 32));
  if (q % 2 || q > 4096) throw InvalidParams("q must be a power of 2 up to 4096");
  const CurveModel m = CurveModel::fermat(q);
  const FieldElem zeta = root_of_unity(m.base(), q + 1);
  const SubgroupSpec g = generate({make_alpha(zeta, 2)});
  const FieldCtx &f = *m.base();
  const ProjLine l(f.zero(), f.zero(), f.one());
  const LineFrame frame(l);
  bool stabilizes = true;
  for (const auto &x : g.elements()) stabilizes = stabilizes && frame.stabilizes(x);
  u64 failures = 0, pairs = 0;
  std::vector<Mat2> images;
  for (const auto &x : g.elements()) {
    const Mat2 rx = frame.restrict(x);
    images.push_back(mat2_canonical(rx));
    for (const auto &y : g.elements()) {
      ++pairs;
      if (mat2_canonical(frame.restrict(x * y)) != mat2_canonical(mat2_mul(rx, frame.restrict(y)))) ++failures;
    }
  }
  std::sort(images.begin(), images.end(), [](const Mat2 &a, const Mat2 &b) {
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j)
        if (a[i][j] != b[i][j]) return a[i][j] < b[i][j];
    return false;
  });
  const u64 distinct = std::unique(images.begin(), images.end()) - images.begin();
  return {ev("semiregular", true, is_semiregular(g, m)), ev("stabilizes_line", true, stabilizes), info("pairs", pairs),
          ev("homomorphism_failures", 0, failures), ev("image_size", g.order(), distinct)};
}

std::vector<Evidence> check_primovalore(const Params &p, const RunOptions &o) {
  allow_keys(p, {"q_max"});
  const u64 q_max = get_u64(p, "q_max", 1000000);
  if (q_max < 10 || q_max > 100000000) throw InvalidParams("q_max must lie in [10, 10^8]");
  const PrimovaloreResult r = primovalore_scan(q_max, o.threads);
  return {ev("remainder", json::array({-1568, 2128}), r.remainder), ev("direct", json::array({1, 2, 3, 10}), r.direct),
          ev("linear", json::array({1, 2, 3, 10}), r.linear), ev("agree", true, r.agree())};
}

std::vector<Evidence> check_lemmino(const Params &p, const RunOptions &) {
  allow_keys(p, {"m_max"});
  const u64 m_max = get_u64(p, "m_max", 20);
  if (m_max < 3 || m_max > 60) throw InvalidParams("m_max must lie in [3,60]");
  const ScanReport r = lemmino_scan(static_cast<unsigned>(m_max));
  return {info("checks", r.checks), ev("counterexamples", json::array(), r.counterexamples)};
}

std::vector<Evidence> check_quattordici(const Params &p, const RunOptions &) {
  allow_keys(p, {"m_max"});
  const u64 m_max = get_u64(p, "m_max", 20);
  if (m_max < 3 || m_max > 60) throw InvalidParams("m_max must lie in [3,60]");
  json surv = json::array();
  for (const auto &s : quattordici(static_cast<unsigned>(m_max))) surv.push_back("m=" + std::to_string(s.m) + " " + s.label);
  return {ev("survivors", json::array({"m=3 MH-iv"}), surv)};
}

std::vector<Evidence> check_secondovalore(const Params &p, const RunOptions &) {
  allow_keys(p, {"q"});
  const u64 q = require_prime_power(get_u64(p, "q", 4));
  if (q > 4) throw UnsupportedError("the quotient ledger needs F_{q^6} in table mode (q <= 4)");
  const SecondovaloreResult r = secondovalore_check(q);
  json geometric = json::array(), other = json::array();
  for (const auto &s : r.survivors) {
    const bool geo = s == "MH-i" || s == "MH-ii" || s == "MH-v";
    (geo ? geometric : other).push_back(s);
  }
  // point-fixing case: G inside the diagonal stabilizer of P_inf and (0,0)
  const u64 Q = q * q * q;
  const CurveModel top = CurveModel::norm_trace(Q);
  const FieldElem a = top.base()->generator();
  const SubgroupSpec g = generate({make_alpha_a(a.pow((Q + 1) * (q - 1)), Q)});
  const RamificationLedger led = different_degree(g, top);
  std::vector<Evidence> out{ev("group_order", big(r.group_order), g.order()), info("checked", r.checked),
                            info("order_survivors", geometric), ev("non_geometric_survivors", json::array(), other),
                            info("delta", led.delta)};
  if (!led.g_quot) {
    out.push_back(ev("quotient_genus", "integral", "inconsistent"));
    return out;
  }
  const u64 gq = *led.g_quot;
  const u64 quotient_count = Q * Q + 1 + 2 * gq * Q;
  const u64 q2 = q * q;
  const u64 x_count = q2 * q2 * q2 * q - q2 * q2 * q + q2 * q2 + 1;
  out.push_back(info("quotient_genus", gq));
  out.push_back(info("quotient_mod", quotient_count % (Q + 1)));
  out.push_back(ev("curve_mod", q2 + 1, x_count % (Q + 1)));
  out.push_back(ev("congruences_differ", true, quotient_count % (Q + 1) != x_count % (Q + 1)));
  return out;
}

std::vector<Evidence> check_delta_ledger(const Params &p, const RunOptions &) {
  allow_keys(p, {"q"});
  const u64 q = get_u64(p, "q", 4);
  if (q != 4 && q != 8) throw InvalidParams("delta-ledger is defined for q = 4 and q = 8");
  const u64 Q = q * q * q;
  const CurveModel top = CurveModel::fermat(Q);
  const u64 g_x = (q - 1) * (q * q * q - q) / 2;
  const long long delta = expected_delta(static_cast<long long>(top.genus()), static_cast<long long>(g_x), static_cast<long long>(q * (q + 1)));
  const u64 tame_order = q == 4 ? 5 : 3;
  const u64 sylows = q + 1, rest = q * (q + 1) - 1 - sylows * (q - 1);
  // elementary abelian Sylow 2-subgroups, and the cyclic / quaternion alternative
  const std::vector<ProfileEntry> ea{{2, sylows * (q - 1)}, {tame_order, rest}};
  const std::vector<ProfileEntry> alt = q == 4 ? std::vector<ProfileEntry>{{2, 5}, {4, 10}, {5, 4}}
                                               : std::vector<ProfileEntry>{{2, 9}, {4, 54}, {3, 8}};
  const Feasibility fe = ledger_feasibility(static_cast<u64>(delta), ea, top);
  const Feasibility fa = ledger_feasibility(static_cast<u64>(delta), alt, top);
  return {ev("genus_top", q == 4 ? 2016 : 130816, top.genus()),
          ev("genus_quotient", q == 4 ? 90 : 1764, g_x),
          ev("delta", q == 4 ? 470 : 7758, delta),
          ev("sylow_sum", q == 4 ? 350 : 4734, fa.forced),
          ev("elementary_abelian_feasible", false, fe.feasible),
          info("elementary_abelian_explanation", fe.explanation),
          ev((q == 4 ? "cyclic_feasible" : "quaternion_feasible"), false, fa.feasible),
          info((q == 4 ? "cyclic_explanation" : "quaternion_explanation"), fa.explanation)};
}

std::vector<Evidence> check_rh_quotient_genus(const Params &p, const RunOptions &) {
  allow_keys(p, {"n"});
  const u64 n = two_power_param(p, 5);
  const u64 q = u64{1} << n;
  const CurveModel m = CurveModel::fermat(q);
  const FieldElem theta = root_of_unity(m.base(), (q + 1) / 3);
  const SubgroupSpec g = generate({make_alpha(theta, 2)});
  const RamificationLedger led = different_degree(g, m);
  const CurveModel c = CurveModel::gk(2, static_cast<unsigned>(n));
  return {ev("order", (q + 1) / 3, g.order()), ev("delta", 0, led.delta), ev("consistent", true, led.consistent()),
          ev("quotient_genus", c.genus(), led.g_quot ? json(*led.g_quot) : json(nullptr)), ev("gk_genus", (3 * q - 4) / 2, c.genus())};
}

std::vector<Evidence> check_linpoly_decompose(const Params &p, const RunOptions &) {
  allow_keys(p, {});
  const Field f = build_field(2, 1);
  const FieldElem one = f->one(), zero = f->zero();
  const LinearizedPoly target(f, {one, zero, zero, one}), inner(f, {one, one}), inner4(f, {one, zero, one});
  const auto outer = decompose(target, inner);
  const auto none = decompose(target, inner4);
  const AssociatePoly t = p_associate(target, Convention::Conventional);
  const AssociatePoly prod = associate_mul(AssociatePoly{f, {one, one}, Convention::Conventional},
                                           AssociatePoly{f, {one, one, one}, Convention::Conventional});
  return {ev("decomposition", "X^4 + X^2 + X", outer ? json(outer->str()) : json(nullptr)),
          ev("round_trip", true, outer && compose(*outer, inner) == target),
          ev("associate", "t^3 + 1", t.str()),
          ev("associate_factorization", true, prod == t),
          ev("decompose_by_x4_plus_x", nullptr, none ? json(none->str()) : json(nullptr))};
}

std::vector<Evidence> check_prop1sylow(const Params &p, const RunOptions &o) {
  allow_keys(p, {"q"});
  const u64 q = require_prime_power(get_u64(p, "q", 4));
  if (q > 4) throw UnsupportedError("the family scan is implemented for F_{q^6} in table mode (q <= 4)");
  const FamilyScan s = prop1sylow_family_scan(q, o.threads);
  return {info("w_classes", s.w_classes), info("pairs", s.pairs), ev("twisted_divisible", 0, s.twisted_divisible),
          ev("conventional_divisible", 0, s.conventional_divisible)};
}

std::vector<Evidence> check_sylow_census(const Params &p, const RunOptions &) {
  allow_keys(p, {"q"});
  const u64 q = require_prime_power(get_u64(p, "q", 4));
  if (q % 2 || q > 8) throw InvalidParams("q must be 2, 4 or 8");
  const unsigned s = prime_power(q)->second;
  const u64 Q = q * q * q;
  const CurveModel m = CurveModel::norm_trace(Q);
  const Field sub = build_field(2, 3 * s);
  const TowerMap &emb = embed(sub, m.base());
  std::vector<Projectivity> gens;
  FieldElem c = emb(sub->one());
  const FieldElem gamma = emb(sub->generator());
  for (unsigned j = 0; j < s; ++j, c *= gamma) gens.push_back(make_beta(c, Q));
  const FieldCtx &f = *m.base();
  const FieldElem lambda = root_of_unity(m.base(), q + 1);
  gens.push_back(Projectivity(Mat3{Triple{f.one(), f.zero(), f.zero()}, Triple{f.zero(), lambda, f.zero()}, Triple{f.zero(), f.zero(), f.one()}}));
  const SubgroupSpec g = generate(gens);
  const SylowCensus sc = sylow_census(g, 2, m);
  json fixed = json::array();
  for (const auto &pts : sc.fixed_points)
    for (const auto &pt : pts) fixed.push_back(pt.str());
  const ProjPoint p_inf(f.one(), f.zero(), f.zero());
  return {ev("order", q * (q + 1), g.order()),
          ev("sylow_count", 1, sc.count),
          ev("sylow_fixed_points", json::array({p_inf.str()}), fixed),
          ev("single_orbit", true, sc.fixed_points_single_orbit),
          ev("sharply_2_transitive", false, sharply_2_transitive(g, {p_inf}))};
}

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> r{
      {"alpha-semiregular", "the diagonal group of order (q+1)/3 and its order-(q+1) overgroup act semiregularly on H_q",
       {{{"n", "5"}}}, check_alpha_semiregular},
      {"delta-ledger", "different degree of a putative degree-q(q+1) cover of X_q by H_{q^3}, and infeasibility of its Sylow 2 profiles",
       {{{"q", "4"}}, {{"q", "8"}}}, check_delta_ledger},
      {"eigen-fixed-points", "[[0,A,0],[0,0,B],[1,0,0]] with AB not a cube in F_{q^2} has exactly 3 fixed points, all on H_q",
       {{{"n", "9"}}}, check_eigen_fixed_points},
      {"gk-congruence", "C_{2^n} is F_{q^2}-maximal with 4q^2-4q+1 points, divisible by 3", {{{"n", "5"}}, {{"n", "7"}}},
       check_gk_congruence},
      {"gs-congruence", "X_q has q^7-q^5+q^4+1 points over F_{q^6}, congruent to q^2+1 mod q^3+1",
       {{{"q", "2"}}, {{"q", "3"}}, {{"q", "4"}}}, check_gs_congruence},
      {"hermitian-count", "H_q has q^3+1 points over F_{q^2}",
       {{{"q", "2"}}, {{"q", "3"}}, {{"q", "4"}}, {{"q", "8"}}}, check_hermitian_count},
      {"lemmino", "orders (2^{p'm}+1)/3 fit no maximal subgroup of PSU(3,2^m) outside the index-3 case", {{{"m_max", "20"}}},
       check_lemmino},
      {"linpoly-decompose", "X^8+X = (X^4+X^2+X) o (X^2+X) over F_2 and t^3+1 = (t+1)(t^2+t+1)", {Params{}},
       check_linpoly_decompose},
      {"phi-homomorphism", "restriction to a stabilized line is an injective homomorphism on a semiregular group",
       {{{"q", "32"}}}, check_phi_homomorphism},
      {"prop1sylow-nondiv", "no A X^{q^2} + B X in the family is a left composition factor of X^{q^3}+X over F_{q^6}",
       {{{"q", "4"}}}, check_prop1sylow},
      {"primovalore", "q^2+q+2 divides q^9(q^9+1)(q^6-1) only for q in {1,2,3,10}", {{{"q_max", "1000000"}}},
       check_primovalore},
      {"quattordici", "(2^{3m}+1)/3 divides three times a maximal subgroup order of PSU(3,2^m) only in the Singer case with m=3",
       {{{"m_max", "20"}}}, check_quattordici},
      {"rh-quotient-genus", "H_q modulo the diagonal group of order (q+1)/3 has the genus (3q-4)/2 of C_q", {{{"n", "5"}}},
       check_rh_quotient_genus},
      {"secondovalore-catalog", "order q^2+q+1 fits no maximal subgroup of PSU(3,q^3) except the geometric cases; the point-fixing case gives the wrong point count mod q^3+1",
       {{{"q", "2"}}, {{"q", "3"}}, {{"q", "4"}}}, check_secondovalore},
      {"sylow-census", "the order-q(q+1) group of elations and a diagonal homology has a single Sylow 2-subgroup fixing P_inf",
       {{{"q", "4"}}}, check_sylow_census},
      {"triangolo-census", "census of fixed curve points of the order-3 extension of the diagonal group over the self-polar triangle",
       {{{"n", "9"}}}, check_triangolo_census},
  };
  std::sort(r.begin(), r.end(), [](const CheckSpec &a, const CheckSpec &b) { return a.name < b.name; });
  return r;
}

void inject(std::vector<Evidence> &evidence) {
  for (auto &e : evidence)
    if (e.expected && e.computed.is_number_integer()) {
      e.computed = e.computed.get<long long>() + 1;
      return;
    }
}

}  // namespace

const std::vector<CheckSpec> &registry() {
  static const std::vector<CheckSpec> r = build_registry();
  return r;
}

CheckReport run_check(const std::string &name, const Params &params, const RunOptions &opts) {
  const auto &reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const CheckSpec &c) { return c.name == name; });
  if (it == reg.end()) throw UnknownCheck("unknown check '" + name + "'");
  CheckReport rep;
  rep.name = name;
  rep.params = params;
  rep.citation = it->citation;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    rep.evidence = it->run(params, opts);
    if (opts.inject_fault == name) inject(rep.evidence);
    bool ok = true;
    for (const auto &e : rep.evidence)
      if (e.expected && *e.expected != e.computed) ok = false;
    rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
  } catch (const InvalidParams &) {
    throw;
  } catch (const UnsupportedError &e) {
    rep.verdict = Verdict::Unsupported;
    rep.error = e.what();
  } catch (const ClosureCapExceeded &e) {
    rep.verdict = Verdict::Unsupported;
    rep.error = e.what();
  } catch (const std::exception &e) {
    rep.verdict = Verdict::Fail;
    rep.error = e.what();
  }
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

RunSummary run_all(const std::string &filter_prefix, unsigned workers, const RunOptions &opts) {
  std::vector<std::pair<const CheckSpec *, Params>> jobs;
  for (const auto &c : registry())
    if (c.name.rfind(filter_prefix, 0) == 0)
      for (const auto &p : c.defaults) jobs.emplace_back(&c, p);
  RunSummary sum;
  sum.reports.resize(jobs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < jobs.size();) sum.reports[i] = run_check(jobs[i].first->name, jobs[i].second, opts);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<size_t>(1, jobs.size()))));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto &th : pool) th.join();
  }
  for (const auto &r : sum.reports) {
    if (r.verdict == Verdict::Pass) ++sum.passed;
    else if (r.verdict == Verdict::Fail) ++sum.failed;
    else ++sum.unsupported;
  }
  return sum;
}

}  // namespace hq
