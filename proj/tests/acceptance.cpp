// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "hq/ramification.hpp"
#include "hq/subgroup_catalog.hpp"
#include "props.hpp"

using namespace hq;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;  // printed under a failing line

  void expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

const Evidence *find_ev(const CheckReport &r, const std::string &key) {
  for (const auto &e : r.evidence)
    if (e.key == key) return &e;
  return nullptr;
}

json computed(const CheckReport &r, const std::string &key) {
  const Evidence *e = find_ev(r, key);
  return e ? e->computed : json(nullptr);
}

// Check pass plus the listed computed values; mismatches become notes.
void expect_report(Outcome &o, const CheckReport &r, const std::vector<std::pair<std::string, json>> &values) {
  std::string tag = r.name;
  for (const auto &[k, v] : r.params) tag += " " + k + "=" + v;
  o.expect(r.verdict == Verdict::Pass, tag + ": verdict " + to_string(r.verdict) + (r.error.empty() ? "" : " (" + r.error + ")"));
  for (const auto &e : r.evidence)
    if (e.expected && *e.expected != e.computed)
      o.notes.push_back(tag + ": " + e.key + " expected " + e.expected->dump() + ", computed " + e.computed.dump());
  for (const auto &[k, v] : values) o.expect(computed(r, k) == v, tag + ": " + k + " = " + computed(r, k).dump() + ", want " + v.dump());
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct Criterion {
  std::string title;
  double bound_ms = 0;  // 0: no runtime bound
  std::function<void(Outcome &)> run;
};

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;

  c.push_back({"Hermitian counts q^3+1 for q in {2,3,4,8}, each under 1 s", 0, [](Outcome &o) {
                 for (u64 q : {2, 3, 4, 8}) {
                   const CheckReport r = run_check("hermitian-count", {{"q", std::to_string(q)}});
                   expect_report(o, r, {{"count", q * q * q + 1}, {"maximal", true}});
                   o.expect(r.millis < 1000, "hermitian-count q=" + std::to_string(q) + " took " + std::to_string(r.millis) + " ms");
                 }
               }});

  c.push_back({"|C_32(F_1024)| = 3969 and |C_128| = 65025, both divisible by 3", 5000, [](Outcome &o) {
                 expect_report(o, run_check("gk-congruence", {{"n", "5"}}), {{"count", 3969}, {"mod3", 0}, {"genus", 46}});
                 const CheckReport r7 = run_check("gk-congruence", {{"n", "7"}});
                 expect_report(o, r7, {{"hasse_weil", 65025}, {"mod3", 0}});
                 o.expect(4 * 128 * 128 - 4 * 128 + 1 == 65025 && 65025 % 3 == 0, "formula at q=128");
               }});

  c.push_back({"|X_q(F_{q^6})| = 113, 2026, 15617, congruent to q^2+1 mod q^3+1", 60000, [](Outcome &o) {
                 const std::vector<std::pair<u64, u64>> want{{2, 113}, {3, 2026}, {4, 15617}};
                 for (auto [q, n] : want) {
                   const CheckReport r = run_check("gs-congruence", {{"q", std::to_string(q)}});
                   expect_report(o, r, {{"count", n}, {"residue", q * q + 1}});
                 }
               }});

  c.push_back({"primovalore scan to 10^6 gives {1,2,3,10} by both methods", 10000, [](Outcome &o) {
                 const CheckReport r = run_check("primovalore", {{"q_max", "1000000"}});
                 expect_report(o, r, {{"direct", json::array({1, 2, 3, 10})}, {"linear", json::array({1, 2, 3, 10})}, {"agree", true}});
               }});

  c.push_back({"different-degree ledgers 470 / 7758, Sylow sums 350 / 4734, both profiles infeasible", 1000, [](Outcome &o) {
                 o.expect(expected_delta(2016, 90, 20) == 470, "expected_delta(2016, 90, 20)");
                 o.expect(expected_delta(130816, 1764, 72) == 7758, "expected_delta(130816, 1764, 72)");
                 o.expect(5 * 66 + 10 * 2 == 350 && 9 * 514 + 54 * 2 == 4734, "component sums");
                 const Feasibility a = ledger_feasibility(470, {{2, 5}, {4, 10}, {5, 4}}, CurveModel::fermat(64));
                 const Feasibility b = ledger_feasibility(7758, {{2, 9}, {4, 54}, {3, 8}}, CurveModel::fermat(512));
                 o.expect(!a.feasible && a.forced == 350, "q=4 cyclic Sylow profile: " + a.explanation);
                 o.expect(!b.feasible && b.forced == 4734, "q=8 quaternion profile: " + b.explanation);
                 expect_report(o, run_check("delta-ledger", {{"q", "4"}}), {{"delta", 470}, {"sylow_sum", 350}});
                 expect_report(o, run_check("delta-ledger", {{"q", "8"}}), {{"delta", 7758}, {"sylow_sum", 4734}});
               }});

  c.push_back({"<alpha_theta> of order 11 semiregular on H_32 (eigen and all 32769 points); quotient genus 46", 30000, [](Outcome &o) {
                 expect_report(o, run_check("alpha-semiregular", {{"n", "5"}}), {{"order", 11}, {"semiregular", true}});
                 const CurveModel h = CurveModel::fermat(32);
                 const SubgroupSpec g = generate({make_alpha(root_of_unity(h.base(), 11), 2)});
                 const auto pts = rational_points(h);
                 o.expect(pts.size() == 32769, "point list has " + std::to_string(pts.size()) + " entries");
                 u64 fixed = 0;
                 for (const auto &x : g.elements())
                   if (!x.is_identity())
                     for (const auto &p : pts) fixed += x.apply(p) == p ? 1 : 0;
                 o.expect(fixed == 0, "exhaustive scan found " + std::to_string(fixed) + " fixed incidences");
                 expect_report(o, run_check("rh-quotient-genus", {{"n", "5"}}), {{"quotient_genus", 46}});
                 o.expect((3 * 32 - 4) / 2 == 46, "(3q-4)/2");
               }});

  c.push_back({"triangolo census at q=512: 3 on-curve fixed points per element, |I| = 684, 342 points in 2 G-orbits", 120000,
               [](Outcome &o) {
                 expect_report(o, run_check("eigen-fixed-points", {{"n", "9"}}), {{"noncube_elements", 342}});
                 const CheckReport r = run_check("triangolo-census", {{"n", "9"}});
                 expect_report(o, r, {{"incidence", 684}, {"census_points", 342}, {"g_orbits", 2}});
                 o.notes.push_back("triangolo-census: |Gbar| = " + computed(r, "gbar_order").dump() +
                                   ", G normal in Gbar: " + computed(r, "g_normal_in_gbar").dump());
               }});

  c.push_back({"lemmino and quattordici scans: no counterexamples, unique survivor m=3", 1000, [](Outcome &o) {
                 expect_report(o, run_check("lemmino", {{"m_max", "20"}}), {{"counterexamples", json::array()}});
                 expect_report(o, run_check("quattordici", {{"m_max", "20"}}), {{"survivors", json::array({"m=3 MH-iv"})}});
               }});

  c.push_back({"linearized algebra: X^8+X decomposition, t^3+1 factorization, family non-divisibility at q=4", 60000,
               [](Outcome &o) {
                 expect_report(o, run_check("linpoly-decompose", {}),
                               {{"decomposition", "X^4 + X^2 + X"}, {"associate", "t^3 + 1"}, {"associate_factorization", true}});
                 expect_report(o, run_check("prop1sylow-nondiv", {{"q", "4"}}), {{"twisted_divisible", 0}, {"conventional_divisible", 0}});
               }});

  c.push_back({"property suites: field axioms, polarity, orbit-stabilizer, incidence double count, fixed-point oracle, determinism",
               0, [](Outcome &o) {
                 for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 2}, {2, 10}, {3, 6}, {2, 18}, {2, 54}})
                   o.expect(props::field_axioms(build_field(p, k), 17 * p + k, 10000), "field axioms F_" + std::to_string(p) + "^" + std::to_string(k));
                 o.expect(props::polarity_involution(CurveModel::fermat(4), 1, 5000), "polarity, Fermat q=4");
                 o.expect(props::polarity_involution(CurveModel::norm_trace(4), 2, 5000), "polarity, norm-trace q=4");
                 for (u64 q : {2, 5, 8, 32}) {
                   const CurveModel h = CurveModel::fermat(q);
                   const FieldElem zeta = root_of_unity(h.base(), q + 1), one = h.base()->one();
                   const SubgroupSpec g = generate({make_alpha(zeta, 1), make_three_cycle(one, one, q)});
                   o.expect(props::orbit_stabilizer(g, rational_points(h)), "orbit-stabilizer q=" + std::to_string(q));
                   o.expect(props::incidence_double_count(g, h), "incidence double count q=" + std::to_string(q));
                 }
                 for (u64 Q : {2, 3, 4, 5, 7, 8}) o.expect(props::fixed_point_oracle(Q, 500 + Q, 200), "fixed-point oracle Q=" + std::to_string(Q));
                 o.expect(props::run_all_deterministic("", 4), "run_all reports differ across worker counts");
               }});
  return c;
}

}  // namespace

int main() {
  int failures = 0, index = 0;
  for (const auto &c : criteria()) {
    ++index;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception &e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double ms = ms_since(t0);
    if (c.bound_ms > 0) o.expect(ms < c.bound_ms, "runtime " + std::to_string(static_cast<long long>(ms)) + " ms exceeds bound");
    std::ostringstream line;
    line << (o.ok ? "PASS " : "FAIL ") << index << ". " << c.title << "  [" << static_cast<long long>(ms) << " ms";
    if (c.bound_ms > 0) line << " < " << static_cast<long long>(c.bound_ms) << " ms";
    line << "]";
    std::cout << line.str() << "\n";
    if (!o.ok) {
      ++failures;
      for (const auto &n : o.notes) std::cout << "      " << n << "\n";
    }
    std::cout.flush();
  }
  std::cout << (index - failures) << "/" << index << " criteria passed\n";
  return failures ? 1 : 0;
}
