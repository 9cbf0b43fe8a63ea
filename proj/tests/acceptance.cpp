// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and time
// limits are fixed here; a criterion fails when either is exceeded.

#include "turnkit/cw.hpp"
#include "turnkit/gauge.hpp"
#include "turnkit/groupoid.hpp"
#include "turnkit/obstruction.hpp"
#include "turnkit/quat.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace turnkit;
using homotopy::SphereBundle;
using obstruction::TurningType;

namespace {

constexpr double kRoundtripTol = 1e-9;
constexpr double kKirchhoffTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  std::function<Outcome()> run;
};

bool turnable(const SphereBundle& e) { return obstruction::turning_type(e) != TurningType::NotTurnable; }

long mod(long x, long m) { return ((x % m) + m) % m; }

std::string data(const std::string& name) { return std::string(TURNKIT_DATA_DIR) + "/" + name + ".json"; }

Outcome s4_classification() {
  Outcome o;
  long cases = 0;
  for (long k1 = -3; k1 <= 3; ++k1)
    for (long k2 = -3; k2 <= 3; ++k2) {
      const int evens = (k1 % 2 == 0) + (k2 % 2 == 0);
      const TurningType expected = evens == 2   ? TurningType::BiTurnable
                                   : evens == 1 ? TurningType::StronglyChiral
                                                : TurningType::NotTurnable;
      ++cases;
      if (obstruction::turning_type(SphereBundle::from_k1k2(k1, k2)) != expected)
        o.fail("E_{" + std::to_string(k1) + "," + std::to_string(k2) + "}");
    }
  const SphereBundle ts4 = SphereBundle::from_k1k2(1, 1);
  if (!(ts4 == SphereBundle(2, 1, 0))) o.fail("E_{1,1} is not tau");
  if (obstruction::turning_type(ts4) != TurningType::NotTurnable) o.fail("TS^4 turnable");
  if (o.pass) o.detail = std::to_string(cases) + " bundles, TS^4 NotTurnable";
  return o;
}

Outcome tangent_bundles() {
  Outcome o;
  std::string bi;
  for (int k = 1; k <= 20; ++k) {
    const bool is_bi = obstruction::turning_type(SphereBundle(k, 1, 0)) == TurningType::BiTurnable;
    if (is_bi) bi += (bi.empty() ? "" : ",") + std::to_string(2 * k);
    if (is_bi != (k == 1 || k == 3)) o.fail("TS^" + std::to_string(2 * k));
  }
  o.detail = o.pass ? "BiTurnable exactly for 2k in {" + bi + "}" : o.detail;
  return o;
}

Outcome multiples_of_tangent() {
  Outcome o;
  long cases = 0;
  for (int j = 1; j <= 5; ++j)
    for (long n = -8; n <= 8; ++n) {
      ++cases;
      if (turnable(SphereBundle(2 * j, n, 0)) != (n % 2 == 0))
        o.fail(std::to_string(n) + " TS^" + std::to_string(4 * j));
    }
  if (o.pass) o.detail = std::to_string(cases) + " bundles";
  return o;
}

Outcome odd_rank_euler() {
  Outcome o;
  long cases = 0;
  for (int k : {5, 7, 9, 11}) {
    const long order = homotopy::sigma_order(k);
    for (long a = -8; a <= 8; ++a)
      for (long b = 0; b < std::max(1L, order); ++b) {
        const SphereBundle e(k, a, b);
        ++cases;
        if (turnable(e) != (mod(homotopy::euler_number(e), 4) == 0)) o.fail(e.to_string());
      }
  }
  if (o.pass) o.detail = std::to_string(cases) + " bundles";
  return o;
}

Outcome relations_suite() {
  Outcome o;
  std::uint64_t cases = 0;
  for (int k = 2; k <= 12; ++k) {
    std::vector<std::string> names;
    for (const auto& r : obstruction::relations_check(k, 8)) {
      cases += r.cases;
      names.push_back(r.name);
      if (!r.passed) o.fail("k=" + std::to_string(k) + " " + r.name + " at " + r.witness);
    }
    // The order relations depend on the parity of k.
    auto has = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
    const bool parity_ok = k % 2 == 0 ? has("2 TO_+ = 0") && has("2 TO_- = 0")
                                      : has("2 TO_+ = TO_eta") && has("4 TO_+ = 0");
    if (!has("2 TO_eta = 0") || !has("TO_- = TO_+ + TO_eta") || !parity_ok || !has("TO_+ additive") ||
        !has("TO_eta additive"))
      o.fail("k=" + std::to_string(k) + " is missing a relation");
  }
  if (o.pass) o.detail = std::to_string(cases) + " evaluations";
  return o;
}

Outcome divergence_ledger() {
  Outcome o;
  long divergent = 0, cases = 0;
  for (int k = 2; k <= 12; ++k)
    for (long a = -8; a <= 8; ++a)
      for (long b = -8; b <= 8; ++b) {
        const SphereBundle e(k, a, b);
        ++cases;
        const bool documented =
            (k % 4 == 2 && k > 2 && a % 2 == 0 && e.b() % 2 != 0) || (k == 4 && mod(e.b(), 4) == 2);
        const bool differs = obstruction::euler_criterion_evaluate(e).verdict != turnable(e);
        divergent += differs;
        if (differs != documented) o.fail(e.to_string());
      }
  if (o.pass) o.detail = std::to_string(divergent) + " divergent of " + std::to_string(cases);
  return o;
}

Outcome gauge_components() {
  Outcome o;
  bool seen4 = false, seen2 = false, seen8 = false, seen4b = false;
  for (long k1 = -6; k1 <= 6; ++k1)
    for (long k2 = -6; k2 <= 6; ++k2) {
      const SphereBundle e = SphereBundle::from_k1k2(k1, k2);
      const bool eta = obstruction::vanishes(obstruction::to_eta(e)) == obstruction::Vanishing::Zero;
      const long n = gauge::pi0_gauge_cardinality(e);
      seen4 |= n == 4;
      seen2 |= n == 2;
      if (n != (eta ? 4 : 2)) o.fail("S^4 " + e.to_string());
    }
  for (int k : {4, 8, 12})
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b) {
        const SphereBundle e(k, a, b);
        const bool eta = obstruction::vanishes(obstruction::to_eta(e)) == obstruction::Vanishing::Zero;
        const long n = gauge::pi0_gauge_cardinality(e);
        seen8 |= n == 8;
        seen4b |= n == 4;
        if (n != (eta ? 8 : 4)) o.fail(e.to_string());
      }
  for (long a = -4; a <= 4; ++a)
    if (gauge::pi0_gauge_cardinality(SphereBundle(3, a, 0)) != 1) o.fail("k=3, a=" + std::to_string(a));
  if (!(seen4 && seen2 && seen8 && seen4b)) o.fail("a value was never attained");
  if (o.pass) o.detail = "S^4 {4,2}, k=0 mod 4 {8,4}, k=3 {1}";
  return o;
}

Outcome samelson_table() {
  Outcome o;
  for (int k = 2; k <= 12; ++k) {
    const auto s = gauge::samelson_tau_eta(k);
    const auto d = gauge::boundary_eta(k);
    const bool zero = obstruction::vanishes(s) == obstruction::Vanishing::Zero;
    if (zero != (k % 2 == 1)) o.fail("samelson k=" + std::to_string(k));
    if (k % 2 == 0 && k > 2 && !(s.has_kappa() && s.kappa() == obstruction::Kappa::known(1) && s.ev() == 0 && s.s() == 0))
      o.fail("samelson k=" + std::to_string(k) + " is not tau*eta");
    if (!(d == s)) o.fail("boundary k=" + std::to_string(k));
    if (!(s == obstruction::to_eta(SphereBundle(k, 1, 0)))) o.fail("to_eta(tau) k=" + std::to_string(k));
  }
  if (o.pass) o.detail = "k = 2..12";
  return o;
}

Outcome groupoid_suite() {
  Outcome o;
  for (int k = 2; k <= 12; ++k) {
    const auto c = groupoid::verify_groupoid(k);
    // Four objects in a chain of three arrows, two twists each: 2^4 * 2^3.
    if (c.morphisms != 8 || c.composable_triples != 128 || !c.all()) o.fail("axioms k=" + std::to_string(k));
    const auto q = groupoid::pi1_pso(k);
    const auto expected = k % 2 == 0 ? linalg::FgAbGroup::elementary_two(2) : linalg::FgAbGroup::cyclic(4);
    if (!q.group_axioms || !(q.isomorphism_type == expected)) o.fail("pi_1(PSO) k=" + std::to_string(k));
  }
  if (o.pass) o.detail = "8 morphisms, 128 triples, (Z/2)^2 / Z/4";
  return o;
}

Outcome stable_consistency() {
  Outcome o;
  long cases = 0;
  for (int k = 2; k <= 12; ++k)
    for (long a = -8; a <= 8; ++a)
      for (long b = -8; b <= 8; ++b) {
        const SphereBundle e(k, a, b);
        ++cases;
        if (obstruction::stably_turnable(e) != obstruction::stabilized_obstruction(e).is_zero()) o.fail(e.to_string());
      }
  if (o.pass) o.detail = std::to_string(cases) + " bundles";
  return o;
}

// Rank over F_2 of coordinate vectors.
std::size_t rank_mod2(std::vector<std::vector<int>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] % 2 == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c] % 2 != 0)
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] ^= rows[rank][j] & 1;
    ++rank;
  }
  return rank;
}

std::size_t sq2_rank(const cw::CwComplex& x, int d) {
  const auto source = cw::cohomology(x, cw::Ring::Z2, d);
  const auto target = cw::cohomology(x, cw::Ring::Z2, d + 2);
  std::vector<std::vector<int>> rows;
  for (const auto& g : source.generators()) {
    const linalg::AbElement image = target.class_of(cw::sq2(x, g, d));
    std::vector<int> row;
    for (const auto& c : image.coords()) row.push_back(static_cast<int>(c.get_si()));
    rows.push_back(row);
  }
  return rank_mod2(rows);
}

Outcome cw_suite() {
  Outcome o;
  for (int l = 1; l <= 4; ++l) {
    const auto m = cw::load_complex(data("m" + std::to_string(l) + "_cells"));
    const auto v = cw::tc_condition(*m, 4, {2 * (l + 1)}, {{0}});
    if ((v.holds == cw::TcHolds::HoldsBoth) != (l % 2 == 1)) o.fail("M_" + std::to_string(l));
  }
  const auto moore = cw::load_complex(data("moore_s7_2_cells"));
  const auto mv = cw::tc_condition(*moore, 4, {0}, {{0}});
  if (mv.holds != cw::TcHolds::HoldsBoth || mv.sufficiency != cw::Sufficiency::NecessaryOnly) o.fail("Moore space");

  // Integral cohomology by degree, from cellular chain counts and universal
  // coefficients.
  struct Expect {
    const char* fixture;
    std::vector<std::string> groups;
  };
  const std::vector<Expect> expected = {
      {"rp2_cells", {"Z", "0", "Z/2"}},
      {"rp2_6", {"Z", "0", "Z/2"}},
      {"rp3_cells", {"Z", "0", "Z/2", "Z"}},
      {"rp4_121", {"Z", "0", "Z/2", "0", "Z/2"}},
      {"torus_7", {"Z", "Z^2", "Z"}},
      {"cp2xs2", {"Z", "0", "Z^2", "0", "Z^2", "0", "Z"}},
      {"cp2xs2_cells", {"Z", "0", "Z^2", "0", "Z^2", "0", "Z"}},
  };
  std::vector<std::shared_ptr<const cw::CwComplex>> loaded;
  for (const auto& e : expected) {
    const auto x = cw::load_complex(data(e.fixture));
    loaded.push_back(x);
    if (x->dimension() + 1 != static_cast<int>(e.groups.size())) {
      o.fail(std::string(e.fixture) + " dimension");
      continue;
    }
    for (int d = 0; d <= x->dimension(); ++d)
      if (cw::cohomology(*x, cw::Ring::Z, d).group().to_string() != e.groups[d])
        o.fail(std::string(e.fixture) + " H^" + std::to_string(d));
    // Mod-2 Betti numbers sum to the count of Z summands plus twice the 2-torsion summands.
    std::size_t mod2 = 0, expect2 = 0;
    for (int d = 0; d <= x->dimension(); ++d) {
      mod2 += cw::cohomology(*x, cw::Ring::Z2, d).group().coordinate_count();
      const auto g = cw::cohomology(*x, cw::Ring::Z, d).group();
      expect2 += g.free_rank() + 2 * g.torsion().size();
    }
    if (mod2 != expect2) o.fail(std::string(e.fixture) + " mod 2 ranks");
  }

  // Sq^2 ranks: RP^4 has Sq^2(t^2) = t^4; CP^2 x S^2 has Sq^2 z = z^2 and
  // Sq^2(zs) = z^2 s, with Sq^2 s = 0 and Sq^2 z^2 = 0.
  if (sq2_rank(*loaded[3], 2) != 1) o.fail("RP^4 Sq^2 on H^2");
  for (std::size_t i : {5, 6}) {
    if (sq2_rank(*loaded[i], 2) != 1) o.fail(std::string(expected[i].fixture) + " Sq^2 on H^2");
    if (sq2_rank(*loaded[i], 4) != 1) o.fail(std::string(expected[i].fixture) + " Sq^2 on H^4");
    if (cw::i_subgroup(*loaded[i], 3).order != 2) o.fail(std::string(expected[i].fixture) + " I^6 order");
  }
  if (o.pass) o.detail = "M_1..M_4, Moore space, 7 cohomology fixtures, Sq^2 ranks";
  return o;
}

quat::Rotation4 plane_rotation(double angle) {
  quat::Rotation4 r = quat::Rotation4::Identity();
  r(0, 0) = r(1, 1) = std::cos(angle);
  r(1, 0) = std::sin(angle);
  r(0, 1) = -std::sin(angle);
  return r;
}

Outcome numerics() {
  Outcome o;
  for (int k1 = -3; k1 <= 3; ++k1)
    for (int k2 = -3; k2 <= 3; ++k2) {
      const auto d = quat::extract_bidegree(k1, k2);
      if (d.p_degree != k1 || d.q_degree != k2) o.fail("bidegree (" + std::to_string(k1) + "," + std::to_string(k2) + ")");
    }

  std::mt19937_64 rng(2024);
  std::normal_distribution<double> gauss;
  auto unit = [&] { return quat::Quaternion{gauss(rng), gauss(rng), gauss(rng), gauss(rng)}.normalized(); };
  double worst = 0;
  for (int n = 0; n < 10000; ++n) {
    const quat::Rotation4 r = quat::isoclinic(unit(), unit());
    const auto [p, q] = quat::cayley_factorize(r);
    worst = std::max(worst, (quat::isoclinic(p, q) - r).cwiseAbs().maxCoeff());
  }
  if (!(worst < kRoundtripTol)) o.fail("Cayley roundtrip error " + std::to_string(worst));

  std::vector<quat::Rotation4> loop;
  for (int t = 0; t <= 64; ++t) loop.push_back(plane_rotation(2 * std::numbers::pi * t / 64));
  if (quat::lift_loop(loop) != quat::LoopClass::Essential) o.fail("plane rotation loop");
  if (quat::lift_loop(std::vector<quat::Rotation4>(16, quat::Rotation4::Identity())) != quat::LoopClass::Trivial)
    o.fail("constant loop");

  const auto k = quat::kirchhoff_trivialization();
  if (!k.passed || k.max_t0_error > kKirchhoffTol || k.max_t1_error > kKirchhoffTol ||
      k.max_orthogonality_error > kKirchhoffTol)
    o.fail("Kirchhoff homotopy: " + k.witness);
  if (o.pass) {
    std::ostringstream s;
    s << "49 bidegrees, roundtrip " << worst << ", Kirchhoff orthogonality " << k.max_orthogonality_error;
    o.detail = s.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "s4-classification", 1.0, s4_classification},
      {2, "tangent-bundles", 1.0, tangent_bundles},
      {3, "multiples-of-tangent", 1.0, multiples_of_tangent},
      {4, "odd-rank-euler-residue", 60.0, odd_rank_euler},
      {5, "obstruction-relations", 60.0, relations_suite},
      {6, "criterion-divergence-family", 60.0, divergence_ledger},
      {7, "gauge-components", 60.0, gauge_components},
      {8, "samelson-boundary-table", 60.0, samelson_table},
      {9, "central-groupoid", 1.0, groupoid_suite},
      {10, "stable-consistency", 60.0, stable_consistency},
      {11, "cw-suite", 10.0, cw_suite},
      {12, "quaternion-numerics", 120.0, numerics},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.time_limit_s) o.fail("exceeded " + std::to_string(c.time_limit_s) + " s");
    failures += !o.pass;
    std::printf("%s %2d %-28s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
