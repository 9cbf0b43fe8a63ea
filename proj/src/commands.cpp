#include "turnkit/commands.hpp"

#include "turnkit/gauge.hpp"
#include "turnkit/groupoid.hpp"
#include "turnkit/obstruction.hpp"
#include "turnkit/quat.hpp"

#include <algorithm>
#include <map>

namespace turnkit::commands {

using homotopy::InvalidBundle;
using homotopy::SphereBundle;
using obstruction::ObstructionValue;
using report::Json;
using report::Outcome;

namespace {

Json bundle_json(const SphereBundle& e) {
  Json j = {{"k", e.k()}, {"a", e.a()}, {"b", e.b()}};
  if (e.k() == 2) {
    auto [k1, k2] = e.k1k2();
    j["k1"] = k1;
    j["k2"] = k2;
  }
  return j;
}

Json value_json(const ObstructionValue& v) {
  Json j = {{"kind", v.kind_name()}, {"value", v.to_string()},
            {"vanishes", obstruction::vanishing_name(obstruction::vanishes(v))}};
  if (v.has_kappa()) j["tau_eta_component"] = v.kappa().form();
  return j;
}

Json element_json(const linalg::AbElement& x) {
  return {{"group", x.parent().to_string()}, {"coordinates", x.to_string()}, {"zero", x.is_zero()}};
}

Json cochain_json(const cw::Cochain& c) { return Json(c); }

const char* system_name(const Coordinates& c) {
  if (c.a || c.b) return "a,b";
  if (c.k1 || c.k2) return "k1,k2";
  return "euler,xi";
}

Json inputs_json(const Coordinates& c, const SphereBundle& e) {
  Json j = bundle_json(e);
  j["coordinates"] = c.empty() ? "default" : system_name(c);
  return j;
}

void check_positive_k(int k, int minimum) {
  if (k < minimum) throw std::invalid_argument("k must be at least " + std::to_string(minimum));
}

Json complex_json(const cw::CwComplex& x) {
  return {{"name", x.name()},
          {"dimension", x.dimension()},
          {"cells", x.cell_counts()},
          {"simplicial", x.simplicial() != nullptr}};
}

}  // namespace

SphereBundle normalize(const Coordinates& c) {
  if (c.k < 1) throw InvalidBundle("k must be at least 1");
  const int systems = (c.a || c.b) + (c.k1 || c.k2) + (c.euler || c.xi);
  if (systems == 0) throw InvalidBundle("give one coordinate system: (a, b), (k1, k2) or (euler, xi)");
  if (systems > 1) throw InvalidBundle("over-determined bundle: give exactly one coordinate system");
  if (c.a || c.b) {
    if (!c.a || !c.b) throw InvalidBundle("both a and b are required");
    return SphereBundle(c.k, *c.a, *c.b);
  }
  if (c.k1 || c.k2) {
    if (!c.k1 || !c.k2) throw InvalidBundle("both k1 and k2 are required");
    if (c.k != 2) throw InvalidBundle("(k1, k2) coordinates exist only for k = 2");
    return SphereBundle::from_k1k2(*c.k1, *c.k2);
  }
  if (!c.euler || !c.xi) throw InvalidBundle("both euler and xi are required");
  return SphereBundle::from_euler_xi(c.k, *c.euler, *c.xi);
}

Report sphere(const Coordinates& c) {
  const SphereBundle e = normalize(c);
  const obstruction::DecisionReport d = obstruction::decide(e);
  Report r;
  r.command = "sphere";
  r.inputs = inputs_json(c, e);
  r.results = {{"euler", d.euler},
               {"xi", d.xi},
               {"to_plus", value_json(d.to_plus)},
               {"to_minus", value_json(d.to_minus)},
               {"to_eta", value_json(d.to_eta)},
               {"turning_type", obstruction::turning_type_name(d.turning_type)},
               {"eta_turnable", d.eta_turnable},
               {"stably_turnable", d.stably_turnable},
               {"stabilized_obstruction", element_json(obstruction::stabilized_obstruction(e))},
               {"euler_criterion",
                {{"verdict", d.criterion.verdict},
                 {"clause", d.criterion.clause},
                 {"explanation", d.criterion.explanation}}},
               {"divergence", d.divergence}};
  if (d.divergence) r.results["divergence_note"] = d.divergence_note;
  r.warnings = d.warnings;
  r.provenance = {
      "turning_type: vanishing of TO_+ and TO_- read off the coordinates of the clutching class",
      "eta_turnable: vanishing of TO_eta in the same coordinates",
      "stably_turnable: eta multiplication applied to the KO class of the bundle",
      "euler_criterion: residues of the Euler number and the KO class, evaluated clause by clause",
  };
  return r;
}

Report s4_table(long range) {
  if (range < 0) throw std::invalid_argument("range must be non-negative");
  if (range > 64) throw std::invalid_argument("range is limited to 64");
  Report r;
  r.command = "s4";
  r.inputs = {{"range", range}};
  Json rows = Json::array();
  std::map<std::string, long> counts = {{"BiTurnable", 0}, {"StronglyChiral", 0}, {"NotTurnable", 0}};
  for (long k1 = -range; k1 <= range; ++k1)
    for (long k2 = -range; k2 <= range; ++k2) {
      const SphereBundle e = SphereBundle::from_k1k2(k1, k2);
      const std::string type = obstruction::turning_type_name(obstruction::turning_type(e));
      ++counts[type];
      rows.push_back({{"k1", k1},
                      {"k2", k2},
                      {"a", e.a()},
                      {"b", e.b()},
                      {"to_plus", obstruction::to_plus(e).to_string()},
                      {"to_minus", obstruction::to_minus(e).to_string()},
                      {"turning_type", type}});
    }
  const SphereBundle tangent = SphereBundle::from_k1k2(1, 1);
  r.results = {{"bundles", rows},
               {"counts",
                {{"BiTurnable", counts["BiTurnable"]},
                 {"StronglyChiral", counts["StronglyChiral"]},
                 {"NotTurnable", counts["NotTurnable"]}}},
               {"tangent_bundle",
                {{"k1", 1}, {"k2", 1}, {"turning_type", obstruction::turning_type_name(obstruction::turning_type(tangent))}}}};
  r.provenance = {"turning_type: parities of k1 and k2 through TO_+ = (k1 mod 2, 0) and TO_- = (0, k2 mod 2)"};
  return r;
}

Report groupoid(int k) {
  check_positive_k(k, 2);
  using namespace groupoid;
  const auto ms = all_morphisms();
  const GroupoidChecks checks = verify_groupoid(k);
  const GroupoidQuotient q = pi1_pso(k);
  auto object = [](Central c) { return c == Central::Plus ? "I" : "-I"; };

  Json morphisms = Json::array();
  for (const auto& m : ms)
    morphisms.push_back({{"name", m.name()}, {"source", object(m.source)}, {"target", object(m.target)},
                         {"negated", negate(m, k).name()}});
  Json table = Json::array();
  for (const auto& f : ms)
    for (const auto& g : ms)
      if (f.target == g.source) table.push_back({{"first", f.name()}, {"second", g.name()}, {"composite", compose(f, g).name()}});

  Json elements = Json::array();
  for (std::size_t i = 0; i < q.elements.size(); ++i)
    elements.push_back({{"representative", q.elements[i].name()}, {"order", q.orders[i]}});
  Json qtable = Json::array();
  for (const auto& row : q.table) {
    Json names = Json::array();
    for (std::size_t j : row) names.push_back(q.elements[j].name());
    qtable.push_back(names);
  }

  Report r;
  r.command = "groupoid";
  r.inputs = {{"k", k}, {"parity", k % 2 == 0 ? "even" : "odd"}};
  r.results = {{"morphisms", morphisms},
               {"composition", table},
               {"checks",
                {{"morphisms", checks.morphisms},
                 {"composable_triples", checks.composable_triples},
                 {"associative", checks.associative},
                 {"unital", checks.unital},
                 {"inverses", checks.inverses},
                 {"negation_involutive", checks.negation_involutive},
                 {"negation_automorphism", checks.negation_automorphism}}},
               {"pi1_pso",
                {{"elements", elements},
                 {"table", qtable},
                 {"group_axioms", q.group_axioms},
                 {"isomorphism_type", q.isomorphism_type.to_string()}}}};
  r.provenance = {
      "checks: exhaustive enumeration of composable pairs and triples",
      "pi1_pso: orbits of negation on the morphisms, with the induced multiplication classified by Smith normal form",
  };
  return r;
}

Report gauge(const Coordinates& c) {
  check_positive_k(c.k, 2);
  const SphereBundle e = c.empty() ? SphereBundle(c.k, 1, 0) : normalize(c);
  Report r;
  r.command = "gauge";
  r.inputs = inputs_json(c, e);
  r.results = {{"pi0_cardinality", gauge::pi0_gauge_cardinality(e)},
               {"pi_2k_so_2k_order", homotopy::pi_2k_so_2k(e.k()).order()->get_si()},
               {"to_eta", value_json(obstruction::to_eta(e))},
               {"samelson_tau_eta", value_json(gauge::samelson_tau_eta(e.k()))},
               {"boundary_eta", value_json(gauge::boundary_eta(e.k()))}};
  r.provenance = {
      "pi0_cardinality: |pi_2k(SO_2k)|, halved when TO_eta of the bundle is nonzero",
      "samelson_tau_eta: TO_eta evaluated on tau",
      "boundary_eta: negative of the Samelson value",
  };
  if (e.k() == 2) {
    auto [k1, k2] = e.k1k2();
    const gauge::InvarianceReport inv = gauge::turning_type_invariance(k1, k2);
    r.results["invariance"] = {{"k1", inv.k1},
                               {"k2", inv.k2},
                               {"m2", inv.m2.to_string()},
                               {"m4", inv.m4.to_string()},
                               {"turning_type", obstruction::turning_type_name(inv.turning_type)},
                               {"predicted_from_m2", obstruction::turning_type_name(inv.predicted)},
                               {"consistent", inv.consistent}};
    r.provenance.push_back("invariance: gcd multisets M^2 and M^4 compared with the obstruction-based type");
  }
  return r;
}

Report samelson(int k) {
  check_positive_k(k, 2);
  const ObstructionValue s = gauge::samelson_tau_eta(k);
  const ObstructionValue d = gauge::boundary_eta(k);
  Report r;
  r.command = "samelson";
  r.inputs = {{"k", k}};
  r.results = {{"samelson_tau_eta", value_json(s)},
               {"boundary_eta", value_json(d)},
               {"boundary_equals_samelson", s == d},
               {"matches_to_eta_of_tau", s == obstruction::to_eta(SphereBundle(k, 1, 0))}};
  r.provenance = {"samelson_tau_eta: TO_eta evaluated on tau", "boundary_eta: negative of the Samelson value"};
  return r;
}

Report relations(int k, long bound, int random_pairs, std::uint64_t seed) {
  check_positive_k(k, 2);
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  if (random_pairs < 0) throw std::invalid_argument("random pair count must be non-negative");
  const auto checks = obstruction::relations_check(k, bound, random_pairs, seed);
  Report r;
  r.command = "relations";
  r.inputs = {{"k", k}, {"bound", bound}, {"random_pairs", random_pairs}, {"seed", seed}};
  Json list = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    Json j = {{"relation", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) j["witness"] = c.witness;
    all = all && c.passed;
    list.push_back(j);
  }
  r.results = {{"relations", list}, {"all_passed", all}};
  if (!all) r.warnings.push_back("a relation failed; see the witness");
  r.provenance = {"relations: evaluation of TO_+, TO_- and TO_eta on the grid and on seeded random pairs"};
  return r;
}

Report cw_cohomology(const cw::CwComplex& x, cw::Ring ring, int degree, bool with_generators) {
  if (degree > x.dimension()) throw cw::InvalidComplex("degree exceeds the dimension of the complex");
  Report r;
  r.command = "cw cohomology";
  r.inputs = {{"complex", complex_json(x)}, {"ring", cw::ring_name(ring)}};
  if (degree >= 0) r.inputs["degree"] = degree;
  Json groups = Json::array();
  const int lo = degree < 0 ? 0 : degree, hi = degree < 0 ? x.dimension() : degree;
  for (int d = lo; d <= hi; ++d) {
    const cw::CohomologyGroup h = cw::cohomology(x, ring, d);
    Json g = {{"degree", d}, {"group", h.group().to_string()}, {"free_rank", h.group().free_rank()}};
    Json torsion = Json::array();
    for (const auto& t : h.group().torsion()) torsion.push_back(t.get_si());
    g["torsion"] = torsion;
    if (with_generators) {
      Json gens = Json::array();
      for (const auto& c : h.generators()) gens.push_back(cochain_json(c));
      g["generators"] = gens;
    }
    groups.push_back(g);
  }
  r.results = {{"euler_characteristic", x.euler_characteristic()}, {"groups", groups}};
  r.provenance = {"groups: elimination of unit coboundary entries, then Smith normal form of the reduced complex"};
  return r;
}

Report cw_sq2(const cw::CwComplex& x, int degree) {
  if (degree >= 0 && (degree < 2 || degree + 2 > x.dimension()))
    throw cw::InvalidComplex("Sq^2 is reported for 2 <= degree <= dimension - 2");
  Report r;
  r.command = "cw sq2";
  r.inputs = {{"complex", complex_json(x)}};
  if (degree >= 0) r.inputs["degree"] = degree;
  Json out = Json::array();
  const int lo = degree < 0 ? 2 : degree, hi = degree < 0 ? x.dimension() - 2 : degree;
  for (int d = lo; d <= hi; ++d) {
    const cw::CohomologyGroup source = cw::cohomology(x, cw::Ring::Z2, d);
    if (source.generators().empty()) continue;
    const cw::CohomologyGroup target = cw::cohomology(x, cw::Ring::Z2, d + 2);
    Json images = Json::array();
    bool zero = true;
    for (std::size_t i = 0; i < source.generators().size(); ++i) {
      const linalg::AbElement y = target.class_of(cw::sq2(x, source.generators()[i], d));
      zero = zero && y.is_zero();
      images.push_back({{"generator", i}, {"image", y.to_string()}});
    }
    out.push_back({{"degree", d},
                   {"source", source.group().to_string()},
                   {"target", target.group().to_string()},
                   {"images", images},
                   {"zero", zero}});
  }
  r.results = {{"sq2", out}};
  r.provenance = {x.simplicial() ? "sq2: cup-(d-2) square of each generator on the simplicial cochains"
                                 : "sq2: the Sq^2 matrix supplied with the cell structure"};
  return r;
}

Report cw_tc(const cw::CwComplex& x, int k, const cw::Cochain& euler, const std::vector<cw::Cochain>& ck_mod4,
             bool stably_trivial) {
  if (stably_trivial && !ck_mod4.empty())
    throw cw::InvalidComplex("give either Chern candidates or the stably trivial flag, not both");
  std::vector<cw::Cochain> candidates = ck_mod4;
  if (stably_trivial) {
    if (k < 1 || 2 * k > x.dimension()) throw cw::InvalidComplex("degree 2k exceeds the dimension of the complex");
    candidates.assign(1, cw::Cochain(x.cells(2 * k), 0));
  }
  const cw::TcVerdict v = cw::tc_condition(x, k, euler, candidates);
  const cw::ISubgroup indeterminacy = cw::i_subgroup(x, k);

  Report r;
  r.command = "cw tc";
  r.inputs = {{"complex", complex_json(x)},
              {"k", k},
              {"euler", cochain_json(euler)},
              {"stably_trivial", stably_trivial},
              {"candidates", candidates}};
  r.results = {{"holds", cw::holds_name(v.holds)},
               {"sufficiency", cw::sufficiency_name(v.sufficiency)},
               {"indeterminacy_order", indeterminacy.order},
               {"indeterminacy_note", indeterminacy.note}};
  if (v.plus_witness) r.results["plus_witness"] = *v.plus_witness;
  if (v.minus_witness) r.results["minus_witness"] = *v.minus_witness;
  if (!v.note.empty()) r.results["note"] = v.note;
  const bool necessary_only = v.sufficiency == cw::Sufficiency::NecessaryOnly;
  if (necessary_only && v.holds != cw::TcHolds::Fails) {
    r.outcome = Outcome::Undecided;
    r.warnings.push_back("NecessaryOnly: the condition holds but does not imply turnability here");
  }
  r.provenance = {
      "holds: membership of rho4(c) -/+ rho4(e) in the span of I^2k and the coboundaries, solved over Z/4",
      "sufficiency: 2-torsion test on H^2k(X; Z) for even k",
  };
  return r;
}

Report cw_modify_euler(const cw::CwComplex& x, int k, const cw::Cochain& euler,
                       const std::vector<std::pair<std::size_t, long>>& mods) {
  if (k < 1 || 2 * k > x.dimension()) throw cw::InvalidComplex("degree 2k exceeds the dimension of the complex");
  const int deg = 2 * k;
  if (euler.size() != x.cells(deg))
    throw cw::InvalidComplex("Euler cocycle has " + std::to_string(euler.size()) + " entries, expected " +
                             std::to_string(x.cells(deg)));
  const cw::Cochain out = cw::euler_cocycle_modify(euler, mods);
  const cw::CohomologyGroup h = cw::cohomology(x, cw::Ring::Z, deg);
  Json mj = Json::array();
  for (const auto& [cell, j] : mods) mj.push_back({{"cell", cell}, {"j", j}});
  Report r;
  r.command = "cw modify-euler";
  r.inputs = {{"complex", complex_json(x)}, {"k", k}, {"euler", cochain_json(euler)}, {"modifications", mj}};
  r.results = {{"cocycle", cochain_json(out)},
               {"class_before", element_json(h.class_of(euler))},
               {"class_after", element_json(h.class_of(out))}};
  r.provenance = {"cocycle: adds 2j to the coefficient of each named 2k-cell"};
  return r;
}

Report cw_thomas(const cw::CwComplex& x, int k, const cw::Cochain& euler, const std::vector<cw::Cochain>& ck) {
  const bool holds = cw::thomas_criterion(x, k, euler, ck);
  const cw::CohomologyGroup h = cw::cohomology(x, cw::Ring::Z, 2 * k);
  Report r;
  r.command = "cw thomas";
  r.inputs = {{"complex", complex_json(x)}, {"k", k}, {"euler", cochain_json(euler)}, {"candidates", ck}};
  r.results = {{"holds", holds}, {"group", h.group().to_string()}, {"euler_class", element_json(h.class_of(euler))}};
  r.provenance = {"holds: equality of integral classes in a 2-torsion free H^2k(X; Z)"};
  return r;
}

Report quat_extract(int k1, int k2, int resolution, std::uint64_t seed) {
  const quat::Bidegree d = quat::extract_bidegree(k1, k2, resolution, seed);
  Report r;
  r.command = "quat extract";
  r.inputs = {{"k1", k1}, {"k2", k2}, {"resolution", resolution}, {"seed", seed}};
  r.results = {{"p_degree", d.p_degree}, {"q_degree", d.q_degree}, {"matches", d.p_degree == k1 && d.q_degree == k2}};
  r.provenance = {"degrees: pointwise Cayley factorization with sign propagation, then signed preimage counts on a "
                  "refined 16-cell triangulation of S^3"};
  return r;
}

Report quat_commute(int k1, int k2, int samples, std::uint64_t seed) {
  if (samples < 4) throw quat::InvalidInput("at least 4 samples are required");
  const quat::CommutationReport c = quat::verify_complex_commutation(k1, k2, samples, seed);
  Report r;
  r.command = "quat commute";
  r.inputs = {{"k1", k1}, {"k2", k2}, {"samples", samples}, {"seed", seed}};
  r.results = {{"left", {{"max_commutator", c.left_max}, {"pass", c.left_pass}}},
               {"right", {{"max_commutator", c.right_max}, {"pass", c.right_pass}}},
               {"threshold", 1e-12}};
  if (c.left_witness) r.results["left"]["witness"] = c.left_witness->to_string();
  if (c.right_witness) r.results["right"]["witness"] = c.right_witness->to_string();
  r.provenance = {"commutators: Frobenius norms of [g(x), L_i] and [g(x), R_i] on the basis units and seeded samples"};
  return r;
}

Report quat_kirchhoff(int resolution) {
  const quat::KirchhoffReport k = quat::kirchhoff_trivialization(resolution);
  Report r;
  r.command = "quat kirchhoff";
  r.inputs = {{"resolution", resolution}};
  r.results = {{"grid_points", k.grid_points},
               {"max_orthogonality_error", k.max_orthogonality_error},
               {"max_t0_error", k.max_t0_error},
               {"max_t1_error", k.max_t1_error},
               {"max_step", k.max_step},
               {"north_pole_error", k.north_pole_error},
               {"passed", k.passed}};
  if (!k.passed) {
    r.results["witness"] = k.witness;
    r.warnings.push_back("tolerance violated: " + k.witness);
  }
  r.provenance = {"homotopy: closed-form rotation by pi t in each tangent plane of S^2, checked on a grid"};
  return r;
}

}  // namespace turnkit::commands
