#include "doctest.h"
#include "turnkit/obstruction.hpp"

using namespace turnkit::obstruction;
using turnkit::homotopy::euler_number;

namespace {

bool has_divergence_shape(int k, long a, long b) {
  if (k % 4 == 2 && k > 2) return a % 2 == 0 && b % 2 != 0;
  if (k == 4) return ((b % 4) + 4) % 4 == 2;
  return false;
}

}  // namespace

TEST_CASE("TO_+ examples") {
  CHECK(to_plus(SphereBundle::from_k1k2(1, 1)) == ObstructionValue::s4_pair(1, 0));
  SphereBundle e5 = SphereBundle::from_euler_xi(5, 6, 0);
  CHECK(to_plus(e5) == ObstructionValue::odd_cyclic(2));
  CHECK(vanishes(to_plus(SphereBundle(6, 0, 5))) == Vanishing::Zero);
}

TEST_CASE("TO_- examples") {
  ObstructionValue m = to_minus(SphereBundle::from_k1k2(1, 2));
  CHECK(m == ObstructionValue::s4_pair(0, 0));
  for (long a = -3; a <= 3; ++a) CHECK(vanishes(to_minus(SphereBundle(3, a, 0))) == Vanishing::Zero);
  ObstructionValue t6 = to_minus(SphereBundle(6, 1, 0));
  CHECK(t6 == to_plus(SphereBundle(6, 1, 0)) + ObstructionValue::even_pair(Kappa::known(1), 0));
  CHECK(t6.ev() == 1);
}

TEST_CASE("TO_eta examples") {
  ObstructionValue t4 = to_eta(SphereBundle(4, 1, 0));
  CHECK(t4 == ObstructionValue::even_triple(Kappa::known(1), 0, 0));
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) CHECK(vanishes(to_eta(SphereBundle(7, a, b))) == Vanishing::Zero);
  CHECK(to_eta(SphereBundle::from_k1k2(1, 1)) == ObstructionValue::s4_pair(1, 1));
  ObstructionValue s8 = to_eta(SphereBundle(4, 0, 1));
  CHECK(s8.ev() == 1);
  CHECK(s8.kappa().state() == KappaState::Unknown);
  CHECK(vanishes(to_eta(SphereBundle(8, 0, 1))) == Vanishing::Zero);
}

TEST_CASE("vanishes three-valued logic") {
  CHECK(vanishes(ObstructionValue::odd_cyclic(0)) == Vanishing::Zero);
  CHECK(vanishes(ObstructionValue::even_triple(Kappa::unknown_plus(), 0, 1)) == Vanishing::Nonzero);
  CHECK(vanishes(ObstructionValue::even_triple(Kappa::unknown_plus(), 0, 0)) == Vanishing::Undetermined);
  CHECK(vanishes(ObstructionValue::even_pair(Kappa::known(1), 0)) == Vanishing::Nonzero);
}

TEST_CASE("kappa arithmetic is F2-affine") {
  Kappa u = Kappa::unknown_plus();
  CHECK((u + u).state() == KappaState::Zero);
  CHECK((u + Kappa::known(1)).state() == KappaState::Unknown);
  CHECK(u.times(2).state() == KappaState::Zero);
  CHECK(u.times(-3) == u);
  CHECK((u + Kappa::unknown_eta() + Kappa::known(1)).form() == "1 + u+ + ueta");
}

TEST_CASE("turning_type examples") {
  CHECK(turning_type(SphereBundle::from_k1k2(1, 2)) == TurningType::StronglyChiral);
  for (long a = -4; a <= 4; ++a) CHECK(turning_type(SphereBundle(3, a, 0)) == TurningType::BiTurnable);
  CHECK(turning_type(SphereBundle(4, 1, 0)) == TurningType::NotTurnable);
  CHECK(turning_type(SphereBundle(1, 3, 1)) == TurningType::BiTurnable);
}

TEST_CASE("obstructions are homomorphisms and never undetermined") {
  for (int k = 2; k <= 12; ++k)
    for (long a = -8; a <= 8; ++a)
      for (long b = -8; b <= 8; ++b) {
        SphereBundle e(k, a, b);
        CHECK(vanishes(to_plus(e)) != Vanishing::Undetermined);
        CHECK(vanishes(to_minus(e)) != Vanishing::Undetermined);
        CHECK(vanishes(to_eta(e)) != Vanishing::Undetermined);
        SphereBundle f(k, b - a, a + 1);
        CHECK(to_plus(e + f) == to_plus(e) + to_plus(f));
        CHECK(to_minus(e + f) == to_minus(e) + to_minus(f));
        CHECK(to_eta(e + f) == to_eta(e) + to_eta(f));
        if (k != 2) CHECK(vanishes(to_plus(e)) == vanishes(to_minus(e)));
      }
}

TEST_CASE("strongly chiral bundles exist only on S^4 and have odd Euler number") {
  for (int k = 1; k <= 12; ++k)
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b) {
        SphereBundle e(k, a, b);
        bool chiral = turning_type(e) == TurningType::StronglyChiral;
        if (k != 2) CHECK_FALSE(chiral);
        if (k == 2) CHECK(chiral == (euler_number(e) % 2 != 0));
      }
}

TEST_CASE("stabilized obstruction vanishes iff stably turnable") {
  for (int k = 2; k <= 12; ++k)
    for (long a = -8; a <= 8; ++a)
      for (long b = -8; b <= 8; ++b) {
        SphereBundle e(k, a, b);
        CHECK(stabilized_obstruction(e).is_zero() == stably_turnable(e));
        CHECK(stabilized_obstruction(e).is_zero() == !(k % 4 == 0 && e.b() % 2 != 0));
      }
  CHECK_FALSE(stably_turnable(SphereBundle(4, 0, 1)));
  CHECK(stably_turnable(SphereBundle(3, 5, 0)));
  CHECK(stably_turnable(SphereBundle(2, 3, 7)));
  CHECK(stabilized_obstruction(SphereBundle(4, 0, 1)).coords()[0] == 1);
  CHECK(stabilized_obstruction(SphereBundle(4, 1, 0)).is_zero());
  CHECK(stabilized_obstruction(SphereBundle(5, 1, 1)).parent().is_trivial());
}

TEST_CASE("Euler criterion examples") {
  SphereBundle e2 = SphereBundle::from_euler_xi(2, 3, 1);
  CHECK(euler_criterion_evaluate(e2).verdict);
  CHECK_FALSE(decide(e2).divergence);
  SphereBundle e5 = SphereBundle::from_euler_xi(5, 4, 0);
  CHECK(euler_criterion_evaluate(e5).verdict);
  CHECK_FALSE(decide(e5).divergence);
  DecisionReport s6 = decide(SphereBundle(6, 0, 1));
  CHECK_FALSE(s6.criterion.verdict);
  CHECK(s6.turning_type == TurningType::BiTurnable);
  CHECK(s6.divergence);
  CHECK_FALSE(s6.divergence_note.empty());
}

TEST_CASE("divergence occurs exactly on the documented family") {
  for (int k = 2; k <= 12; ++k)
    for (long a = -8; a <= 8; ++a)
      for (long b = -8; b <= 8; ++b) {
        SphereBundle e(k, a, b);
        DecisionReport d = decide(e);
        CHECK(d.divergence == has_divergence_shape(k, a, e.b()));
        CHECK(d.divergence == (d.criterion.verdict != (d.turning_type != TurningType::NotTurnable)));
      }
}

TEST_CASE("relations hold for 2 <= k <= 12") {
  for (int k = 2; k <= 12; ++k)
    for (const auto& r : relations_check(k)) {
      INFO(k, " ", r.name, " ", r.witness);
      CHECK(r.passed);
      CHECK(r.cases > 0);
    }
  CHECK_THROWS(relations_check(1));
}

TEST_CASE("relation examples") {
  CHECK(vanishes(to_plus(SphereBundle(5, 1, 0)).times(2)) == Vanishing::Zero);
  CHECK(to_plus(SphereBundle(5, 1, 0)).times(2) == ObstructionValue::odd_cyclic(4));
  CHECK(vanishes(to_plus(SphereBundle(6, 1, 0)).times(2)) == Vanishing::Zero);
  SphereBundle t = SphereBundle::from_k1k2(1, 1);
  CHECK(to_minus(t) - to_plus(t) == ObstructionValue::s4_pair(1, 1));
  CHECK(to_minus(t) - to_plus(t) == to_eta(t));
}
