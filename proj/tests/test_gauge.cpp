#include "doctest.h"
#include "turnkit/gauge.hpp"

using namespace turnkit::gauge;
using turnkit::homotopy::SphereBundle;
using turnkit::obstruction::Kappa;
using turnkit::obstruction::Vanishing;

TEST_CASE("pi0 gauge cardinality examples") {
  CHECK(pi0_gauge_cardinality(SphereBundle::from_k1k2(1, 1)) == 2);
  CHECK(pi0_gauge_cardinality(SphereBundle::from_k1k2(2, 4)) == 4);
  for (long a = -3; a <= 3; ++a) CHECK(pi0_gauge_cardinality(SphereBundle(3, a, 0)) == 1);
  CHECK(pi0_gauge_cardinality(SphereBundle(4, 1, 0)) == 4);
  CHECK(pi0_gauge_cardinality(SphereBundle(4, 2, 0)) == 8);
}

TEST_CASE("pi0 gauge cardinality divides the homotopy group order") {
  for (int k = 1; k <= 12; ++k)
    for (long a = -5; a <= 5; ++a)
      for (long b = -5; b <= 5; ++b) {
        SphereBundle e(k, a, b);
        long n = turnkit::homotopy::pi_2k_so_2k(k).order()->get_si();
        long g = pi0_gauge_cardinality(e);
        CHECK(n % g == 0);
        CHECK((n / g == 1 || n / g == 2));
      }
}

TEST_CASE("Samelson products and boundary") {
  for (int k = 2; k <= 12; ++k) {
    ObstructionValue s = samelson_tau_eta(k);
    CHECK(s == turnkit::obstruction::to_eta(SphereBundle(k, 1, 0)));
    CHECK(boundary_eta(k) == s);
    if (k % 2 == 1) CHECK(vanishes(s) == Vanishing::Zero);
    if (k % 2 == 0) CHECK(vanishes(s) == Vanishing::Nonzero);
  }
  CHECK(samelson_tau_eta(4) == ObstructionValue::even_triple(Kappa::known(1), 0, 0));
  CHECK(samelson_tau_eta(3).kind() == turnkit::obstruction::ObstructionKind::Zero);
  CHECK_THROWS(samelson_tau_eta(1));
}

TEST_CASE("turning type invariance examples") {
  InvarianceReport r = turning_type_invariance(2, 4);
  CHECK(r.m2 == MultisetPair::of(2, 2));
  CHECK(r.turning_type == TurningType::BiTurnable);
  CHECK(turning_type_invariance(1, 2).turning_type == TurningType::StronglyChiral);
  CHECK(turning_type_invariance(1, 2).m2 == MultisetPair::of(2, 1));
  CHECK(turning_type_invariance(3, 5).turning_type == TurningType::NotTurnable);
  CHECK(turning_type_invariance(2, 4).m4 == MultisetPair::of(2, 4));
}

TEST_CASE("turning type is a function of M^2") {
  for (long k1 = -6; k1 <= 6; ++k1)
    for (long k2 = -6; k2 <= 6; ++k2) CHECK(turning_type_invariance(k1, k2).consistent);
}
