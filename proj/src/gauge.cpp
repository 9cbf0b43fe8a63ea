#include "turnkit/gauge.hpp"

#include <numeric>

namespace turnkit::gauge {

using homotopy::SphereBundle;
using obstruction::Vanishing;

long pi0_gauge_cardinality(const SphereBundle& e) {
  const long n = homotopy::pi_2k_so_2k(e.k()).order()->get_si();
  return obstruction::vanishes(obstruction::to_eta(e)) == Vanishing::Zero ? n : n / 2;
}

ObstructionValue samelson_tau_eta(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  return obstruction::to_eta(SphereBundle(k, 1, 0));
}

ObstructionValue boundary_eta(int k) { return -samelson_tau_eta(k); }

MultisetPair MultisetPair::of(long x, long y) { return x <= y ? MultisetPair{x, y} : MultisetPair{y, x}; }

std::string MultisetPair::to_string() const {
  return "{{" + std::to_string(lo) + ", " + std::to_string(hi) + "}}";
}

MultisetPair m_multiset(long k1, long k2, long r) { return MultisetPair::of(std::gcd(k1, r), std::gcd(k2, r)); }

InvarianceReport turning_type_invariance(long k1, long k2) {
  InvarianceReport r;
  r.k1 = k1;
  r.k2 = k2;
  r.m2 = m_multiset(k1, k2, 2);
  r.m4 = m_multiset(k1, k2, 4);
  r.turning_type = obstruction::turning_type(SphereBundle::from_k1k2(k1, k2));
  if (r.m2 == MultisetPair{2, 2})
    r.predicted = TurningType::BiTurnable;
  else if (r.m2 == MultisetPair{1, 2})
    r.predicted = TurningType::StronglyChiral;
  else
    r.predicted = TurningType::NotTurnable;
  r.consistent = r.predicted == r.turning_type;
  return r;
}

}  // namespace turnkit::gauge
