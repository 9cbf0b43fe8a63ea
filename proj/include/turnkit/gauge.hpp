#pragma once

// Components of gauge groups of rank-2k bundles over S^{2k}, Samelson
// products with eta, and the homotopy invariance of the turning type over S^4.

#include "turnkit/obstruction.hpp"

#include <string>

namespace turnkit::gauge {

using obstruction::ObstructionValue;
using obstruction::TurningType;

/// |pi_0| of the gauge group: |pi_{2k}(SO_{2k})|, halved when TO_eta(E) != 0.
long pi0_gauge_cardinality(const homotopy::SphereBundle& e);

/// <tau_{2k}, eta>, equal to TO_eta(tau_{2k}). Requires k >= 2.
ObstructionValue samelson_tau_eta(int k);

/// The boundary map on tau_{2k}: minus the Samelson product.
ObstructionValue boundary_eta(int k);

/// Unordered pair of non-negative integers.
struct MultisetPair {
  long lo = 0;
  long hi = 0;

  static MultisetPair of(long x, long y);
  friend bool operator==(const MultisetPair&, const MultisetPair&) = default;
  std::string to_string() const;
};

/// {{gcd(k1, r), gcd(k2, r)}}.
MultisetPair m_multiset(long k1, long k2, long r);

struct InvarianceReport {
  long k1 = 0;
  long k2 = 0;
  MultisetPair m2;
  MultisetPair m4;
  TurningType turning_type = TurningType::BiTurnable;
  /// Type read off from M^2 alone.
  TurningType predicted = TurningType::BiTurnable;
  bool consistent = true;
};

InvarianceReport turning_type_invariance(long k1, long k2);

}  // namespace turnkit::gauge
