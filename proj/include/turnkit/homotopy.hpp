#pragma once

// Homotopy data of SO_{2k} near the stable range, the tau/sigma coordinates of
// rank-2k bundles over S^{2k}, Euler numbers, stable classes and reduced real
// K-theory of spheres.

#include "turnkit/linalg.hpp"

#include <stdexcept>
#include <string>

namespace turnkit::homotopy {

using linalg::AbElement;
using linalg::AbHomomorphism;
using linalg::FgAbGroup;

/// Raised when bundle coordinates are inconsistent with the group they live in.
class InvalidBundle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Order of the summand C(sigma_{2k}) of pi_{2k-1}(SO_{2k}): 0 stands for Z.
/// For k = 1 the group is Z(sigma_2) with tau_2 = 2 sigma_2, and b is kept in
/// {0, 1} so that (a, b) is unique; the order reported is 2.
long sigma_order(int k);

/// Euler number of sigma_{2k}: 1 for k in {1, 2, 4}, 0 otherwise.
int euler_of_sigma(int k);

/// Oriented rank-2k bundle over S^{2k} with clutching class a*tau + b*sigma.
/// Invariant: k >= 1 and b is reduced into [0, sigma_order) when that order is
/// finite (k = 3 mod 4 forces b = 0).
class SphereBundle {
 public:
  /// Normalizes b; throws InvalidBundle for k < 1.
  SphereBundle(int k, long a, long b);

  /// k = 2 only: (a, b) = (k1, k2 - k1).
  static SphereBundle from_k1k2(long k1, long k2);
  /// Solves e = 2a + b e(sigma) and xi = b; throws InvalidBundle when no
  /// bundle has these invariants.
  static SphereBundle from_euler_xi(int k, long euler, long xi);

  int k() const { return k_; }
  long a() const { return a_; }
  long b() const { return b_; }
  /// Inverse of from_k1k2: (a, a + b). Requires k = 2.
  std::pair<long, long> k1k2() const;

  SphereBundle operator+(const SphereBundle& other) const;
  friend bool operator==(const SphereBundle&, const SphereBundle&) = default;

  std::string to_string() const;

 private:
  int k_;
  long a_;
  long b_;
};

/// pi_{2k-1}(SO_{2k}) with coordinates (tau [, sigma]).
FgAbGroup pi_2k_minus_1_so_2k(int k);

/// pi_{2k}(SO_{2k}): 0 (k = 1, 3), Z/4 (k >= 5 odd), (Z/2)^2 (k = 2 mod 4),
/// (Z/2)^3 (k = 0 mod 4).
FgAbGroup pi_2k_so_2k(int k);

/// pi_n(SO) for n >= 1 by Bott periodicity.
FgAbGroup pi_stable_so(int n);

long euler_number(const SphereBundle& e);

/// Reduced real K-theory KO~(S^n) by Bott periodicity.
FgAbGroup ko_reduced(int n);

/// Multiplication by eta: KO~(S^n) -> KO~(S^{n+1}).
AbHomomorphism eta_mult(int n);

/// Image of E in KO~(S^{2k}), coordinate b.
AbElement stable_class(const SphereBundle& e);

/// The spin class p = p_1 / 2 on S^4, normalized by p(sigma_4) = 1. Requires k = 2.
long spin_class_k2(const SphereBundle& e);

}  // namespace turnkit::homotopy
