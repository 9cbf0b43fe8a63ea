#pragma once

// Turning obstructions TO_+, TO_-, TO_eta of rank-2k bundles over S^{2k},
// turning types, stable turnability, and the Euler/KO criterion compared
// against the obstruction computation.

#include "turnkit/homotopy.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace turnkit::obstruction {

using homotopy::SphereBundle;

enum class KappaState { Zero, One, Unknown };

/// The tau*eta component of an obstruction, as an affine form over F_2 in two
/// undetermined bits: u_plus (component of TO_+(sigma), k = 0 mod 4) and
/// u_eta (component of TO_eta(sigma_8)). Constant forms are known values.
struct Kappa {
  bool constant = false;
  bool u_plus = false;
  bool u_eta = false;

  static Kappa known(long value) { return {value % 2 != 0, false, false}; }
  static Kappa unknown_plus() { return {false, true, false}; }
  static Kappa unknown_eta() { return {false, false, true}; }

  KappaState state() const;
  Kappa operator+(const Kappa& o) const { return {constant != o.constant, u_plus != o.u_plus, u_eta != o.u_eta}; }
  Kappa times(long n) const { return n % 2 != 0 ? *this : Kappa{}; }
  friend bool operator==(const Kappa&, const Kappa&) = default;

  /// "0", "1", "unknown".
  std::string state_name() const;
  /// "0", "1", "u+", "1 + u+ + ueta", ...
  std::string form() const;
};

enum class ObstructionKind { Zero, OddCyclic, EvenPair, EvenTriple, S4Pair };

/// Element of pi_{2k}(SO_{2k}) in a k-dependent coordinate system:
///   Zero        k in {1, 3}
///   OddCyclic   k >= 5 odd, c in Z/4 (multiple of zeta)
///   S4Pair      k = 2, (u, v) in (Z/2)^2
///   EvenPair    k = 2 mod 4, k >= 6: (kappa, ev)
///   EvenTriple  k = 0 mod 4: (kappa, ev, s)
/// Residues are stored reduced.
class ObstructionValue {
 public:
  ObstructionValue() = default;

  static ObstructionValue zero_for(int k);
  static ObstructionValue odd_cyclic(long c);
  static ObstructionValue s4_pair(long u, long v);
  static ObstructionValue even_pair(Kappa kappa, long ev);
  static ObstructionValue even_triple(Kappa kappa, long ev, long s);

  ObstructionKind kind() const { return kind_; }
  int c() const { return c_; }
  const Kappa& kappa() const { return kappa_; }
  int ev() const { return ev_; }
  int s() const { return s_; }
  int u() const { return u_; }
  int v() const { return v_; }

  /// True iff the tau*eta component is present in this coordinate system.
  bool has_kappa() const { return kind_ == ObstructionKind::EvenPair || kind_ == ObstructionKind::EvenTriple; }

  ObstructionValue operator+(const ObstructionValue& o) const;
  ObstructionValue operator-() const;
  ObstructionValue operator-(const ObstructionValue& o) const { return *this + (-o); }
  ObstructionValue times(long n) const;
  friend bool operator==(const ObstructionValue&, const ObstructionValue&) = default;

  std::string kind_name() const;
  std::string to_string() const;

 private:
  ObstructionKind kind_ = ObstructionKind::Zero;
  int c_ = 0;
  Kappa kappa_;
  int ev_ = 0;
  int s_ = 0;
  int u_ = 0;
  int v_ = 0;
};

enum class Vanishing { Zero, Nonzero, Undetermined };

Vanishing vanishes(const ObstructionValue& v);
const char* vanishing_name(Vanishing v);

ObstructionValue to_plus(const SphereBundle& e);
ObstructionValue to_minus(const SphereBundle& e);
ObstructionValue to_eta(const SphereBundle& e);

enum class TurningType { BiTurnable, StronglyChiral, NotTurnable };

const char* turning_type_name(TurningType t);

/// Throws std::logic_error if either obstruction is Undetermined.
TurningType turning_type(const SphereBundle& e);

bool stably_turnable(const SphereBundle& e);

/// S(TO_+(E)) in pi_{2k}(SO).
linalg::AbElement stabilized_obstruction(const SphereBundle& e);

/// Literal evaluation of the Euler number / KO class criterion.
struct EulerCriterion {
  bool verdict = false;
  /// Deciding clause: "rank-two", "k=2", "k=3", "even-k" or "odd-k".
  std::string clause;
  std::string explanation;
};

EulerCriterion euler_criterion_evaluate(const SphereBundle& e);

struct DecisionReport {
  SphereBundle bundle{1, 0, 0};
  long euler = 0;
  long xi = 0;
  ObstructionValue to_plus;
  ObstructionValue to_minus;
  ObstructionValue to_eta;
  TurningType turning_type = TurningType::BiTurnable;
  bool eta_turnable = true;
  bool stably_turnable = true;
  EulerCriterion criterion;
  bool divergence = false;
  std::string divergence_note;
  std::vector<std::string> warnings;
};

DecisionReport decide(const SphereBundle& e);

struct RelationCheck {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  /// First failing bundle, empty when passed.
  std::string witness;
};

/// Verifies the structural relations of TO_+, TO_-, TO_eta on the generators,
/// the grid |a|, |b| <= bound, and `random_pairs` seeded random coordinate pairs.
std::vector<RelationCheck> relations_check(int k, long bound = 8, int random_pairs = 64, std::uint64_t seed = 1);

}  // namespace turnkit::obstruction
