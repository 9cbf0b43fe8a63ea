#pragma once

// The central groupoid of SO_{2k}: homotopy classes of paths between the
// central elements I and -I, and its quotient by pointwise negation.

#include "turnkit/linalg.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace turnkit::groupoid {

enum class Central { Plus, Minus };

class NonComposable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A morphism is (source, target, twist); twist 1 means composed with the
/// essential loop. Composition is diagrammatic (m1 first, then m2).
struct CentralMorphism {
  Central source = Central::Plus;
  Central target = Central::Plus;
  int twist = 0;

  friend bool operator==(const CentralMorphism&, const CentralMorphism&) = default;
  /// id_I, eta_I, beta, betabar, beta^-1, betabar^-1, id_-I, eta_-I.
  std::string name() const;
};

/// The eight morphisms in a fixed order.
std::array<CentralMorphism, 8> all_morphisms();

CentralMorphism identity(Central object);
CentralMorphism compose(const CentralMorphism& first, const CentralMorphism& second);
CentralMorphism inverse(const CentralMorphism& m);
/// Pointwise multiplication by -I for SO_{2k}; only the parity of k matters.
CentralMorphism negate(const CentralMorphism& m, int k);

struct GroupoidChecks {
  std::size_t morphisms = 0;
  std::size_t composable_triples = 0;
  bool associative = true;
  bool unital = true;
  bool inverses = true;
  bool negation_involutive = true;
  bool negation_automorphism = true;

  bool all() const { return associative && unital && inverses && negation_involutive && negation_automorphism; }
};

GroupoidChecks verify_groupoid(int k);

/// pi_1(PSO_{2k}) as the quotient of the groupoid by negation.
struct GroupoidQuotient {
  /// Representatives with source I, one per class.
  std::vector<CentralMorphism> elements;
  /// table[i][j] = index of elements[i] * elements[j].
  std::vector<std::vector<std::size_t>> table;
  std::vector<int> orders;
  bool group_axioms = false;
  linalg::FgAbGroup isomorphism_type;
};

/// Requires k >= 2.
GroupoidQuotient pi1_pso(int k);

}  // namespace turnkit::groupoid
