#pragma once

// Finite CW and simplicial complexes, their cohomology over Z, Z/2 and Z/4,
// cup and cup-i products, Sq^2, and the turnability criteria phrased in
// mod-4 cohomology.

#include "turnkit/linalg.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turnkit::cw {

using linalg::AbElement;
using linalg::FgAbGroup;
using linalg::IntMatrix;

/// Malformed complex, cochain or query.
class InvalidComplex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Ring { Z, Z2, Z4 };

/// 0 for Z.
long ring_modulus(Ring r);
std::string ring_name(Ring r);

/// Values on the cells of one dimension.
using Cochain = std::vector<long>;

/// Column-sparse integer matrix.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// columns[j] holds (row, value) pairs with distinct rows and nonzero values.
  std::vector<std::vector<std::pair<std::size_t, long>>> columns;

  static SparseMatrix zero(std::size_t rows, std::size_t cols);
  static SparseMatrix from_dense(const IntMatrix& m);
  IntMatrix to_dense() const;
  std::size_t nonzeros() const;
  /// this^T x, reduced modulo `modulus` when positive.
  Cochain apply_transpose(const Cochain& x, long modulus = 0) const;
  /// this x, reduced modulo `modulus` when positive.
  Cochain apply(const Cochain& x, long modulus = 0) const;
};

class SimplicialComplex;
struct Reduction;

/// Cells per dimension and cellular boundaries. Immutable once built;
/// construction validates d∂ = 0 and precomputes a small chain-equivalent
/// complex used by every cohomology query.
class CwComplex {
 public:
  /// boundary[i] maps dimension i to dimension i - 1, for i = 1..d.
  /// `sq2` maps a degree d to a cochain-level Sq^2 matrix in degree d + 2 over Z/2.
  static std::shared_ptr<const CwComplex> create(std::string name, std::vector<std::size_t> cells,
                                                 std::vector<SparseMatrix> boundary,
                                                 std::map<int, SparseMatrix> sq2 = {});

  const std::string& name() const { return name_; }
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t cells(int dim) const;
  const std::vector<std::size_t>& cell_counts() const { return cells_; }
  /// ∂ from dimension `dim` to `dim - 1`; 0 x n_0 for dim = 0.
  const SparseMatrix& boundary(int dim) const;
  long euler_characteristic() const;
  /// Explicit Sq^2 data, when supplied.
  const SparseMatrix* sq2_matrix(int degree) const;
  /// Owning simplicial complex, when built from one.
  const SimplicialComplex* simplicial() const { return simplicial_; }
  const Reduction& reduction() const { return *reduction_; }

  /// δ c for a cochain of degree `degree`.
  Cochain coboundary(const Cochain& c, int degree, long modulus = 0) const;
  bool is_cocycle(const Cochain& c, int degree, long modulus = 0) const;

 private:
  friend class SimplicialComplex;
  CwComplex() = default;
  static std::shared_ptr<CwComplex> build(std::string name, std::vector<std::size_t> cells,
                                          std::vector<SparseMatrix> boundary, std::map<int, SparseMatrix> sq2);
  std::string name_;
  std::vector<std::size_t> cells_;
  std::vector<SparseMatrix> boundary_;
  std::map<int, SparseMatrix> sq2_;
  const SimplicialComplex* simplicial_ = nullptr;
  std::shared_ptr<const Reduction> reduction_;
};

/// Ordered simplicial complex: vertices 0..n-1, each simplex stored with
/// increasing vertices. Boundary orientation is the alternating sum of faces.
class SimplicialComplex : public std::enable_shared_from_this<SimplicialComplex> {
 public:
  /// Closes the facet list under faces. Throws on empty or repeated-vertex facets.
  static std::shared_ptr<const SimplicialComplex> from_facets(std::string name, std::vector<std::vector<int>> facets);

  const std::string& name() const { return name_; }
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t vertex_count() const { return simplices_.empty() ? 0 : simplices_[0].size(); }
  const std::vector<std::vector<int>>& simplices(int dim) const;
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  /// Index of a sorted vertex tuple among simplices of its dimension.
  std::optional<std::size_t> index_of(const std::vector<int>& simplex) const;
  /// Cellular view; shares ownership with this complex.
  std::shared_ptr<const CwComplex> cw() const;

 private:
  SimplicialComplex() = default;
  std::string name_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<std::vector<int>>> simplices_;
  std::map<std::vector<int>, std::size_t> index_;
  std::shared_ptr<const CwComplex> cw_;
};

/// Product triangulation: vertex (v, w) gets id v * |L| + w and each pair of
/// simplices is triangulated by its monotone staircases.
std::shared_ptr<const SimplicialComplex> simplicial_product(const SimplicialComplex& k, const SimplicialComplex& l);

/// Vertex map inducing a simplicial map source -> target.
struct SimplicialMap {
  const SimplicialComplex* source = nullptr;
  const SimplicialComplex* target = nullptr;
  std::vector<int> vertex_map;
};

/// Projection of a product onto its first or second factor.
SimplicialMap product_projection(const SimplicialComplex& product, const SimplicialComplex& k,
                                 const SimplicialComplex& l, int factor);

/// f^* c on degree-`degree` cochains. Degenerate images contribute zero;
/// reordered images contribute the permutation sign.
Cochain pullback(const SimplicialMap& f, const Cochain& c, int degree, long modulus = 0);

// ---------------------------------------------------------------------------
// Chain-level reduction

/// Elimination of unit entries of the coboundary, recorded so that cochains
/// can be moved between the original and the reduced complex. project and
/// lift are chain maps, project ∘ lift = id and lift ∘ project ≃ id.
struct Reduction {
  struct Step {
    int degree = 0;          // a lives in `degree`, b in `degree + 1`
    std::size_t a = 0;
    std::size_t b = 0;
    long epsilon = 1;        // δ entry at (b, a), ±1
    std::vector<std::pair<std::size_t, long>> alpha;  // δa without b
    std::vector<std::pair<std::size_t, long>> beta;   // row b without a
  };
  std::vector<Step> steps;
  /// Cell counts of the original complex.
  std::vector<std::size_t> cells;
  /// survivors[d]: original indices of the remaining cells, increasing.
  std::vector<std::vector<std::size_t>> survivors;
  /// Dense coboundary of the reduced complex, degree d to d + 1.
  std::vector<IntMatrix> coboundary;

  Cochain project(const Cochain& c, int degree, long modulus = 0) const;
  Cochain lift(const Cochain& c, int degree, long modulus = 0) const;
  std::size_t reduced_cells(int degree) const { return survivors.at(degree).size(); }
};

// ---------------------------------------------------------------------------
// Cohomology

/// H^degree(X; ring) with cocycle generators on the original cells.
class CohomologyGroup {
 public:
  int degree() const { return degree_; }
  Ring ring() const { return ring_; }
  const FgAbGroup& group() const { return group_; }
  /// Generator cocycles, one per canonical coordinate of group().
  const std::vector<Cochain>& generators() const { return generators_; }
  /// Class of a cocycle in canonical coordinates. Throws unless `c` is a cocycle.
  AbElement class_of(const Cochain& c) const;
  bool is_coboundary(const Cochain& c) const { return class_of(c).is_zero(); }

 private:
  friend CohomologyGroup cohomology(const CwComplex&, Ring, int);
  const CwComplex* complex_ = nullptr;
  int degree_ = 0;
  Ring ring_ = Ring::Z;
  FgAbGroup group_;
  std::vector<Cochain> generators_;
  IntMatrix cycles_;           // reduced cocycles spanning the kernel, as columns
  IntMatrix to_coordinates_;   // rows of U kept as group coordinates
};

CohomologyGroup cohomology(const CwComplex& x, Ring ring, int degree);

/// Integral Betti number b_degree.
std::size_t betti(const CwComplex& x, int degree);

struct CohomologyClass {
  int degree = 0;
  Ring ring = Ring::Z;
  Cochain representative;
  AbElement element;
};

CohomologyClass make_class(const CwComplex& x, Ring ring, int degree, const Cochain& representative);

/// Alexander–Whitney product of cochains of degrees p and q, modulo `modulus`
/// (0 for Z). Returns the zero cochain when p + q exceeds the dimension.
Cochain cup_product(const SimplicialComplex& s, const Cochain& u, int p, const Cochain& v, int q, long modulus = 2);

/// Steenrod cup-i product over Z/2 in degree p + q - i via interval cuts.
Cochain cup_i(const SimplicialComplex& s, const Cochain& u, int p, const Cochain& v, int q, int i);

/// Sq^2 u = u ∪_{d-2} u over Z/2 for a degree-d cochain, d >= 2. Uses the
/// simplicial structure, else an explicit Sq^2 matrix. Throws when neither exists.
Cochain sq2(const CwComplex& x, const Cochain& u, int degree);

// ---------------------------------------------------------------------------
// Turnability conditions

/// I^{2k}(X) = ((×2) ∘ Sq^2 ∘ ρ_2)(H^{2k-2}(X; Z)) inside H^{2k}(X; Z/4).
struct ISubgroup {
  int k = 0;
  /// Z/4 cocycles of degree 2k generating the subgroup.
  std::vector<Cochain> generators;
  /// Order of the subgroup in cohomology.
  long order = 1;
  std::string note;
};

/// Throws InvalidComplex when k is odd, H^{2k-2}(X; Z) is nonzero and no Sq^2 data exists.
ISubgroup i_subgroup(const CwComplex& x, int k);

enum class TcHolds { HoldsPlus, HoldsMinus, HoldsBoth, Fails };
enum class Sufficiency { Sufficient, NecessaryOnly };

struct TcVerdict {
  TcHolds holds = TcHolds::Fails;
  Sufficiency sufficiency = Sufficiency::Sufficient;
  /// Index of the first candidate matching +e, resp. -e.
  std::optional<std::size_t> plus_witness;
  std::optional<std::size_t> minus_witness;
  std::string note;
};

std::string holds_name(TcHolds h);
std::string sufficiency_name(Sufficiency s);

/// Tests ρ_4(c) ≡ ±ρ_4(e) modulo I^{2k}(X) and coboundaries for each
/// candidate c. NecessaryOnly exactly when k is even and H^{2k}(X; Z) has
/// 2-torsion.
TcVerdict tc_condition(const CwComplex& x, int k, const Cochain& euler, const std::vector<Cochain>& ck_mod4);

/// Adds 2j to the coefficient of each named 2k-cell.
Cochain euler_cocycle_modify(const Cochain& c, const std::vector<std::pair<std::size_t, long>>& mods);

/// True iff some candidate equals e in H^{2k}(X; Z). Throws InvalidComplex
/// when H^{2k}(X; Z) has 2-torsion.
bool thomas_criterion(const CwComplex& x, int k, const Cochain& euler, const std::vector<Cochain>& ck_candidates);

// ---------------------------------------------------------------------------
// Serialization

/// Parses {"cells": [...], "boundary": {"i": rows}} or {"simplices": [[...]]},
/// optionally with "name" and "sq2": {"d": rows}.
std::shared_ptr<const CwComplex> parse_complex(const std::string& text);
std::shared_ptr<const CwComplex> load_complex(const std::string& path);
/// Versioned record; simplicial complexes are written as their facets.
std::string complex_to_json(const CwComplex& x);

}  // namespace turnkit::cw
