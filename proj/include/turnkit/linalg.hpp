#pragma once

// Exact integer and modular linear algebra: dense matrices over Z with
// arbitrary-precision entries, Smith and Howell normal forms, finitely
// generated abelian groups and their elements.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace turnkit::linalg {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Appends the columns of `other` (same row count) on the right.
  IntMatrix hconcat(const IntMatrix& other) const;

  /// Entries reduced into [0, modulus).
  IntMatrix reduced_mod(const Integer& modulus) const;

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, std::span<const Integer> v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Non-negative residue of `value` modulo `modulus` (modulus > 0).
Integer mod_floor(const Integer& value, const Integer& modulus);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank,
/// all diagonal entries non-negative.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inverse;
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1, ..., d_rank.
  IntVector invariant_factors() const;
};

/// Pivots on the entry of least nonzero absolute value, so the result is
/// deterministic for a given input.
SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t with
/// d_1 | d_2 | ... and every d_i >= 2.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  /// Throws std::invalid_argument unless the torsion list is a canonical chain.
  FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion);

  /// Group Z^r ⊕ (⊕ Z/n_i) for arbitrary cyclic orders n_i (0 means Z).
  static FgAbGroup from_cyclic_orders(std::size_t free_rank, std::span<const Integer> orders);
  static FgAbGroup trivial() { return {}; }
  static FgAbGroup integers(std::size_t rank = 1) { return {rank, {}}; }
  static FgAbGroup cyclic(long order);
  static FgAbGroup elementary_two(std::size_t rank);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  /// Number of coordinates of an element.
  std::size_t coordinate_count() const { return free_rank_ + torsion_.size(); }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  std::optional<Integer> order() const;
  bool has_two_torsion() const;
  /// Modulus of coordinate i (0 for a free coordinate).
  Integer coordinate_modulus(std::size_t i) const;

  /// "0", "Z", "Z^2 ⊕ Z/2", ...
  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Element of an FgAbGroup in its canonical coordinates: free coordinates
/// first, then torsion coordinates reduced into [0, d_i).
class AbElement {
 public:
  AbElement() = default;
  AbElement(FgAbGroup parent, IntVector coords);

  static AbElement zero(const FgAbGroup& parent);
  static AbElement generator(const FgAbGroup& parent, std::size_t index);

  const FgAbGroup& parent() const { return parent_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;

  AbElement operator+(const AbElement& other) const;
  AbElement operator-(const AbElement& other) const;
  AbElement operator-() const;
  friend AbElement operator*(const Integer& n, const AbElement& x);
  friend bool operator==(const AbElement&, const AbElement&) = default;

  std::string to_string() const;

 private:
  FgAbGroup parent_;
  IntVector coords_;
};

/// Homomorphism between finitely generated abelian groups given by an
/// integer matrix acting on canonical coordinates.
struct AbHomomorphism {
  FgAbGroup source;
  FgAbGroup target;
  IntMatrix matrix;

  AbElement apply(const AbElement& x) const;
  bool is_zero() const;
};

/// Group presented by the columns of `m` as relations among its row generators.
FgAbGroup cokernel(const IntMatrix& m);

/// Columns form a Z-basis of {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Columns form a Z-basis of the lattice spanned by the columns of `generators`.
IntMatrix lattice_basis(const IntMatrix& generators);

/// Some x in Z^n with m x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Integer> b);

/// Howell normal form of the row span of `m` over Z/modulus: rows in
/// echelon order, pivots are divisors of the modulus, entries above each
/// pivot reduced below it, zero rows dropped.
IntMatrix howell_form(const IntMatrix& m, long modulus);

/// Some x with a x ≡ b (mod modulus), or nullopt when the system is
/// unsolvable. Entries of x lie in [0, modulus).
std::optional<IntVector> solve_mod(const IntMatrix& a, std::span<const Integer> b, long modulus);

/// Columns span {x : a x ≡ 0 (mod modulus)} as a Z/modulus-module.
IntMatrix kernel_mod(const IntMatrix& a, long modulus);

}  // namespace turnkit::linalg
