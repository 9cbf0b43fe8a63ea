#include "cw_internal.hpp"

#include <algorithm>

namespace turnkit::cw {

using detail::from_integers;
using detail::reduce_cochain;
using detail::to_integers;
using linalg::Integer;
using linalg::IntVector;

namespace {

// Solves k w = c over Z (modulus 0) or Z/modulus.
std::optional<IntVector> solve_in(const IntMatrix& k, const IntVector& c, long modulus) {
  if (k.cols() == 0) {
    bool zero = std::all_of(c.begin(), c.end(), [&](const Integer& v) {
      return modulus > 0 ? linalg::mod_floor(v, modulus) == 0 : v == 0;
    });
    return zero ? std::optional<IntVector>(IntVector{}) : std::nullopt;
  }
  return modulus > 0 ? linalg::solve_mod(k, c, modulus) : linalg::solve_integer(k, c);
}

}  // namespace

CohomologyGroup cohomology(const CwComplex& x, Ring ring, int degree) {
  if (degree < 0 || degree > x.dimension()) throw InvalidComplex("degree out of range");
  const Reduction& red = x.reduction();
  const long m = ring_modulus(ring);
  const IntMatrix& delta = red.coboundary[degree];
  const std::size_t n = red.reduced_cells(degree);

  IntMatrix cycles;
  if (delta.rows() == 0) {
    cycles = IntMatrix::identity(n);
  } else {
    cycles = m > 0 ? linalg::kernel_mod(delta, m) : linalg::kernel_basis(delta);
  }
  const std::size_t r = cycles.cols();

  // Relations among the cycle generators: coboundaries, plus the module
  // relations of a non-free spanning set over Z/m.
  std::vector<IntVector> relations;
  if (degree > 0) {
    const IntMatrix& below = red.coboundary[degree - 1];
    for (std::size_t j = 0; j < below.cols(); ++j) {
      auto w = solve_in(cycles, below.column(j), m);
      if (!w) throw std::logic_error("coboundary outside the cocycle module");
      relations.push_back(std::move(*w));
    }
  }
  if (m > 0 && r > 0) {
    const IntMatrix syz = linalg::kernel_mod(cycles, m);
    for (std::size_t j = 0; j < syz.cols(); ++j) relations.push_back(syz.column(j));
    for (std::size_t i = 0; i < r; ++i) {
      IntVector e(r);
      e[i] = m;
      relations.push_back(std::move(e));
    }
  }

  const IntMatrix rel = IntMatrix::from_columns(r, relations);
  const linalg::SmithForm snf = linalg::smith_normal_form(rel);
  std::vector<std::size_t> kept;
  std::vector<Integer> torsion;
  for (std::size_t i = snf.rank; i < r; ++i) kept.push_back(i);
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.D(i, i) != 1) {
      kept.push_back(i);
      torsion.push_back(snf.D(i, i));
    }

  CohomologyGroup h;
  h.complex_ = &x;
  h.degree_ = degree;
  h.ring_ = ring;
  h.group_ = FgAbGroup(r - snf.rank, torsion);
  h.cycles_ = cycles;
  h.to_coordinates_ = IntMatrix(kept.size(), r);
  for (std::size_t c = 0; c < kept.size(); ++c) {
    for (std::size_t j = 0; j < r; ++j) h.to_coordinates_(c, j) = snf.U(kept[c], j);
    IntVector reduced_gen = cycles * std::span<const Integer>(snf.U_inverse.column(kept[c]));
    Cochain gen = reduce_cochain(from_integers(reduced_gen), m);
    h.generators_.push_back(red.lift(gen, degree, m));
  }
  return h;
}

AbElement CohomologyGroup::class_of(const Cochain& c) const {
  const long m = ring_modulus(ring_);
  if (!complex_->is_cocycle(c, degree_, m))
    throw InvalidComplex("cochain of degree " + std::to_string(degree_) + " is not a cocycle over " + ring_name(ring_));
  const Cochain reduced = complex_->reduction().project(c, degree_, m);
  auto w = solve_in(cycles_, to_integers(reduced), m);
  if (!w) throw std::logic_error("projected cocycle outside the cocycle module");
  return AbElement(group_, to_coordinates_ * std::span<const Integer>(*w));
}

std::size_t betti(const CwComplex& x, int degree) { return cohomology(x, Ring::Z, degree).group().free_rank(); }

CohomologyClass make_class(const CwComplex& x, Ring ring, int degree, const Cochain& representative) {
  CohomologyGroup h = cohomology(x, ring, degree);
  return {degree, ring, reduce_cochain(representative, ring_modulus(ring)), h.class_of(representative)};
}

}  // namespace turnkit::cw
