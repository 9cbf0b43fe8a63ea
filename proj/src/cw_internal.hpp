#pragma once

#include "turnkit/cw.hpp"

namespace turnkit::cw::detail {

/// Eliminates unit coboundary entries of the complex given by `boundary`.
std::shared_ptr<const Reduction> reduce(const std::vector<std::size_t>& cells, const std::vector<SparseMatrix>& boundary);

/// acc + a * b, throwing std::overflow_error on overflow.
long mul_add(long acc, long a, long b);

/// Non-negative residue when modulus > 0, identity otherwise.
inline long residue(long v, long modulus) {
  if (modulus <= 0) return v;
  const long r = v % modulus;
  return r < 0 ? r + modulus : r;
}

Cochain reduce_cochain(Cochain c, long modulus);
linalg::IntVector to_integers(const Cochain& c);
Cochain from_integers(const linalg::IntVector& v);

}  // namespace turnkit::cw::detail
