#include "cw_internal.hpp"

namespace turnkit::cw {

using detail::mul_add;
using detail::residue;

namespace {

void check_cochain(const SimplicialComplex& s, const Cochain& c, int degree) {
  if (degree < 0 || degree > s.dimension()) throw InvalidComplex("cochain degree out of range");
  if (c.size() != s.simplices(degree).size()) throw InvalidComplex("cochain length does not match the simplex count");
}

long value_on(const SimplicialComplex& s, const Cochain& c, const std::vector<int>& face) {
  auto idx = s.index_of(face);
  return idx ? c[*idx] : 0;
}

}  // namespace

Cochain cup_product(const SimplicialComplex& s, const Cochain& u, int p, const Cochain& v, int q, long modulus) {
  check_cochain(s, u, p);
  check_cochain(s, v, q);
  const int n = p + q;
  if (n > s.dimension()) return {};
  const auto& simplices = s.simplices(n);
  Cochain out(simplices.size(), 0);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto& sigma = simplices[i];
    const std::vector<int> front(sigma.begin(), sigma.begin() + p + 1);
    const std::vector<int> back(sigma.begin() + p, sigma.end());
    const long a = value_on(s, u, front);
    if (a == 0) continue;
    out[i] = residue(mul_add(0, a, value_on(s, v, back)), modulus);
  }
  return out;
}

Cochain cup_i(const SimplicialComplex& s, const Cochain& u, int p, const Cochain& v, int q, int i) {
  check_cochain(s, u, p);
  check_cochain(s, v, q);
  if (i < 0) throw InvalidComplex("cup-i needs i >= 0");
  const int n = p + q - i;
  if (n < 0 || n > s.dimension()) return {};
  const auto& simplices = s.simplices(n);
  Cochain out(simplices.size(), 0);
  if (i > n) return out;
  // Cut points 0 <= j_0 < ... < j_i <= n split [0, n] into i + 2 intervals
  // sharing endpoints; u sees the even intervals, v the odd ones.
  std::vector<int> cuts(i + 1);
  std::vector<int> front, back;
  for (std::size_t idx = 0; idx < simplices.size(); ++idx) {
    const auto& sigma = simplices[idx];
    long acc = 0;
    for (int c = 0; c <= i; ++c) cuts[c] = c;
    while (true) {
      front.clear();
      back.clear();
      int start = 0;
      for (int c = 0; c <= i + 1; ++c) {
        const int end = c <= i ? cuts[c] : n;
        auto& side = c % 2 == 0 ? front : back;
        for (int t = start; t <= end; ++t) side.push_back(sigma[t]);
        start = end;
      }
      if (static_cast<int>(front.size()) == p + 1 && static_cast<int>(back.size()) == q + 1)
        acc ^= (value_on(s, u, front) & value_on(s, v, back)) & 1;
      // Next combination of cut points.
      int c = i;
      while (c >= 0 && cuts[c] == n - i + c) --c;
      if (c < 0) break;
      ++cuts[c];
      for (int d = c + 1; d <= i; ++d) cuts[d] = cuts[d - 1] + 1;
    }
    out[idx] = acc;
  }
  return out;
}

Cochain sq2(const CwComplex& x, const Cochain& u, int degree) {
  if (degree < 2) throw InvalidComplex("Sq^2 is only provided on classes of degree at least 2");
  if (degree > x.dimension()) throw InvalidComplex("degree out of range");
  if (u.size() != x.cells(degree)) throw InvalidComplex("cochain length does not match the cell count");
  if (degree + 2 > x.dimension()) return Cochain(x.cells(degree + 2), 0);
  Cochain mod2 = detail::reduce_cochain(u, 2);
  if (const SimplicialComplex* s = x.simplicial()) return cup_i(*s, mod2, degree, mod2, degree, degree - 2);
  if (const SparseMatrix* m = x.sq2_matrix(degree)) return m->apply(mod2, 2);
  throw InvalidComplex("Sq^2 needs a simplicial structure or an explicit sq2 matrix in degree " +
                       std::to_string(degree));
}

}  // namespace turnkit::cw
