#include "turnkit/groupoid.hpp"

#include <algorithm>

namespace turnkit::groupoid {

namespace {

Central flip(Central c) { return c == Central::Plus ? Central::Minus : Central::Plus; }

}  // namespace

std::string CentralMorphism::name() const {
  const bool tw = twist != 0;
  if (source == target) return std::string(tw ? "eta_" : "id_") + (source == Central::Plus ? "I" : "-I");
  const std::string base = tw ? "betabar" : "beta";
  return source == Central::Plus ? base : base + "^-1";
}

std::array<CentralMorphism, 8> all_morphisms() {
  std::array<CentralMorphism, 8> out;
  std::size_t i = 0;
  for (Central s : {Central::Plus, Central::Minus})
    for (Central t : {Central::Plus, Central::Minus})
      for (int w : {0, 1}) out[i++] = {s, t, w};
  return out;
}

CentralMorphism identity(Central object) { return {object, object, 0}; }

CentralMorphism compose(const CentralMorphism& first, const CentralMorphism& second) {
  if (first.target != second.source)
    throw NonComposable("cannot compose " + first.name() + " with " + second.name());
  return {first.source, second.target, (first.twist + second.twist) % 2};
}

CentralMorphism inverse(const CentralMorphism& m) { return {m.target, m.source, m.twist}; }

CentralMorphism negate(const CentralMorphism& m, int k) {
  // For k odd, -beta is beta twisted by the essential loop.
  const int epsilon = (k % 2 != 0 && m.source != m.target) ? 1 : 0;
  return {flip(m.source), flip(m.target), (m.twist + epsilon) % 2};
}

GroupoidChecks verify_groupoid(int k) {
  GroupoidChecks c;
  const auto ms = all_morphisms();
  c.morphisms = ms.size();
  for (const auto& a : ms) {
    if (!(compose(identity(a.source), a) == a) || !(compose(a, identity(a.target)) == a)) c.unital = false;
    if (!(compose(a, inverse(a)) == identity(a.source)) || !(compose(inverse(a), a) == identity(a.target)))
      c.inverses = false;
    if (!(negate(negate(a, k), k) == a)) c.negation_involutive = false;
    for (const auto& b : ms) {
      if (a.target != b.source) continue;
      if (!(negate(compose(a, b), k) == compose(negate(a, k), negate(b, k)))) c.negation_automorphism = false;
      for (const auto& d : ms) {
        if (b.target != d.source) continue;
        ++c.composable_triples;
        if (!(compose(compose(a, b), d) == compose(a, compose(b, d)))) c.associative = false;
      }
    }
  }
  return c;
}

GroupoidQuotient pi1_pso(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  GroupoidQuotient q;
  for (const auto& m : all_morphisms())
    if (m.source == Central::Plus) q.elements.push_back(m);

  auto class_of = [&](CentralMorphism m) {
    if (m.source != Central::Plus) m = negate(m, k);
    for (std::size_t i = 0; i < q.elements.size(); ++i)
      if (q.elements[i] == m) return i;
    throw std::logic_error("morphism outside the quotient");
  };
  // [g][h] = g * (+-h), the sign chosen so that the composite is defined.
  auto multiply = [&](std::size_t i, std::size_t j) {
    const CentralMorphism& g = q.elements[i];
    CentralMorphism h = q.elements[j];
    if (h.source != g.target) h = negate(h, k);
    return class_of(compose(g, h));
  };

  const std::size_t n = q.elements.size();
  q.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.table[i][j] = multiply(i, j);

  const std::size_t e = class_of(identity(Central::Plus));
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    ok = ok && q.table[e][i] == i && q.table[i][e] == i;
    bool has_inverse = false;
    for (std::size_t j = 0; j < n; ++j) has_inverse = has_inverse || (q.table[i][j] == e && q.table[j][i] == e);
    ok = ok && has_inverse;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) ok = ok && q.table[q.table[i][j]][l] == q.table[i][q.table[j][l]];
  }
  q.group_axioms = ok;

  int max_order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    int order = 1;
    for (std::size_t x = i; x != e && order <= static_cast<int>(n); x = q.table[x][i]) ++order;
    q.orders.push_back(order);
    max_order = std::max(max_order, order);
  }
  // A group of order 4 is cyclic iff it has an element of order 4.
  q.isomorphism_type = max_order == 4 ? linalg::FgAbGroup::cyclic(4) : linalg::FgAbGroup::elementary_two(2);
  return q;
}

}  // namespace turnkit::groupoid
