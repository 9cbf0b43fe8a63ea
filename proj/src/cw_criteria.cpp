#include "cw_internal.hpp"

#include <algorithm>

namespace turnkit::cw {

using detail::reduce_cochain;
using detail::residue;
using detail::to_integers;
using linalg::Integer;
using linalg::IntVector;

std::string holds_name(TcHolds h) {
  switch (h) {
    case TcHolds::HoldsPlus: return "HoldsPlus";
    case TcHolds::HoldsMinus: return "HoldsMinus";
    case TcHolds::HoldsBoth: return "HoldsBoth";
    case TcHolds::Fails: return "Fails";
  }
  return "?";
}

std::string sufficiency_name(Sufficiency s) {
  return s == Sufficiency::Sufficient ? "Sufficient" : "NecessaryOnly";
}

namespace {

void check_k(const CwComplex& x, int k) {
  if (k < 1) throw InvalidComplex("k must be positive");
  if (2 * k > x.dimension()) throw InvalidComplex("degree 2k exceeds the dimension of the complex");
}

void check_length(const CwComplex& x, const Cochain& c, int degree, const std::string& what) {
  if (c.size() != x.cells(degree))
    throw InvalidComplex(what + " has " + std::to_string(c.size()) + " entries, expected " +
                         std::to_string(x.cells(degree)));
}

// Order of the subgroup of ⊕ Z/d_j generated by the given coordinate vectors.
long subgroup_order(const FgAbGroup& g, const std::vector<AbElement>& gens) {
  const std::size_t r = g.coordinate_count();
  std::vector<IntVector> cols;
  for (const auto& e : gens) cols.push_back(e.coords());
  for (std::size_t i = 0; i < r; ++i) {
    IntVector rel(r);
    rel[i] = g.coordinate_modulus(i);
    cols.push_back(std::move(rel));
  }
  const FgAbGroup quotient = linalg::cokernel(IntMatrix::from_columns(r, cols));
  return g.order()->get_si() / quotient.order()->get_si();
}

}  // namespace

ISubgroup i_subgroup(const CwComplex& x, int k) {
  if (k < 1) throw InvalidComplex("k must be positive");
  ISubgroup out;
  out.k = k;
  if (k % 2 == 0) {
    out.note = "trivial for even k";
    return out;
  }
  if (2 * k > x.dimension()) {
    out.note = "degree 2k exceeds the dimension";
    return out;
  }
  const CohomologyGroup source = cohomology(x, Ring::Z, 2 * k - 2);
  if (source.generators().empty()) {
    out.note = "H^" + std::to_string(2 * k - 2) + "(X; Z) = 0";
    return out;
  }
  if (x.simplicial() == nullptr && x.sq2_matrix(2 * k - 2) == nullptr)
    throw InvalidComplex("k is odd and H^" + std::to_string(2 * k - 2) +
                         "(X; Z) is nonzero, so Sq^2 is needed: supply simplices or an sq2 matrix");
  const CohomologyGroup target = cohomology(x, Ring::Z4, 2 * k);
  std::vector<AbElement> classes;
  for (const Cochain& g : source.generators()) {
    Cochain y = sq2(x, reduce_cochain(g, 2), 2 * k - 2);
    for (long& v : y) v *= 2;
    classes.push_back(target.class_of(y));
    out.generators.push_back(std::move(y));
  }
  out.order = subgroup_order(target.group(), classes);
  out.note = "image of " + std::to_string(out.generators.size()) + " integral generators";
  return out;
}

TcVerdict tc_condition(const CwComplex& x, int k, const Cochain& euler, const std::vector<Cochain>& ck_mod4) {
  check_k(x, k);
  const int deg = 2 * k;
  check_length(x, euler, deg, "Euler cocycle");
  if (!x.is_cocycle(euler, deg)) throw InvalidComplex("Euler cochain is not an integral cocycle");
  for (const auto& c : ck_mod4) {
    check_length(x, c, deg, "Chern candidate");
    if (!x.is_cocycle(c, deg, 4)) throw InvalidComplex("Chern candidate is not a cocycle mod 4");
  }

  TcVerdict v;
  const bool even = k % 2 == 0;
  if (even && cohomology(x, Ring::Z, deg).group().has_two_torsion()) {
    v.sufficiency = Sufficiency::NecessaryOnly;
    v.note = "H^" + std::to_string(deg) + "(X; Z) has 2-torsion: the condition is necessary only";
  }
  if (ck_mod4.empty()) {
    v.holds = TcHolds::Fails;
    v.note = v.note.empty() ? "" : v.note + "; ";
    v.note += "no stable complex structure data was supplied";
    return v;
  }

  // Membership in span(I^{2k}) + im δ, tested on the reduced complex.
  const Reduction& red = x.reduction();
  const ISubgroup indeterminacy = i_subgroup(x, k);
  std::vector<IntVector> span;
  for (const Cochain& g : indeterminacy.generators) span.push_back(to_integers(red.project(g, deg, 4)));
  const IntMatrix& below = red.coboundary[deg - 1];
  for (std::size_t j = 0; j < below.cols(); ++j) span.push_back(below.column(j));
  const std::size_t n = red.reduced_cells(deg);
  const IntMatrix basis = IntMatrix::from_columns(n, span);

  auto member = [&](const Cochain& c) {
    const Cochain target = red.project(c, deg, 4);
    if (std::all_of(target.begin(), target.end(), [](long t) { return t == 0; })) return true;
    if (basis.cols() == 0) return false;
    return linalg::solve_mod(basis, to_integers(target), 4).has_value();
  };

  for (std::size_t idx = 0; idx < ck_mod4.size(); ++idx) {
    Cochain plus(ck_mod4[idx].size()), minus(ck_mod4[idx].size());
    for (std::size_t i = 0; i < plus.size(); ++i) {
      plus[i] = residue(ck_mod4[idx][i] - euler[i], 4);
      minus[i] = residue(ck_mod4[idx][i] + euler[i], 4);
    }
    if (!v.plus_witness && member(plus)) v.plus_witness = idx;
    if (!v.minus_witness && member(minus)) v.minus_witness = idx;
  }
  if (v.plus_witness && v.minus_witness) v.holds = TcHolds::HoldsBoth;
  else if (v.plus_witness) v.holds = TcHolds::HoldsPlus;
  else if (v.minus_witness) v.holds = TcHolds::HoldsMinus;
  else v.holds = TcHolds::Fails;
  if (!even && !indeterminacy.generators.empty()) {
    v.note = v.note.empty() ? "" : v.note + "; ";
    v.note += "quotiented by I^" + std::to_string(deg) + " of order " + std::to_string(indeterminacy.order);
  }
  return v;
}

Cochain euler_cocycle_modify(const Cochain& c, const std::vector<std::pair<std::size_t, long>>& mods) {
  Cochain out = c;
  for (const auto& [cell, j] : mods) {
    if (cell >= out.size())
      throw InvalidComplex("cell index " + std::to_string(cell) + " out of range for a cochain of length " +
                           std::to_string(out.size()));
    out[cell] = detail::mul_add(out[cell], 2, j);
  }
  return out;
}

bool thomas_criterion(const CwComplex& x, int k, const Cochain& euler, const std::vector<Cochain>& ck_candidates) {
  check_k(x, k);
  const int deg = 2 * k;
  const CohomologyGroup h = cohomology(x, Ring::Z, deg);
  if (h.group().has_two_torsion())
    throw InvalidComplex("H^" + std::to_string(deg) + "(X; Z) = " + h.group().to_string() +
                         " has 2-torsion, outside the criterion's hypothesis");
  check_length(x, euler, deg, "Euler cocycle");
  const AbElement e = h.class_of(euler);
  for (const auto& c : ck_candidates) {
    check_length(x, c, deg, "Chern candidate");
    if (h.class_of(c) == e) return true;
  }
  return false;
}

}  // namespace turnkit::cw
