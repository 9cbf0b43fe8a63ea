#pragma once

// Report builders behind the command-line front end and the C API. Each
// builder validates its inputs, runs one module operation and records the
// normalized inputs, results, warnings and method notes.

#include "turnkit/cw.hpp"
#include "turnkit/homotopy.hpp"
#include "turnkit/report.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace turnkit::commands {

using report::Report;

/// Bundle coordinates in one of three systems: (a, b), (k1, k2) for k = 2,
/// or (euler, xi). Exactly one complete system must be given.
struct Coordinates {
  int k = 0;
  std::optional<long> a, b, k1, k2, euler, xi;

  bool empty() const { return !a && !b && !k1 && !k2 && !euler && !xi; }
};

/// Throws homotopy::InvalidBundle for missing, partial or over-determined systems.
homotopy::SphereBundle normalize(const Coordinates& c);

Report sphere(const Coordinates& c);
/// Classification of E_{k1,k2} over S^4 for |k1|, |k2| <= range.
Report s4_table(long range);
Report groupoid(int k);
/// Without coordinates the bundle defaults to tau.
Report gauge(const Coordinates& c);
Report samelson(int k);
Report relations(int k, long bound, int random_pairs, std::uint64_t seed);

/// `degree` < 0 covers every degree.
Report cw_cohomology(const cw::CwComplex& x, cw::Ring ring, int degree, bool with_generators);
/// Sq^2 on each generator of H^d(X; Z/2); `degree` < 0 covers every degree.
Report cw_sq2(const cw::CwComplex& x, int degree);
/// Undecided when the condition holds but is only necessary.
Report cw_tc(const cw::CwComplex& x, int k, const cw::Cochain& euler, const std::vector<cw::Cochain>& ck_mod4,
             bool stably_trivial);
Report cw_modify_euler(const cw::CwComplex& x, int k, const cw::Cochain& euler,
                       const std::vector<std::pair<std::size_t, long>>& mods);
Report cw_thomas(const cw::CwComplex& x, int k, const cw::Cochain& euler, const std::vector<cw::Cochain>& ck);

Report quat_extract(int k1, int k2, int resolution, std::uint64_t seed);
Report quat_commute(int k1, int k2, int samples, std::uint64_t seed);
Report quat_kirchhoff(int resolution);

}  // namespace turnkit::commands
