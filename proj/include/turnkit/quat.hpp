#pragma once

// Floating-point verification of the S^3 / SO_4 constructions: quaternionic
// clutching maps, isoclinic factorization, loop lifting through the double
// cover, degrees of sampled maps S^3 -> S^3 and the Kirchhoff homotopy on S^2.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turnkit::quat {

inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kOrthoTol = 1e-9;
inline constexpr double kContinuityBound = 0.5;

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: non-unit quaternion, matrix outside SO_4.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Quaternion {
  double w = 1, x = 0, y = 0, z = 0;

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }
  static Quaternion from_vector(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }

  Eigen::Vector4d vec() const { return {w, x, y, z}; }
  double norm() const { return vec().norm(); }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  Quaternion normalized() const;
  /// x^n; negative powers use the inverse.
  Quaternion pow(int n) const;

  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

  std::string to_string() const;
};

using Rotation4 = Eigen::Matrix4d;

/// Matrix of v -> p v q in the basis (1, i, j, k).
Rotation4 isoclinic(const Quaternion& p, const Quaternion& q);
Rotation4 left_mult(const Quaternion& p);
Rotation4 right_mult(const Quaternion& q);

/// max |R^T R - I| and |det R - 1| both below tol.
bool is_so4(const Rotation4& r, double tol = kOrthoTol);

/// v -> x^k1 v x^k2. Throws InvalidInput when | |x| - 1 | >= 1e-9.
Rotation4 clutching_g(int k1, int k2, const Quaternion& x);

/// (p, q) with R v = p v q, sign fixed by the first nonzero component of p
/// being positive. Throws InvalidInput when R is not in SO_4.
std::pair<Quaternion, Quaternion> cayley_factorize(const Rotation4& r);

/// Lift of a sampled path through S^3 x S^3 -> SO_4, starting at the
/// canonical factorization of the first sample. Throws NumericError when two
/// consecutive samples violate the continuity bound (Frobenius norm).
std::vector<std::pair<Quaternion, Quaternion>> lift_path(const std::vector<Rotation4>& samples);

enum class LoopClass { Trivial, Essential };

/// Classifies a closed sampled loop by whether its lift ends at the negated
/// start. The last sample should equal the first.
LoopClass lift_loop(const std::vector<Rotation4>& samples);

/// Triangulated S^3: unit vertices in R^4, tetrahedra with positive
/// orientation det[v0 v1 v2 v3] > 0.
struct S3Triangulation {
  std::vector<Eigen::Vector4d> vertices;
  std::vector<std::array<int, 4>> tets;
  std::vector<std::pair<int, int>> edges;
};

/// The 16-cell refined `levels` times by the 1-to-8 red refinement of each
/// tetrahedron, midpoints pushed to the sphere. levels = 4 gives 65536 tets.
const S3Triangulation& s3_triangulation(int levels);

struct SampledSphereMap {
  const S3Triangulation* domain = nullptr;
  std::vector<Eigen::Vector4d> images;
};

SampledSphereMap sample_map(const S3Triangulation& t, const std::function<Eigen::Vector4d(const Eigen::Vector4d&)>& f);

/// Largest image edge length.
double max_image_edge(const SampledSphereMap& f);

/// Signed count of preimages of a jittered regular value. Throws NumericError
/// when an image edge reaches sqrt 2 or no regular value is found after
/// `max_retries`.
long degree(const SampledSphereMap& f, std::uint64_t seed = 1, int max_retries = 16);

struct Bidegree {
  long p_degree = 0;
  long q_degree = 0;
};

inline constexpr int kDefaultResolution = 4;

/// Samples x -> clutching_g(k1, k2, x) on S^3, factorizes pointwise with
/// continuous sign propagation and returns the degrees of both factors.
Bidegree extract_bidegree(int k1, int k2, int resolution = kDefaultResolution, std::uint64_t seed = 1);

struct CommutationReport {
  double left_max = 0;
  double right_max = 0;
  bool left_pass = true;
  bool right_pass = true;
  std::optional<Quaternion> left_witness;
  std::optional<Quaternion> right_witness;
  int samples = 0;
};

/// Tests [g(x), L_i] and [g(x), R_i] over 1, i, j, k followed by seeded random
/// unit quaternions, pass threshold 1e-12. Witnesses are first failures.
CommutationReport verify_complex_commutation(int k1, int k2, int samples = 256, std::uint64_t seed = 1);

struct KirchhoffReport {
  int resolution = 0;
  std::size_t grid_points = 0;
  double max_orthogonality_error = 0;
  double max_t0_error = 0;
  double max_t1_error = 0;
  double max_step = 0;
  double north_pole_error = 0;
  bool passed = false;
  /// Worst witness for the first violated tolerance, empty when passed.
  std::string witness;
};

/// H_t(x) = -x x^T + cos(pi t)(I - x x^T) + sin(pi t)[x]_x on S^2 x [0, 1].
Eigen::Matrix3d kirchhoff_homotopy(const Eigen::Vector3d& x, double t);

KirchhoffReport kirchhoff_trivialization(int resolution = 32);

}  // namespace turnkit::quat
