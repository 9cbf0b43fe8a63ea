#include "turnkit/quat.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>
#include <random>
#include <sstream>

namespace turnkit::quat {

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0) throw InvalidInput("cannot normalize the zero quaternion");
  return *this * (1.0 / n);
}

Quaternion Quaternion::pow(int n) const {
  Quaternion base = n < 0 ? conj() * (1.0 / (w * w + x * x + y * y + z * z)) : *this;
  Quaternion out = one();
  for (int e = std::abs(n); e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    base = base * base;
  }
  return out;
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
          w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
}

std::string Quaternion::to_string() const {
  std::ostringstream out;
  out.precision(6);
  out << "(" << w << ", " << x << ", " << y << ", " << z << ")";
  return out.str();
}

Rotation4 isoclinic(const Quaternion& p, const Quaternion& q) {
  const Quaternion basis[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  Rotation4 m;
  for (int c = 0; c < 4; ++c) m.col(c) = (p * basis[c] * q).vec();
  return m;
}

Rotation4 left_mult(const Quaternion& p) { return isoclinic(p, Quaternion::one()); }
Rotation4 right_mult(const Quaternion& q) { return isoclinic(Quaternion::one(), q); }

bool is_so4(const Rotation4& r, double tol) {
  if (!r.allFinite()) return false;
  const double ortho = (r.transpose() * r - Rotation4::Identity()).cwiseAbs().maxCoeff();
  return ortho < tol && std::abs(r.determinant() - 1.0) < tol;
}

Rotation4 clutching_g(int k1, int k2, const Quaternion& x) {
  if (std::abs(x.norm() - 1.0) >= kOrthoTol) throw InvalidInput("clutching_g needs a unit quaternion");
  return isoclinic(x.pow(k1), x.pow(k2));
}

namespace {

Quaternion canonical_sign(const Quaternion& p) {
  for (double c : {p.w, p.x, p.y, p.z}) {
    if (std::abs(c) < kAlgebraicTol) continue;
    return c < 0 ? -p : p;
  }
  return p;
}

double pair_distance(const std::pair<Quaternion, Quaternion>& a, const std::pair<Quaternion, Quaternion>& b) {
  return (a.first.vec() - b.first.vec()).norm() + (a.second.vec() - b.second.vec()).norm();
}

std::pair<Quaternion, Quaternion> negated(const std::pair<Quaternion, Quaternion>& a) {
  return {-a.first, -a.second};
}

// Sign of the pair closest to `reference`.
std::pair<Quaternion, Quaternion> align(const std::pair<Quaternion, Quaternion>& pq,
                                        const std::pair<Quaternion, Quaternion>& reference) {
  return pair_distance(pq, reference) <= pair_distance(negated(pq), reference) ? pq : negated(pq);
}

}  // namespace

std::pair<Quaternion, Quaternion> cayley_factorize(const Rotation4& r) {
  if (!is_so4(r)) throw InvalidInput("matrix is not in SO_4 within tolerance");
  // a = R(1) = p q; conj(a) R(v) = conj(q) v q restricted to the imaginary part.
  const Quaternion a = Quaternion::from_vector(r.col(0)).normalized();
  Eigen::Matrix3d rot;
  for (int c = 0; c < 3; ++c) {
    Quaternion img = a.conj() * Quaternion::from_vector(r.col(c + 1));
    rot.col(c) = Eigen::Vector3d(img.x, img.y, img.z);
  }
  // Eigen returns s with rot = (v -> s v conj(s)); here s = conj(q).
  Eigen::Quaterniond s(rot);
  const Quaternion q = Quaternion{s.w(), s.x(), s.y(), s.z()}.normalized().conj();
  Quaternion p = (a * q.conj()).normalized();
  const Quaternion pc = canonical_sign(p);
  const bool flip = pc.w != p.w || pc.x != p.x || pc.y != p.y || pc.z != p.z;
  return {pc, flip ? -q : q};
}

std::vector<std::pair<Quaternion, Quaternion>> lift_path(const std::vector<Rotation4>& samples) {
  std::vector<std::pair<Quaternion, Quaternion>> lift;
  lift.reserve(samples.size());
  for (std::size_t t = 0; t < samples.size(); ++t) {
    auto pq = cayley_factorize(samples[t]);
    if (t == 0) {
      lift.push_back(pq);
      continue;
    }
    const double jump = (samples[t] - samples[t - 1]).norm();
    if (jump >= kContinuityBound) {
      std::ostringstream msg;
      msg << "continuity bound violated between samples " << t - 1 << " and " << t << " (step " << jump << ")";
      throw NumericError(msg.str());
    }
    lift.push_back(align(pq, lift.back()));
  }
  return lift;
}

LoopClass lift_loop(const std::vector<Rotation4>& samples) {
  if (samples.size() < 2) return LoopClass::Trivial;
  if ((samples.front() - samples.back()).norm() >= kOrthoTol * 1e3)
    throw InvalidInput("loop does not close: last sample differs from the first");
  auto lift = lift_path(samples);
  return pair_distance(lift.back(), lift.front()) <= pair_distance(lift.back(), negated(lift.front()))
             ? LoopClass::Trivial
             : LoopClass::Essential;
}

// ---------------------------------------------------------------------------
// Triangulated S^3

namespace {

double det4(const Eigen::Vector4d& a, const Eigen::Vector4d& b, const Eigen::Vector4d& c, const Eigen::Vector4d& d) {
  Eigen::Matrix4d m;
  m << a, b, c, d;
  return m.determinant();
}

void orient(S3Triangulation& t, std::array<int, 4>& tet) {
  const auto& v = t.vertices;
  if (det4(v[tet[0]], v[tet[1]], v[tet[2]], v[tet[3]]) < 0) std::swap(tet[2], tet[3]);
}

S3Triangulation sixteen_cell() {
  S3Triangulation t;
  for (int i = 0; i < 4; ++i)
    for (double s : {1.0, -1.0}) {
      Eigen::Vector4d v = Eigen::Vector4d::Zero();
      v[i] = s;
      t.vertices.push_back(v);
    }
  for (int mask = 0; mask < 16; ++mask) {
    std::array<int, 4> tet;
    for (int i = 0; i < 4; ++i) tet[i] = 2 * i + ((mask >> i) & 1);
    orient(t, tet);
    t.tets.push_back(tet);
  }
  return t;
}

S3Triangulation refine(const S3Triangulation& in) {
  S3Triangulation out;
  out.vertices = in.vertices;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    out.vertices.push_back((in.vertices[a] + in.vertices[b]).normalized());
    const int id = static_cast<int>(out.vertices.size()) - 1;
    midpoint.emplace(key, id);
    return id;
  };
  for (const auto& tet : in.tets) {
    const int x0 = tet[0], x1 = tet[1], x2 = tet[2], x3 = tet[3];
    const int x01 = mid(x0, x1), x02 = mid(x0, x2), x03 = mid(x0, x3);
    const int x12 = mid(x1, x2), x13 = mid(x1, x3), x23 = mid(x2, x3);
    const std::array<std::array<int, 4>, 8> children{{{x0, x01, x02, x03},
                                                      {x01, x1, x12, x13},
                                                      {x02, x12, x2, x23},
                                                      {x03, x13, x23, x3},
                                                      {x01, x02, x03, x13},
                                                      {x01, x02, x12, x13},
                                                      {x02, x03, x13, x23},
                                                      {x02, x12, x13, x23}}};
    for (auto child : children) {
      orient(out, child);
      out.tets.push_back(child);
    }
  }
  return out;
}

void collect_edges(S3Triangulation& t) {
  std::map<std::pair<int, int>, bool> seen;
  for (const auto& tet : t.tets)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) seen[std::minmax(tet[i], tet[j])] = true;
  t.edges.clear();
  for (const auto& [e, unused] : seen) t.edges.push_back(e);
}

}  // namespace

const S3Triangulation& s3_triangulation(int levels) {
  if (levels < 0 || levels > 6) throw InvalidInput("refinement level must lie in [0, 6]");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<S3Triangulation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(levels);
  if (it != cache.end()) return *it->second;
  S3Triangulation t = sixteen_cell();
  for (int l = 0; l < levels; ++l) t = refine(t);
  collect_edges(t);
  auto& slot = cache[levels];
  slot = std::make_unique<S3Triangulation>(std::move(t));
  return *slot;
}

SampledSphereMap sample_map(const S3Triangulation& t, const std::function<Eigen::Vector4d(const Eigen::Vector4d&)>& f) {
  SampledSphereMap m{&t, {}};
  m.images.reserve(t.vertices.size());
  for (const auto& v : t.vertices) m.images.push_back(f(v));
  return m;
}

double max_image_edge(const SampledSphereMap& f) {
  double worst = 0;
  for (const auto& [a, b] : f.domain->edges) worst = std::max(worst, (f.images[a] - f.images[b]).norm());
  return worst;
}

long degree(const SampledSphereMap& f, std::uint64_t seed, int max_retries) {
  if (f.domain == nullptr || f.images.size() != f.domain->vertices.size())
    throw InvalidInput("sampled map does not match its triangulation");
  // Pairwise angles below pi/2 keep the origin off every image simplex.
  const double edge = max_image_edge(f);
  if (edge >= std::numbers::sqrt2) {
    std::ostringstream msg;
    msg << "image edge length " << edge << " exceeds the continuity bound; refine the triangulation";
    throw NumericError(msg.str());
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  constexpr double kBoundaryTol = 1e-10;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Eigen::Vector4d y(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    y.normalize();
    long count = 0;
    bool ambiguous = false;
    for (const auto& tet : f.domain->tets) {
      Eigen::Matrix4d m;
      m << f.images[tet[0]], f.images[tet[1]], f.images[tet[2]], f.images[tet[3]];
      const double d = m.determinant();
      if (std::abs(d) < 1e-300) continue;
      const Eigen::Vector4d lambda = m.partialPivLu().solve(y);
      const double lo = lambda.minCoeff();
      if (lo > kBoundaryTol) {
        count += d > 0 ? 1 : -1;
      } else if (lo > -kBoundaryTol) {
        ambiguous = true;
        break;
      }
    }
    if (!ambiguous) return count;
  }
  throw NumericError("no regular value found after " + std::to_string(max_retries) + " attempts");
}

Bidegree extract_bidegree(int k1, int k2, int resolution, std::uint64_t seed) {
  const S3Triangulation& t = s3_triangulation(resolution);
  const std::size_t n = t.vertices.size();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::pair<Quaternion, Quaternion>> factors(n);
  std::vector<bool> done(n, false);
  std::queue<int> bfs;
  auto factor_at = [&](int v) { return cayley_factorize(clutching_g(k1, k2, Quaternion::from_vector(t.vertices[v]))); };
  factors[0] = factor_at(0);
  done[0] = true;
  bfs.push(0);
  while (!bfs.empty()) {
    const int u = bfs.front();
    bfs.pop();
    for (int v : adj[u]) {
      if (done[v]) continue;
      factors[v] = align(factor_at(v), factors[u]);
      done[v] = true;
      bfs.push(v);
    }
  }
  SampledSphereMap pmap{&t, {}}, qmap{&t, {}};
  pmap.images.reserve(n);
  qmap.images.reserve(n);
  for (const auto& [p, q] : factors) {
    pmap.images.push_back(p.vec());
    qmap.images.push_back(q.vec());
  }
  return {degree(pmap, seed), degree(qmap, seed)};
}

CommutationReport verify_complex_commutation(int k1, int k2, int samples, std::uint64_t seed) {
  CommutationReport r;
  std::vector<Quaternion> xs{Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (static_cast<int>(xs.size()) < samples)
    xs.push_back(Quaternion{gauss(rng), gauss(rng), gauss(rng), gauss(rng)}.normalized());
  const Rotation4 li = left_mult(Quaternion::i()), ri = right_mult(Quaternion::i());
  for (const auto& x : xs) {
    const Rotation4 g = clutching_g(k1, k2, x);
    const double left = (g * li - li * g).cwiseAbs().maxCoeff();
    const double right = (g * ri - ri * g).cwiseAbs().maxCoeff();
    r.left_max = std::max(r.left_max, left);
    r.right_max = std::max(r.right_max, right);
    if (left >= kAlgebraicTol && !r.left_witness) r.left_witness = x;
    if (right >= kAlgebraicTol && !r.right_witness) r.right_witness = x;
    ++r.samples;
  }
  r.left_pass = !r.left_witness;
  r.right_pass = !r.right_witness;
  return r;
}

Eigen::Matrix3d kirchhoff_homotopy(const Eigen::Vector3d& x, double t) {
  const Eigen::Matrix3d xx = x * x.transpose();
  Eigen::Matrix3d cross;
  cross << 0, -x[2], x[1], x[2], 0, -x[0], -x[1], x[0], 0;
  const double a = std::numbers::pi * t;
  return -xx + std::cos(a) * (Eigen::Matrix3d::Identity() - xx) + std::sin(a) * cross;
}

KirchhoffReport kirchhoff_trivialization(int resolution) {
  if (resolution < 2) throw InvalidInput("resolution must be at least 2");
  KirchhoffReport r;
  r.resolution = resolution;
  const int nt = resolution, nth = resolution, nph = 2 * resolution;
  auto point = [&](int i, int j) {
    const double th = std::numbers::pi * i / nth, ph = 2 * std::numbers::pi * j / nph;
    return Eigen::Vector3d(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
  };
  std::string ortho_witness, t0_witness, t1_witness, step_witness;
  for (int i = 0; i <= nth; ++i)
    for (int j = 0; j < nph; ++j) {
      const Eigen::Vector3d x = point(i, j);
      const Eigen::Matrix3d reflection = Eigen::Matrix3d::Identity() - 2 * x * x.transpose();
      for (int l = 0; l <= nt; ++l) {
        const double t = static_cast<double>(l) / nt;
        const Eigen::Matrix3d h = kirchhoff_homotopy(x, t);
        ++r.grid_points;
        std::ostringstream where;
        where << "x=(" << x[0] << ", " << x[1] << ", " << x[2] << ") t=" << t;
        const double ortho = (h.transpose() * h - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
        if (ortho > r.max_orthogonality_error) {
          r.max_orthogonality_error = ortho;
          ortho_witness = where.str();
        }
        if (l == 0) {
          const double e0 = (h - reflection).cwiseAbs().maxCoeff();
          if (e0 > r.max_t0_error) {
            r.max_t0_error = e0;
            t0_witness = where.str();
          }
        }
        if (l == nt) {
          const double e1 = (h + Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
          if (e1 > r.max_t1_error) {
            r.max_t1_error = e1;
            t1_witness = where.str();
          }
        }
        // Steps to the next grid neighbour in t, theta and phi.
        double step = 0;
        if (l < nt) step = std::max(step, (kirchhoff_homotopy(x, static_cast<double>(l + 1) / nt) - h).norm());
        if (i < nth) step = std::max(step, (kirchhoff_homotopy(point(i + 1, j), t) - h).norm());
        step = std::max(step, (kirchhoff_homotopy(point(i, (j + 1) % nph), t) - h).norm());
        if (step > r.max_step) {
          r.max_step = step;
          step_witness = where.str();
        }
      }
    }
  Eigen::Matrix3d expected;
  expected << 0, -1, 0, 1, 0, 0, 0, 0, -1;
  r.north_pole_error = (kirchhoff_homotopy(Eigen::Vector3d(0, 0, 1), 0.5) - expected).cwiseAbs().maxCoeff();

  r.passed = true;
  auto fail = [&](bool bad, const std::string& what) {
    if (bad && r.passed) {
      r.passed = false;
      r.witness = what;
    }
  };
  fail(r.max_orthogonality_error >= kOrthoTol, "orthogonality at " + ortho_witness);
  fail(r.max_t0_error >= kOrthoTol, "t=0 reflection at " + t0_witness);
  fail(r.max_t1_error >= kOrthoTol, "t=1 identity at " + t1_witness);
  fail(r.max_step >= kContinuityBound, "continuity at " + step_witness);
  fail(r.north_pole_error >= kOrthoTol, "north pole at t=1/2");
  return r;
}

}  // namespace turnkit::quat
