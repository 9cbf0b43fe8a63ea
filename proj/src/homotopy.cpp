#include "turnkit/homotopy.hpp"

namespace turnkit::homotopy {

namespace {

long pos_mod(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

long floor_div(long v, long m) {
  long q = v / m;
  if ((v % m != 0) && ((v < 0) != (m < 0))) --q;
  return q;
}

void require_k(int k) {
  if (k < 1) throw InvalidBundle("k must be at least 1");
}

}  // namespace

long sigma_order(int k) {
  require_k(k);
  if (k == 1) return 2;
  if (k % 2 == 0) return 0;
  return k % 4 == 1 ? 2 : 1;
}

int euler_of_sigma(int k) { return (k == 1 || k == 2 || k == 4) ? 1 : 0; }

SphereBundle::SphereBundle(int k, long a, long b) : k_(k), a_(a), b_(b) {
  require_k(k);
  if (k == 1) {
    // tau_2 = 2 sigma_2: carry whole multiples of 2 into a.
    a_ = a + floor_div(b, 2);
    b_ = pos_mod(b, 2);
    return;
  }
  const long order = sigma_order(k);
  if (order != 0) b_ = pos_mod(b, order);
}

SphereBundle SphereBundle::from_k1k2(long k1, long k2) { return SphereBundle(2, k1, k2 - k1); }

SphereBundle SphereBundle::from_euler_xi(int k, long euler, long xi) {
  require_k(k);
  if (k == 1) {
    // A rank-2 bundle over S^2 is determined by e, and xi = rho_2(e).
    if (pos_mod(euler, 2) != pos_mod(xi, 2)) throw InvalidBundle("for k = 1, xi must equal e mod 2");
    return SphereBundle(1, 0, euler);
  }
  const FgAbGroup ko = ko_reduced(2 * k);
  if (ko.is_trivial() && xi != 0)
    throw InvalidBundle("KO~(S^" + std::to_string(2 * k) + ") = 0, so xi must be 0");
  long b = xi;
  if (ko.is_trivial())
    b = 0;
  else if (ko.is_finite())
    b = pos_mod(xi, 2);
  const long rest = euler - b * euler_of_sigma(k);
  if (rest % 2 != 0)
    throw InvalidBundle("Euler number " + std::to_string(euler) + " is incompatible with xi = " +
                        std::to_string(xi));
  return SphereBundle(k, rest / 2, b);
}

std::pair<long, long> SphereBundle::k1k2() const {
  if (k_ != 2) throw InvalidBundle("(k1, k2) coordinates exist only for k = 2");
  return {a_, a_ + b_};
}

SphereBundle SphereBundle::operator+(const SphereBundle& other) const {
  if (k_ != other.k_) throw InvalidBundle("cannot add bundles of different rank");
  return SphereBundle(k_, a_ + other.a_, b_ + other.b_);
}

std::string SphereBundle::to_string() const {
  return "k=" + std::to_string(k_) + " a=" + std::to_string(a_) + " b=" + std::to_string(b_);
}

FgAbGroup pi_2k_minus_1_so_2k(int k) {
  require_k(k);
  if (k == 1) return FgAbGroup::integers(1);
  if (k % 2 == 0) return FgAbGroup::integers(2);
  if (k % 4 == 1) return FgAbGroup(1, {linalg::Integer(2)});
  return FgAbGroup::integers(1);
}

FgAbGroup pi_2k_so_2k(int k) {
  require_k(k);
  if (k == 1 || k == 3) return FgAbGroup::trivial();
  if (k % 2 == 1) return FgAbGroup::cyclic(4);
  if (k % 4 == 2) return FgAbGroup::elementary_two(2);
  return FgAbGroup::elementary_two(3);
}

FgAbGroup pi_stable_so(int n) {
  if (n < 0) throw std::invalid_argument("negative homotopy degree");
  // pi_n(SO) = KO~(S^{n+1}).
  return ko_reduced(n + 1);
}

long euler_number(const SphereBundle& e) { return 2 * e.a() + e.b() * euler_of_sigma(e.k()); }

FgAbGroup ko_reduced(int n) {
  if (n < 1) throw std::invalid_argument("sphere dimension must be at least 1");
  switch (n % 8) {
    case 0:
    case 4:
      return FgAbGroup::integers(1);
    case 1:
    case 2:
      return FgAbGroup::cyclic(2);
    default:
      return FgAbGroup::trivial();
  }
}

AbHomomorphism eta_mult(int n) {
  FgAbGroup src = ko_reduced(n), dst = ko_reduced(n + 1);
  linalg::IntMatrix m(dst.coordinate_count(), src.coordinate_count());
  if (n % 8 == 0 || n % 8 == 1) m(0, 0) = 1;
  return {src, dst, m};
}

AbElement stable_class(const SphereBundle& e) {
  FgAbGroup g = ko_reduced(2 * e.k());
  if (g.is_trivial()) return AbElement::zero(g);
  return AbElement(g, {linalg::Integer(e.b())});
}

long spin_class_k2(const SphereBundle& e) {
  if (e.k() != 2) throw InvalidBundle("the spin class p is defined here only for k = 2");
  return e.b();
}

}  // namespace turnkit::homotopy
