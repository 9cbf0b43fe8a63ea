#include "doctest.h"
#include "turnkit/linalg.hpp"

#include <functional>
#include <random>

using namespace turnkit::linalg;

namespace {

// Fraction-free Gaussian elimination; independent of the Smith code path.
Integer bareiss_det(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      m.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      Integer d = bareiss_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int step = 0; step < 12; ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    u.add_row_multiple(a, b, coef(rng));
  }
  return u;
}

}  // namespace

TEST_CASE("smith_normal_form of diag(2,3) follows determinantal divisors") {
  IntMatrix m{{2, 0}, {0, 3}};
  SmithForm s = smith_normal_form(m);
  CHECK(determinantal_divisor(m, 1) == 1);
  CHECK(determinantal_divisor(m, 2) == 6);
  CHECK(s.D == IntMatrix({{1, 0}, {0, 6}}));
  CHECK(s.U * m * s.V == s.D);
}

TEST_CASE("smith_normal_form trivial inputs") {
  IntMatrix z(2, 3);
  CHECK(smith_normal_form(z).D.is_zero());
  CHECK(smith_normal_form(z).rank == 0);
  CHECK(smith_normal_form(IntMatrix::identity(4)).D == IntMatrix::identity(4));
  CHECK(smith_normal_form(IntMatrix()).rank == 0);
}

TEST_CASE("smith_normal_form random property sweep") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, r, c, trial % 2 ? 9 : 3);
    SmithForm s = smith_normal_form(m);
    REQUIRE(s.U * m * s.V == s.D);
    CHECK(s.D.is_diagonal());
    Integer du = bareiss_det(s.U), dv = bareiss_det(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(s.U * s.U_inverse == IntMatrix::identity(r));
    // d_1 ... d_i equals the i-th determinantal divisor.
    Integer prod = 1;
    for (std::size_t i = 0; i < std::min(r, c); ++i) {
      if (i < s.rank) {
        CHECK(s.D(i, i) > 0);
        if (i > 0) CHECK(mpz_divisible_p(s.D(i, i).get_mpz_t(), s.D(i - 1, i - 1).get_mpz_t()));
        prod *= s.D(i, i);
      } else {
        CHECK(s.D(i, i) == 0);
        prod = 0;
      }
      CHECK(prod == determinantal_divisor(m, i + 1));
    }
  }
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel(IntMatrix{{2, 0}, {0, 3}}) == FgAbGroup::cyclic(6));
  CHECK(cokernel(IntMatrix(2, 2)) == FgAbGroup::integers(2));
  CHECK(cokernel(IntMatrix::identity(3)).is_trivial());
  CHECK(cokernel(IntMatrix{{2, 0}, {0, 4}}).to_string() == "Z/2 ⊕ Z/4");
}

TEST_CASE("cokernel invariant under unimodular changes of basis") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, r, c, 6);
    IntMatrix p = random_unimodular(rng, r), q = random_unimodular(rng, c);
    CHECK(cokernel(p * m * q) == cokernel(m));
  }
}

TEST_CASE("FgAbGroup canonical form") {
  CHECK_THROWS_AS(FgAbGroup(0, {Integer(2), Integer(3)}), std::invalid_argument);
  CHECK_THROWS_AS(FgAbGroup(0, {Integer(1)}), std::invalid_argument);
  std::vector<Integer> orders{2, 3, 0, 1};
  FgAbGroup g = FgAbGroup::from_cyclic_orders(0, orders);
  CHECK(g == FgAbGroup(1, {Integer(6)}));
  CHECK(g.to_string() == "Z ⊕ Z/6");
  CHECK(FgAbGroup::elementary_two(3).to_string() == "(Z/2)^3");
  CHECK(FgAbGroup::elementary_two(3).order() == Integer(8));
  CHECK_FALSE(FgAbGroup::integers().order().has_value());
  CHECK(FgAbGroup::trivial().to_string() == "0");
}

TEST_CASE("AbElement arithmetic reduces torsion coordinates") {
  FgAbGroup g(1, {Integer(4)});
  AbElement x(g, {Integer(3), Integer(7)});
  CHECK(x.coords()[1] == 3);
  AbElement y = x + x;
  CHECK(y.coords()[0] == 6);
  CHECK(y.coords()[1] == 2);
  CHECK((Integer(4) * AbElement::generator(g, 1)).is_zero());
  CHECK((x - x).is_zero());
  CHECK((-x).coords()[1] == 1);
  CHECK_THROWS(AbElement(g, {Integer(1)}));
}

TEST_CASE("kernel_basis and solve_integer") {
  IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  IntMatrix k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  std::vector<Integer> b{Integer(5), Integer(10)};
  auto x = solve_integer(m, b);
  REQUIRE(x);
  CHECK(m * std::span<const Integer>(*x) == IntVector(b));
  std::vector<Integer> bad{Integer(1), Integer(1)};
  CHECK_FALSE(solve_integer(m, bad));
  IntMatrix two{{2}};
  std::vector<Integer> one{Integer(1)};
  CHECK_FALSE(solve_integer(two, one));
}

TEST_CASE("lattice_basis spans the same lattice") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    IntMatrix g = random_matrix(rng, r, c, 5);
    IntMatrix b = lattice_basis(g);
    CHECK(b.cols() == smith_normal_form(g).rank);
    for (std::size_t j = 0; j < c; ++j) {
      IntVector col = g.column(j);
      CHECK(solve_integer(b, col).has_value());
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      IntVector col = b.column(j);
      CHECK(solve_integer(g, col).has_value());
    }
  }
}

TEST_CASE("solve_mod examples") {
  IntMatrix a{{2}};
  std::vector<Integer> b2{Integer(2)}, b1{Integer(1)};
  auto x = solve_mod(a, b2, 4);
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK_FALSE(solve_mod(a, b1, 4));
  IntMatrix id = IntMatrix::identity(3);
  std::vector<Integer> b{Integer(3), Integer(0), Integer(2)};
  CHECK(solve_mod(id, b, 4) == std::optional<IntVector>(IntVector(b)));
  CHECK_THROWS(solve_mod(a, b2, 1));
}

TEST_CASE("solve_mod agrees with exhaustive search") {
  std::mt19937_64 rng(99);
  for (long m : {2L, 4L}) {
    for (int trial = 0; trial < 400; ++trial) {
      std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
      IntMatrix a(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<long>(rng() % m);
      std::vector<Integer> b(r);
      for (auto& v : b) v = static_cast<long>(rng() % m);
      // Enumerate Z/m^c.
      bool exists = false;
      std::vector<long> x(c, 0);
      for (long code = 0; code < [&] { long t = 1; for (std::size_t i = 0; i < c; ++i) t *= m; return t; }(); ++code) {
        long rest = code;
        for (std::size_t j = 0; j < c; ++j) {
          x[j] = rest % m;
          rest /= m;
        }
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) {
          long s = 0;
          for (std::size_t j = 0; j < c; ++j) s += a(i, j).get_si() * x[j];
          ok = ((s - b[i].get_si()) % m + m) % m == 0;
        }
        if (ok) {
          exists = true;
          break;
        }
      }
      auto got = solve_mod(a, b, m);
      REQUIRE(got.has_value() == exists);
      if (got) {
        IntVector ax = a * std::span<const Integer>(*got);
        for (std::size_t i = 0; i < r; ++i) CHECK(mod_floor(ax[i] - b[i], m) == 0);
        for (const auto& v : *got) CHECK((v >= 0 && v < m));
      }
    }
  }
}

TEST_CASE("kernel_mod spans the full kernel") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const long m = 4;
    std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<long>(rng() % m);
    IntMatrix k = kernel_mod(a, m);
    CHECK((a * k).reduced_mod(m).is_zero());
    // Count kernel vectors by brute force and compare with the span size.
    long total = 1;
    for (std::size_t i = 0; i < c; ++i) total *= m;
    long count = 0;
    for (long code = 0; code < total; ++code) {
      std::vector<Integer> x(c);
      long rest = code;
      for (std::size_t j = 0; j < c; ++j) {
        x[j] = rest % m;
        rest /= m;
      }
      bool in_kernel = (a * std::span<const Integer>(x)).size() == r;
      IntVector ax = a * std::span<const Integer>(x);
      for (const auto& v : ax) in_kernel = in_kernel && mod_floor(v, m) == 0;
      if (!in_kernel) continue;
      ++count;
      CHECK(solve_mod(k, x, m).has_value());
    }
    CHECK(count >= 1);
  }
}

TEST_CASE("howell_form pivots divide the modulus") {
  IntMatrix a{{2, 1}, {0, 2}};
  IntMatrix h = howell_form(a, 4);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = 0;
    while (c < h.cols() && h(i, c) == 0) ++c;
    REQUIRE(c < h.cols());
    CHECK(mpz_divisible_p(Integer(4).get_mpz_t(), h(i, c).get_mpz_t()));
  }
  // 2 * (2,1) = (0,2) supplies the second row.
  CHECK(h.rows() == 2);
}
