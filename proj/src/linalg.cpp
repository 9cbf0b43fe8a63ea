#include "turnkit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace turnkit::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVector> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(src, j);
    if (s != 0) (*this)(dst, j) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, src);
    if (s != 0) (*this)(i, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("hconcat: row count mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

IntMatrix IntMatrix::reduced_mod(const Integer& modulus) const {
  IntMatrix m(*this);
  for (auto& x : m.data_) x = mod_floor(x, modulus);
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << (*this)(i, j).get_str();
    }
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Integer& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(l, j) != 0) c(i, j) += x * b(l, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
  return out;
}

Integer mod_floor(const Integer& value, const Integer& modulus) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  if (r < 0) r += abs(modulus);
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SmithWork {
  SmithForm& f;
  std::size_t t;

  void row_swap(std::size_t a, std::size_t b) {
    f.D.swap_rows(a, b);
    f.U.swap_rows(a, b);
    f.U_inverse.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    f.D.swap_cols(a, b);
    f.V.swap_cols(a, b);
  }
  // row[dst] += q * row[src]; the inverse absorbs col[src] -= q * col[dst].
  void row_add(std::size_t dst, std::size_t src, const Integer& q) {
    f.D.add_row_multiple(dst, src, q);
    f.U.add_row_multiple(dst, src, q);
    f.U_inverse.add_col_multiple(src, dst, -q);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer& q) {
    f.D.add_col_multiple(dst, src, q);
    f.V.add_col_multiple(dst, src, q);
  }
  void row_negate(std::size_t i) {
    f.D.negate_row(i);
    f.U.negate_row(i);
    f.U_inverse.negate_col(i);
  }

  // Moves the least nonzero |entry| of the lower-right block to (t, t).
  bool select_pivot() {
    const IntMatrix& d = f.D;
    bool found = false;
    std::size_t pi = 0, pj = 0;
    Integer best;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        const Integer& x = d(i, j);
        if (x == 0) continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
          best = x;
          pi = i;
          pj = j;
          found = true;
          if (best == 1 || best == -1) goto done;
        }
      }
  done:
    if (!found) return false;
    row_swap(t, pi);
    col_swap(t, pj);
    return true;
  }

  // Moves the least nonzero |entry| of row t and column t (beyond t) to (t, t).
  void reselect_cross() {
    const IntMatrix& d = f.D;
    Integer best = d(t, t);
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      if (d(i, t) != 0 && mpz_cmpabs(d(i, t).get_mpz_t(), best.get_mpz_t()) < 0) {
        best = d(i, t);
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < d.cols(); ++j)
      if (d(t, j) != 0 && mpz_cmpabs(d(t, j).get_mpz_t(), best.get_mpz_t()) < 0) {
        best = d(t, j);
        bi = t;
        bj = j;
      }
    row_swap(t, bi);
    col_swap(t, bj);
  }

  void reduce_pivot() {
    IntMatrix& d = f.D;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        row_add(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        col_add(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        reselect_cross();
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) row_negate(t);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()),
              IntMatrix::identity(m.rows()), 0};
  SmithWork w{f, 0};
  const std::size_t n = std::min(m.rows(), m.cols());
  while (w.t < n && w.select_pivot()) {
    w.reduce_pivot();
    ++w.t;
  }
  f.rank = w.t;
  return f;
}

IntVector SmithForm::invariant_factors() const {
  IntVector out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

// ---------------------------------------------------------------------------
// Finitely generated abelian groups

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw std::invalid_argument("invariant factor must be at least 2");
    if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FgAbGroup FgAbGroup::from_cyclic_orders(std::size_t free_rank, std::span<const Integer> orders) {
  std::vector<Integer> diag;
  for (const auto& o : orders) {
    if (o == 0)
      ++free_rank;
    else
      diag.push_back(abs(o));
  }
  if (diag.empty()) return FgAbGroup(free_rank, {});
  SmithForm s = smith_normal_form(IntMatrix::diagonal(diag));
  std::vector<Integer> torsion;
  for (const auto& d : s.invariant_factors())
    if (d > 1) torsion.push_back(d);
  return FgAbGroup(free_rank, std::move(torsion));
}

FgAbGroup FgAbGroup::cyclic(long order) {
  if (order == 0) return integers(1);
  if (order == 1 || order == -1) return trivial();
  return FgAbGroup(0, {Integer(std::labs(order))});
}

FgAbGroup FgAbGroup::elementary_two(std::size_t rank) {
  return FgAbGroup(0, std::vector<Integer>(rank, Integer(2)));
}

std::optional<Integer> FgAbGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

bool FgAbGroup::has_two_torsion() const {
  return std::any_of(torsion_.begin(), torsion_.end(),
                     [](const Integer& d) { return mpz_even_p(d.get_mpz_t()) != 0; });
}

Integer FgAbGroup::coordinate_modulus(std::size_t i) const {
  if (i < free_rank_) return 0;
  return torsion_.at(i - free_rank_);
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.emplace_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    std::string term = "Z/" + torsion_[i].get_str();
    if (j - i > 1) term = "(" + term + ")^" + std::to_string(j - i);
    parts.push_back(term);
    i = j;
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ⊕ ";
    out += parts[i];
  }
  return out;
}

AbElement::AbElement(FgAbGroup parent, IntVector coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_.coordinate_count())
    throw std::invalid_argument("coordinate count does not match the group");
  for (std::size_t i = parent_.free_rank(); i < coords_.size(); ++i)
    coords_[i] = mod_floor(coords_[i], parent_.coordinate_modulus(i));
}

AbElement AbElement::zero(const FgAbGroup& parent) {
  return AbElement(parent, IntVector(parent.coordinate_count()));
}

AbElement AbElement::generator(const FgAbGroup& parent, std::size_t index) {
  IntVector c(parent.coordinate_count());
  c.at(index) = 1;
  return AbElement(parent, std::move(c));
}

bool AbElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

AbElement AbElement::operator+(const AbElement& other) const {
  if (!(parent_ == other.parent_)) throw std::invalid_argument("elements of different groups");
  IntVector c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return AbElement(parent_, std::move(c));
}

AbElement AbElement::operator-(const AbElement& other) const { return *this + (-other); }

AbElement AbElement::operator-() const {
  IntVector c(coords_);
  for (auto& x : c) x = -x;
  return AbElement(parent_, std::move(c));
}

AbElement operator*(const Integer& n, const AbElement& x) {
  IntVector c(x.coords_);
  for (auto& v : c) v *= n;
  return AbElement(x.parent_, std::move(c));
}

std::string AbElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].get_str();
  }
  return out + ")";
}

AbElement AbHomomorphism::apply(const AbElement& x) const {
  if (!(x.parent() == source)) throw std::invalid_argument("element is not in the source group");
  return AbElement(target, matrix * std::span<const Integer>(x.coords()));
}

bool AbHomomorphism::is_zero() const {
  for (std::size_t j = 0; j < source.coordinate_count(); ++j)
    if (!apply(AbElement::generator(source, j)).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Lattices over Z

FgAbGroup cokernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<Integer> torsion;
  for (const auto& d : s.invariant_factors())
    if (d > 1) torsion.push_back(d);
  return FgAbGroup(m.rows() - s.rank, std::move(torsion));
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  IntMatrix k(m.cols(), m.cols() - s.rank);
  for (std::size_t j = s.rank; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - s.rank) = s.V(i, j);
  return k;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  // Column echelon form by unimodular 2x2 column operations.
  IntMatrix g(generators);
  std::size_t cur = 0;
  for (std::size_t r = 0; r < g.rows() && cur < g.cols(); ++r) {
    for (std::size_t c = cur + 1; c < g.cols(); ++c) {
      if (g(r, c) == 0) continue;
      if (g(r, cur) == 0) {
        g.swap_cols(cur, c);
        continue;
      }
      Integer a = g(r, cur), b = g(r, c), d, x, y;
      mpz_gcdext(d.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ad = a / d, bd = b / d;
      // [cur, c] <- [x cur + y c, -bd cur + ad c], determinant x ad + y bd = 1.
      for (std::size_t i = 0; i < g.rows(); ++i) {
        Integer u = g(i, cur), v = g(i, c);
        g(i, cur) = x * u + y * v;
        g(i, c) = ad * v - bd * u;
      }
    }
    if (g(r, cur) != 0) ++cur;
  }
  IntMatrix out(g.rows(), cur);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < cur; ++j) out(i, j) = g(i, j);
  return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Integer> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  SmithForm s = smith_normal_form(m);
  IntVector y = s.U * b;
  IntVector z(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      z[i] = y[i] / s.D(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * std::span<const Integer>(z);
}

// ---------------------------------------------------------------------------
// Modules over Z/N

namespace {

using Wide = __int128;

long gcd_nonneg(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// g = s a + t b with g = gcd(a, b) >= 0.
void ext_gcd(long a, long b, long& g, long& s, long& t) {
  long old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    long q = old_r / r;
    long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

long mulmod(long a, long b, long n) {
  Wide r = static_cast<Wide>(a) * b % n;
  if (r < 0) r += n;
  return static_cast<long>(r);
}

long addmod(long a, long b, long n) {
  Wide r = (static_cast<Wide>(a) + b) % n;
  if (r < 0) r += n;
  return static_cast<long>(r);
}

// A unit u mod n with u a ≡ gcd(a, n) (mod n).
long normalizing_unit(long a, long n) {
  long g = gcd_nonneg(a, n);
  long w = a / g, mprime = n / g;
  long u0 = 0;
  if (mprime > 1) {
    long gg, s, t;
    ext_gcd(w % mprime, mprime, gg, s, t);
    u0 = ((s % mprime) + mprime) % mprime;
  }
  for (long u = u0;; u += mprime) {
    if (gcd_nonneg(u, n) == 1) return u % n;
  }
}

using ModRows = std::vector<std::vector<long>>;

ModRows to_mod_rows(const IntMatrix& m, long n) {
  ModRows rows(m.rows(), std::vector<long>(m.cols()));
  const Integer big(n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = mod_floor(m(i, j), big).get_si();
  return rows;
}

bool row_is_zero(const std::vector<long>& r) {
  return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
}

// Howell form of the row span; rows[i] has pivot at pivots[i].
ModRows howell_rows(ModRows a, std::size_t cols, long n) {
  ModRows h;
  std::vector<std::size_t> pivots;
  // Working set: rows still to be placed.
  for (std::size_t c = 0; c < cols; ++c) {
    // Combine all working rows with nonzero entry in column c into one pivot row.
    std::vector<long> pivot_row;
    for (auto& r : a) {
      if (r[c] == 0) continue;
      if (pivot_row.empty()) {
        pivot_row = r;
        std::fill(r.begin(), r.end(), 0);
        continue;
      }
      long g, s, t;
      ext_gcd(pivot_row[c], r[c], g, s, t);
      long p = pivot_row[c] / g, q = r[c] / g;
      std::vector<long> np(cols), nr(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        np[j] = addmod(mulmod(s, pivot_row[j], n), mulmod(t, r[j], n), n);
        nr[j] = addmod(mulmod(-q, pivot_row[j], n), mulmod(p, r[j], n), n);
      }
      pivot_row = std::move(np);
      r = std::move(nr);
    }
    a.erase(std::remove_if(a.begin(), a.end(), row_is_zero), a.end());
    if (pivot_row.empty() || pivot_row[c] == 0) {
      continue;
    }
    long u = normalizing_unit(pivot_row[c], n);
    for (auto& x : pivot_row) x = mulmod(u, x, n);
    const long p = pivot_row[c];
    // The annihilator multiple keeps the span saturated.
    std::vector<long> sat(cols);
    bool sat_nonzero = false;
    for (std::size_t j = 0; j < cols; ++j) {
      sat[j] = mulmod(n / p, pivot_row[j], n);
      if (sat[j] != 0) sat_nonzero = true;
    }
    if (sat_nonzero) a.push_back(std::move(sat));
    h.push_back(std::move(pivot_row));
    pivots.push_back(c);
  }
  // Reduce entries above each pivot into [0, p).
  for (std::size_t i = 0; i < h.size(); ++i) {
    const std::size_t c = pivots[i];
    const long p = h[i][c];
    for (std::size_t r = 0; r < i; ++r) {
      long q = h[r][c] / p;
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) h[r][j] = addmod(h[r][j], mulmod(-q, h[i][j], n), n);
    }
  }
  return h;
}

// Reduces v by the Howell rows; returns the residue.
std::vector<long> reduce_by(const ModRows& h, std::vector<long> v, long n) {
  for (const auto& row : h) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    const long p = row[c];
    if (v[c] == 0) continue;
    long q = v[c] / p;
    if (q == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = addmod(v[j], mulmod(-q, row[j], n), n);
  }
  return v;
}

void check_modulus(long modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
}

}  // namespace

IntMatrix howell_form(const IntMatrix& m, long modulus) {
  check_modulus(modulus);
  ModRows h = howell_rows(to_mod_rows(m, modulus), m.cols(), modulus);
  IntMatrix out(h.size(), m.cols());
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = h[i][j];
  return out;
}

namespace {

// Howell form of [A^T | I_n]; rows whose first part vanishes span the kernel.
ModRows augmented_howell(const IntMatrix& a, long n) {
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix w(cols, rows + cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) w(j, i) = a(i, j);
    w(j, rows + j) = 1;
  }
  return howell_rows(to_mod_rows(w, n), rows + cols, n);
}

}  // namespace

std::optional<IntVector> solve_mod(const IntMatrix& a, std::span<const Integer> b, long modulus) {
  check_modulus(modulus);
  if (b.size() != a.rows()) throw std::invalid_argument("solve_mod: dimension mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  ModRows h = augmented_howell(a, modulus);
  std::vector<long> v(rows + cols, 0);
  const Integer big(modulus);
  for (std::size_t i = 0; i < rows; ++i) v[i] = mod_floor(b[i], big).get_si();
  v = reduce_by(h, std::move(v), modulus);
  for (std::size_t i = 0; i < rows; ++i)
    if (v[i] != 0) return std::nullopt;
  // Canonical representative: reduce the solution modulo the kernel rows.
  std::vector<long> canon(rows + cols, 0);
  for (std::size_t j = 0; j < cols; ++j) canon[rows + j] = (modulus - v[rows + j]) % modulus;
  canon = reduce_by(h, std::move(canon), modulus);
  IntVector x(cols);
  for (std::size_t j = 0; j < cols; ++j) x[j] = canon[rows + j];
  return x;
}

IntMatrix kernel_mod(const IntMatrix& a, long modulus) {
  check_modulus(modulus);
  const std::size_t rows = a.rows(), cols = a.cols();
  ModRows h = augmented_howell(a, modulus);
  std::vector<IntVector> kernel;
  for (const auto& r : h) {
    bool first_zero = std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(rows),
                                  [](long x) { return x == 0; });
    if (!first_zero) continue;
    IntVector k(cols);
    for (std::size_t j = 0; j < cols; ++j) k[j] = r[rows + j];
    kernel.push_back(std::move(k));
  }
  return IntMatrix::from_columns(cols, kernel);
}

}  // namespace turnkit::linalg
