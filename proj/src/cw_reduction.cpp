#include "cw_internal.hpp"

#include <map>
#include <set>

namespace turnkit::cw {

using detail::mul_add;
using detail::residue;

namespace {

// Coboundary δ^d : C^d -> C^{d+1} with column and row access.
struct Level {
  std::vector<std::map<std::size_t, long>> cols;  // indexed by cells of degree d
  std::vector<std::set<std::size_t>> rows;        // indexed by cells of degree d + 1
};

class Eliminator {
 public:
  Eliminator(const std::vector<std::size_t>& cells, const std::vector<SparseMatrix>& boundary) : cells_(cells) {
    const std::size_t top = cells.size() - 1;
    alive_.resize(cells.size());
    for (std::size_t d = 0; d <= top; ++d) alive_[d].assign(cells[d], true);
    levels_.resize(top);
    for (std::size_t d = 0; d < top; ++d) {
      Level& l = levels_[d];
      l.cols.resize(cells[d]);
      l.rows.resize(cells[d + 1]);
      // δ^d = (∂_{d+1})^T: the column of a d-cell lists the (d+1)-cells having it as a face.
      const SparseMatrix& b = boundary[d + 1];
      for (std::size_t y = 0; y < b.cols; ++y)
        for (const auto& [x, v] : b.columns[y]) {
          l.cols[x][y] = v;
          l.rows[y].insert(x);
        }
    }
  }

  std::shared_ptr<Reduction> run() {
    auto r = std::make_shared<Reduction>();
    for (std::size_t d = 0; d < levels_.size(); ++d) {
      bool progress = true;
      while (progress) {
        progress = false;
        for (std::size_t a = 0; a < cells_[d]; ++a) {
          if (!alive_[d][a]) continue;
          std::optional<std::size_t> best;
          for (const auto& [b, v] : levels_[d].cols[a]) {
            if (v != 1 && v != -1) continue;
            if (!best || levels_[d].rows[b].size() < levels_[d].rows[*best].size()) best = b;
          }
          if (!best) continue;
          r->steps.push_back(eliminate(d, a, *best));
          progress = true;
        }
      }
    }
    finish(*r);
    return r;
  }

 private:
  void set_entry(Level& l, std::size_t x, std::size_t y, long v) {
    if (v == 0) {
      l.cols[x].erase(y);
      l.rows[y].erase(x);
    } else {
      l.cols[x][y] = v;
      l.rows[y].insert(x);
    }
  }

  Reduction::Step eliminate(std::size_t d, std::size_t a, std::size_t b) {
    Level& l = levels_[d];
    Reduction::Step s;
    s.degree = static_cast<int>(d);
    s.a = a;
    s.b = b;
    s.epsilon = l.cols[a].at(b);
    for (const auto& [y, v] : l.cols[a])
      if (y != b) s.alpha.emplace_back(y, v);
    for (std::size_t x : l.rows[b])
      if (x != a) s.beta.emplace_back(x, l.cols[x].at(b));

    // δ' = D - α ε β on the remaining cells.
    for (const auto& [x, bx] : s.beta) {
      const long f = -s.epsilon * bx;
      for (const auto& [y, ay] : s.alpha) {
        auto it = l.cols[x].find(y);
        const long old = it == l.cols[x].end() ? 0 : it->second;
        set_entry(l, x, y, mul_add(old, f, ay));
      }
      set_entry(l, x, b, 0);
    }
    for (const auto& [y, v] : l.cols[a]) {
      (void)v;
      l.rows[y].erase(a);
    }
    l.cols[a].clear();
    alive_[d][a] = false;

    // Row a of δ^{d-1} and column b of δ^{d+1} disappear.
    if (d > 0) {
      Level& below = levels_[d - 1];
      for (std::size_t w : below.rows[a]) below.cols[w].erase(a);
      below.rows[a].clear();
    }
    if (d + 1 < levels_.size()) {
      Level& above = levels_[d + 1];
      for (const auto& [y, v] : above.cols[b]) {
        (void)v;
        above.rows[y].erase(b);
      }
      above.cols[b].clear();
    }
    alive_[d + 1][b] = false;
    return s;
  }

  void finish(Reduction& r) {
    const std::size_t top = cells_.size() - 1;
    r.cells = cells_;
    r.survivors.resize(top + 1);
    std::vector<std::vector<std::size_t>> position(top + 1);
    for (std::size_t d = 0; d <= top; ++d) {
      position[d].assign(cells_[d], 0);
      for (std::size_t x = 0; x < cells_[d]; ++x)
        if (alive_[d][x]) {
          position[d][x] = r.survivors[d].size();
          r.survivors[d].push_back(x);
        }
    }
    r.coboundary.resize(top + 1);
    for (std::size_t d = 0; d < top; ++d) {
      IntMatrix m(r.survivors[d + 1].size(), r.survivors[d].size());
      for (std::size_t j = 0; j < r.survivors[d].size(); ++j)
        for (const auto& [y, v] : levels_[d].cols[r.survivors[d][j]]) m(position[d + 1][y], j) = v;
      r.coboundary[d] = std::move(m);
    }
    r.coboundary[top] = IntMatrix(0, r.survivors[top].size());
  }

  std::vector<std::size_t> cells_;
  std::vector<std::vector<bool>> alive_;
  std::vector<Level> levels_;
};

}  // namespace

namespace detail {

std::shared_ptr<const Reduction> reduce(const std::vector<std::size_t>& cells,
                                        const std::vector<SparseMatrix>& boundary) {
  return Eliminator(cells, boundary).run();
}

}  // namespace detail

Cochain Reduction::project(const Cochain& c, int degree, long modulus) const {
  if (degree < 0 || static_cast<std::size_t>(degree) >= survivors.size()) throw InvalidComplex("degree out of range");
  if (c.size() != cells.at(degree)) throw InvalidComplex("cochain length does not match the cell count");
  Cochain x = c;
  for (const Step& s : steps) {
    if (s.degree == degree) {
      x.at(s.a) = 0;
    } else if (s.degree + 1 == degree) {
      const long xb = x.at(s.b);
      if (xb != 0)
        for (const auto& [y, v] : s.alpha) x[y] = residue(mul_add(x[y], -s.epsilon * v, xb), modulus);
      x[s.b] = 0;
    }
  }
  Cochain out;
  out.reserve(survivors[degree].size());
  for (std::size_t i : survivors[degree]) out.push_back(residue(x[i], modulus));
  return out;
}

Cochain Reduction::lift(const Cochain& c, int degree, long modulus) const {
  if (degree < 0 || static_cast<std::size_t>(degree) >= survivors.size()) throw InvalidComplex("degree out of range");
  const auto& surv = survivors[degree];
  if (c.size() != surv.size()) throw InvalidComplex("reduced cochain has the wrong length");
  Cochain x(cells.at(degree), 0);
  for (std::size_t i = 0; i < surv.size(); ++i) x[surv[i]] = residue(c[i], modulus);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->degree != degree) continue;
    long acc = 0;
    for (const auto& [y, v] : it->beta) acc = residue(mul_add(acc, v, x[y]), modulus);
    x[it->a] = residue(-it->epsilon * acc, modulus);
  }
  return x;
}

}  // namespace turnkit::cw
