#include "cw_internal.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace turnkit::cw {

using detail::mul_add;
using detail::residue;

long ring_modulus(Ring r) {
  switch (r) {
    case Ring::Z: return 0;
    case Ring::Z2: return 2;
    case Ring::Z4: return 4;
  }
  return 0;
}

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::Z: return "Z";
    case Ring::Z2: return "Z/2";
    case Ring::Z4: return "Z/4";
  }
  return "?";
}

namespace detail {

long mul_add(long acc, long a, long b) {
  long prod = 0, out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &out))
    throw std::overflow_error("cochain coefficient overflow");
  return out;
}

Cochain reduce_cochain(Cochain c, long modulus) {
  if (modulus > 0)
    for (long& v : c) v = residue(v, modulus);
  return c;
}

linalg::IntVector to_integers(const Cochain& c) { return linalg::IntVector(c.begin(), c.end()); }

Cochain from_integers(const linalg::IntVector& v) {
  Cochain c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw std::overflow_error("cochain coefficient overflow");
    c[i] = v[i].get_si();
  }
  return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix SparseMatrix::zero(std::size_t rows, std::size_t cols) {
  SparseMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.columns.resize(cols);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& d) {
  SparseMatrix m = zero(d.rows(), d.cols());
  for (std::size_t j = 0; j < d.cols(); ++j)
    for (std::size_t i = 0; i < d.rows(); ++i)
      if (d(i, j) != 0) {
        if (!d(i, j).fits_slong_p()) throw InvalidComplex("boundary entry out of range");
        m.columns[j].emplace_back(i, d(i, j).get_si());
      }
  return m;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix d(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) d(i, j) = v;
  return d;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

Cochain SparseMatrix::apply_transpose(const Cochain& x, long modulus) const {
  if (x.size() != rows) throw InvalidComplex("cochain length does not match the cell count");
  Cochain out(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    long acc = 0;
    for (const auto& [i, v] : columns[j]) acc = residue(mul_add(acc, v, x[i]), modulus);
    out[j] = acc;
  }
  return out;
}

Cochain SparseMatrix::apply(const Cochain& x, long modulus) const {
  if (x.size() != cols) throw InvalidComplex("vector length does not match the column count");
  Cochain out(rows, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    if (x[j] == 0) continue;
    for (const auto& [i, v] : columns[j]) out[i] = residue(mul_add(out[i], v, x[j]), modulus);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CwComplex

namespace {

void validate_shape(const SparseMatrix& m) {
  if (m.columns.size() != m.cols) throw InvalidComplex("sparse matrix column count mismatch");
  for (const auto& col : m.columns) {
    std::set<std::size_t> seen;
    for (const auto& [i, v] : col) {
      if (i >= m.rows) throw InvalidComplex("sparse matrix row index out of range");
      if (v == 0 || !seen.insert(i).second) throw InvalidComplex("sparse matrix entries must be distinct and nonzero");
    }
  }
}

// Column j of a∘b, exact over Z.
bool composite_is_zero(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<long> acc(a.rows, 0);
  for (std::size_t j = 0; j < b.cols; ++j) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [k, v] : b.columns[j])
      for (const auto& [i, w] : a.columns[k]) acc[i] = mul_add(acc[i], w, v);
    if (std::any_of(acc.begin(), acc.end(), [](long x) { return x != 0; })) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<CwComplex> CwComplex::build(std::string name, std::vector<std::size_t> cells,
                                            std::vector<SparseMatrix> boundary, std::map<int, SparseMatrix> sq2) {
  if (cells.empty()) throw InvalidComplex("a complex needs at least one dimension");
  const std::size_t top = cells.size() - 1;
  if (boundary.size() == top) boundary.insert(boundary.begin(), SparseMatrix::zero(0, cells[0]));
  if (boundary.size() != cells.size()) throw InvalidComplex("expected one boundary matrix per positive dimension");
  boundary[0] = SparseMatrix::zero(0, cells[0]);
  for (std::size_t i = 1; i <= top; ++i) {
    validate_shape(boundary[i]);
    if (boundary[i].rows != cells[i - 1] || boundary[i].cols != cells[i]) {
      std::ostringstream msg;
      msg << "boundary " << i << " has shape " << boundary[i].rows << "x" << boundary[i].cols << ", expected "
          << cells[i - 1] << "x" << cells[i];
      throw InvalidComplex(msg.str());
    }
  }
  for (std::size_t i = 2; i <= top; ++i)
    if (!composite_is_zero(boundary[i - 1], boundary[i]))
      throw InvalidComplex("boundary composite d" + std::to_string(i - 1) + " d" + std::to_string(i) + " is nonzero");
  for (auto& [d, m] : sq2) {
    if (d < 0 || static_cast<std::size_t>(d) + 2 > top) throw InvalidComplex("sq2 degree out of range");
    validate_shape(m);
    if (m.rows != cells[d + 2] || m.cols != cells[d]) throw InvalidComplex("sq2 matrix has the wrong shape");
  }
  auto x = std::shared_ptr<CwComplex>(new CwComplex());
  x->name_ = std::move(name);
  x->cells_ = std::move(cells);
  x->boundary_ = std::move(boundary);
  x->sq2_ = std::move(sq2);
  x->reduction_ = detail::reduce(x->cells_, x->boundary_);
  return x;
}

std::shared_ptr<const CwComplex> CwComplex::create(std::string name, std::vector<std::size_t> cells,
                                                   std::vector<SparseMatrix> boundary,
                                                   std::map<int, SparseMatrix> sq2) {
  return build(std::move(name), std::move(cells), std::move(boundary), std::move(sq2));
}

std::size_t CwComplex::cells(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return cells_[dim];
}

const SparseMatrix& CwComplex::boundary(int dim) const {
  if (dim < 0 || dim > dimension()) throw InvalidComplex("dimension out of range");
  return boundary_[dim];
}

long CwComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(cells_[i]);
  return chi;
}

const SparseMatrix* CwComplex::sq2_matrix(int degree) const {
  auto it = sq2_.find(degree);
  return it == sq2_.end() ? nullptr : &it->second;
}

Cochain CwComplex::coboundary(const Cochain& c, int degree, long modulus) const {
  if (degree < 0 || degree > dimension()) throw InvalidComplex("degree out of range");
  if (c.size() != cells(degree)) throw InvalidComplex("cochain length does not match the cell count");
  if (degree == dimension()) return {};
  return boundary_[degree + 1].apply_transpose(c, modulus);
}

bool CwComplex::is_cocycle(const Cochain& c, int degree, long modulus) const {
  const Cochain d = coboundary(c, degree, modulus);
  return std::all_of(d.begin(), d.end(), [](long v) { return v == 0; });
}

// ---------------------------------------------------------------------------
// SimplicialComplex

std::shared_ptr<const SimplicialComplex> SimplicialComplex::from_facets(std::string name,
                                                                       std::vector<std::vector<int>> facets) {
  if (facets.empty()) throw InvalidComplex("simplicial complex needs at least one facet");
  std::set<std::vector<int>> all;
  std::set<std::vector<int>> unique_facets;
  int max_vertex = -1;
  for (auto& f : facets) {
    if (f.empty()) throw InvalidComplex("empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvalidComplex("facet with a repeated vertex");
    if (f.front() < 0) throw InvalidComplex("negative vertex id");
    if (f.size() > 16) throw InvalidComplex("facet dimension above 15");
    max_vertex = std::max(max_vertex, f.back());
    unique_facets.insert(f);
    const unsigned n = static_cast<unsigned>(f.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (unsigned i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(f[i]);
      all.insert(std::move(face));
    }
  }
  auto s = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
  s->name_ = std::move(name);
  s->facets_.assign(unique_facets.begin(), unique_facets.end());
  std::size_t top = 0;
  for (const auto& f : all) top = std::max(top, f.size() - 1);
  s->simplices_.resize(top + 1);
  for (const auto& f : all) s->simplices_[f.size() - 1].push_back(f);
  if (s->simplices_[0].size() != static_cast<std::size_t>(max_vertex) + 1)
    throw InvalidComplex("vertex ids must be exactly 0..n-1");
  for (const auto& level : s->simplices_)
    for (std::size_t i = 0; i < level.size(); ++i) s->index_.emplace(level[i], i);

  std::vector<std::size_t> cells;
  for (const auto& level : s->simplices_) cells.push_back(level.size());
  std::vector<SparseMatrix> boundary(top + 1);
  boundary[0] = SparseMatrix::zero(0, cells[0]);
  for (std::size_t d = 1; d <= top; ++d) {
    boundary[d] = SparseMatrix::zero(cells[d - 1], cells[d]);
    for (std::size_t j = 0; j < cells[d]; ++j) {
      const auto& sigma = s->simplices_[d][j];
      for (std::size_t drop = 0; drop <= d; ++drop) {
        std::vector<int> face;
        face.reserve(d);
        for (std::size_t v = 0; v <= d; ++v)
          if (v != drop) face.push_back(sigma[v]);
        boundary[d].columns[j].emplace_back(s->index_.at(face), drop % 2 == 0 ? 1 : -1);
      }
    }
  }
  auto cw = CwComplex::build(s->name_, std::move(cells), std::move(boundary), {});
  cw->simplicial_ = s.get();
  s->cw_ = cw;
  return s;
}

const std::vector<std::vector<int>>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<std::vector<int>> none;
  if (dim < 0 || dim > dimension()) return none;
  return simplices_[dim];
}

std::optional<std::size_t> SimplicialComplex::index_of(const std::vector<int>& simplex) const {
  auto it = index_.find(simplex);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<const CwComplex> SimplicialComplex::cw() const {
  return std::shared_ptr<const CwComplex>(shared_from_this(), cw_.get());
}

std::shared_ptr<const SimplicialComplex> simplicial_product(const SimplicialComplex& k, const SimplicialComplex& l) {
  const int nl = static_cast<int>(l.vertex_count());
  std::vector<std::vector<int>> facets;
  for (const auto& f : k.facets())
    for (const auto& g : l.facets()) {
      const std::size_t p = f.size() - 1, q = g.size() - 1;
      // Staircases from (0, 0) to (p, q): choose which of the p + q steps move in f.
      std::vector<bool> moves(p + q, false);
      std::fill(moves.begin(), moves.begin() + static_cast<std::ptrdiff_t>(p), true);
      std::sort(moves.begin(), moves.end());
      do {
        std::vector<int> simplex;
        std::size_t i = 0, j = 0;
        simplex.push_back(f[0] * nl + g[0]);
        for (bool step_f : moves) {
          step_f ? ++i : ++j;
          simplex.push_back(f[i] * nl + g[j]);
        }
        facets.push_back(std::move(simplex));
      } while (std::next_permutation(moves.begin(), moves.end()));
    }
  return SimplicialComplex::from_facets(k.name() + " x " + l.name(), std::move(facets));
}

SimplicialMap product_projection(const SimplicialComplex& product, const SimplicialComplex& k,
                                 const SimplicialComplex& l, int factor) {
  if (factor != 0 && factor != 1) throw InvalidComplex("factor must be 0 or 1");
  const int nl = static_cast<int>(l.vertex_count());
  if (product.vertex_count() != k.vertex_count() * l.vertex_count())
    throw InvalidComplex("vertex count does not match a product of the factors");
  SimplicialMap f{&product, factor == 0 ? &k : &l, {}};
  for (int v = 0; v < static_cast<int>(product.vertex_count()); ++v)
    f.vertex_map.push_back(factor == 0 ? v / nl : v % nl);
  return f;
}

Cochain pullback(const SimplicialMap& f, const Cochain& c, int degree, long modulus) {
  if (f.source == nullptr || f.target == nullptr) throw InvalidComplex("simplicial map without complexes");
  if (f.vertex_map.size() != f.source->vertex_count()) throw InvalidComplex("vertex map has the wrong length");
  if (c.size() != f.target->simplices(degree).size()) throw InvalidComplex("cochain length does not match the target");
  const auto& simplices = f.source->simplices(degree);
  Cochain out(simplices.size(), 0);
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    std::vector<int> image;
    for (int v : simplices[s]) image.push_back(f.vertex_map.at(v));
    // Insertion sort while counting transpositions.
    long sign = 1;
    for (std::size_t i = 1; i < image.size(); ++i)
      for (std::size_t j = i; j > 0 && image[j - 1] > image[j]; --j) {
        std::swap(image[j - 1], image[j]);
        sign = -sign;
      }
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) continue;
    auto idx = f.target->index_of(image);
    if (!idx) throw InvalidComplex("vertex map does not define a simplicial map");
    out[s] = residue(sign * c[*idx], modulus);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

using nlohmann::json;

SparseMatrix matrix_from_json(const json& rows, std::size_t expected_rows, std::size_t expected_cols) {
  if (!rows.is_array()) throw InvalidComplex("matrix must be an array of rows");
  if (rows.size() != expected_rows) throw InvalidComplex("matrix has the wrong number of rows");
  SparseMatrix m = SparseMatrix::zero(expected_rows, expected_cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != expected_cols) throw InvalidComplex("matrix row has the wrong length");
    for (std::size_t j = 0; j < expected_cols; ++j) {
      if (!rows[i][j].is_number_integer()) throw InvalidComplex("matrix entries must be integers");
      const long v = rows[i][j].get<long>();
      if (v != 0) m.columns[j].emplace_back(i, v);
    }
  }
  return m;
}

json matrix_to_json(const SparseMatrix& m) {
  json rows = json::array();
  std::vector<std::vector<long>> dense(m.rows, std::vector<long>(m.cols, 0));
  for (std::size_t j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.columns[j]) dense[i][j] = v;
  for (auto& r : dense) rows.push_back(std::move(r));
  return rows;
}

int parse_degree_key(const std::string& key) {
  std::size_t used = 0;
  int d = 0;
  try {
    d = std::stoi(key, &used);
  } catch (const std::exception&) {
    throw InvalidComplex("matrix key '" + key + "' is not an integer");
  }
  if (used != key.size()) throw InvalidComplex("matrix key '" + key + "' is not an integer");
  return d;
}

}  // namespace

std::shared_ptr<const CwComplex> parse_complex(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidComplex(std::string("malformed complex record: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidComplex("complex record must be an object");
  if (doc.contains("format") && doc["format"] != "turnkit-complex") throw InvalidComplex("unknown record format");
  if (doc.contains("version") && doc["version"] != 1) throw InvalidComplex("unsupported record version");
  const std::string name = doc.value("name", std::string("complex"));
  try {
    if (doc.contains("simplices")) {
      auto facets = doc["simplices"].get<std::vector<std::vector<int>>>();
      return SimplicialComplex::from_facets(name, std::move(facets))->cw();
    }
    if (!doc.contains("cells")) throw InvalidComplex("record needs 'cells' or 'simplices'");
    auto cells = doc["cells"].get<std::vector<std::size_t>>();
    if (cells.empty()) throw InvalidComplex("'cells' must be nonempty");
    std::vector<SparseMatrix> boundary(cells.size());
    for (std::size_t i = 1; i < cells.size(); ++i) boundary[i] = SparseMatrix::zero(cells[i - 1], cells[i]);
    if (doc.contains("boundary")) {
      for (const auto& [key, rows] : doc["boundary"].items()) {
        const int i = parse_degree_key(key);
        if (i < 1 || static_cast<std::size_t>(i) >= cells.size()) throw InvalidComplex("boundary degree out of range");
        boundary[i] = matrix_from_json(rows, cells[i - 1], cells[i]);
      }
    }
    std::map<int, SparseMatrix> sq2;
    if (doc.contains("sq2")) {
      for (const auto& [key, rows] : doc["sq2"].items()) {
        const int d = parse_degree_key(key);
        if (d < 0 || static_cast<std::size_t>(d) + 2 >= cells.size()) throw InvalidComplex("sq2 degree out of range");
        sq2.emplace(d, matrix_from_json(rows, cells[d + 2], cells[d]));
      }
    }
    return CwComplex::create(name, std::move(cells), std::move(boundary), std::move(sq2));
  } catch (const json::exception& e) {
    throw InvalidComplex(std::string("malformed complex record: ") + e.what());
  }
}

std::shared_ptr<const CwComplex> load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidComplex("cannot read complex file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

std::string complex_to_json(const CwComplex& x) {
  json doc;
  doc["format"] = "turnkit-complex";
  doc["version"] = 1;
  doc["name"] = x.name();
  if (const SimplicialComplex* s = x.simplicial()) {
    doc["simplices"] = s->facets();
    return doc.dump();
  }
  doc["cells"] = x.cell_counts();
  json boundary = json::object();
  for (int i = 1; i <= x.dimension(); ++i)
    if (x.boundary(i).nonzeros() > 0) boundary[std::to_string(i)] = matrix_to_json(x.boundary(i));
  doc["boundary"] = boundary;
  json sq2 = json::object();
  for (int d = 0; d + 2 <= x.dimension(); ++d)
    if (const SparseMatrix* m = x.sq2_matrix(d)) sq2[std::to_string(d)] = matrix_to_json(*m);
  if (!sq2.empty()) doc["sq2"] = sq2;
  return doc.dump();
}

}  // namespace turnkit::cw
