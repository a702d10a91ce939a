#include "cy2/homcore.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cy2/error.hpp"

namespace cy2 {

namespace {

void sort_entries(std::vector<MatrixEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
}

// Merges duplicates and drops zeros; expects row-major sorted input.
void canonicalize(std::vector<MatrixEntry>& entries) {
  sort_entries(entries);
  std::vector<MatrixEntry> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().row == e.row && out.back().col == e.col)
      out.back().coeff += e.coeff;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const MatrixEntry& e) { return sgn(e.coeff) == 0; });
  entries = std::move(out);
}

std::optional<BasisElement> component_basis(const ZigzagAlgebra& A, const Generator& from, const Generator& to,
                                            int degree) {
  return A.basis(from.vertex, to.vertex, to.shift - from.shift + degree);
}

// Matrix product of homogeneous components: (left o right)[r, c] = sum_m left[r, m] right[m, c].
// `mid` are the generators the two matrices meet in.
std::vector<MatrixEntry> multiply_matrices(const ZigzagAlgebra& A, const std::vector<Generator>& from,
                                           const std::vector<Generator>& mid, const std::vector<Generator>& to,
                                           const std::vector<MatrixEntry>& left, int left_degree,
                                           const std::vector<MatrixEntry>& right, int right_degree) {
  std::vector<std::vector<const MatrixEntry*>> right_by_row(mid.size());
  for (const auto& e : right) right_by_row[e.row].push_back(&e);
  std::vector<MatrixEntry> out;
  for (const auto& l : left) {
    const auto bl = *component_basis(A, mid[l.col], to[l.row], left_degree);
    for (const MatrixEntry* r : right_by_row[l.col]) {
      const auto br = *component_basis(A, from[r->col], mid[r->row], right_degree);
      if (A.multiply(br, bl)) out.push_back(MatrixEntry{l.row, r->col, l.coeff * r->coeff});
    }
  }
  canonicalize(out);
  return out;
}

}  // namespace

AlgebraPtr make_algebra(QuiverGraph q) { return std::make_shared<const ZigzagAlgebra>(std::move(q)); }

TwistedComplex::TwistedComplex(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

TwistedComplex::TwistedComplex(Unchecked, AlgebraPtr algebra, std::vector<Generator> generators,
                               std::vector<MatrixEntry> differential)
    : algebra_(std::move(algebra)), generators_(std::move(generators)), differential_(std::move(differential)) {
  canonicalize(differential_);
}

TwistedComplex::TwistedComplex(AlgebraPtr algebra, std::vector<Generator> generators,
                               std::vector<MatrixEntry> differential)
    : TwistedComplex(Unchecked{}, std::move(algebra), std::move(generators), std::move(differential)) {
  const int n = static_cast<int>(generators_.size());
  for (const auto& g : generators_)
    if (g.vertex < 0 || g.vertex >= algebra_->vertex_count())
      throw PreconditionError("generator at missing vertex " + std::to_string(g.vertex + 1));
  for (const auto& e : differential_) {
    if (e.row < 0 || e.col < 0 || e.row >= n || e.col >= n)
      throw PreconditionError("differential entry outside the generator range");
    if (!component_basis(*algebra_, generators_[e.col], generators_[e.row], 1))
      throw PreconditionError("differential entry (" + std::to_string(e.row) + "<-" + std::to_string(e.col) +
                              ") has no basis element in its degree");
  }
  auto square = multiply_matrices(*algebra_, generators_, generators_, generators_, differential_, 1,
                                  differential_, 1);
  if (!square.empty()) throw PreconditionError("differential does not square to zero");
}

TwistedComplex TwistedComplex::projective(AlgebraPtr algebra, int vertex, int shift) {
  if (vertex < 0 || vertex >= algebra->vertex_count())
    throw PreconditionError("no vertex " + std::to_string(vertex + 1));
  return TwistedComplex(Unchecked{}, std::move(algebra), {Generator{vertex, shift}}, {});
}

int TwistedComplex::min_shift() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& g : generators_) m = std::min(m, g.shift);
  return m;
}

int TwistedComplex::max_shift() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& g : generators_) m = std::max(m, g.shift);
  return m;
}

BasisElement TwistedComplex::entry_basis(const MatrixEntry& e) const {
  return *component_basis(*algebra_, generators_[e.col], generators_[e.row], 1);
}

AlgebraElement TwistedComplex::entry(int row, int col) const {
  for (const auto& e : differential_)
    if (e.row == row && e.col == col) return AlgebraElement(entry_basis(e), e.coeff);
  return {};
}

Morphism identity(const TwistedComplex& X) {
  Morphism id{X, X, 0, {}};
  for (int i = 0; i < static_cast<int>(X.size()); ++i) id.entries.push_back(MatrixEntry{i, i, 1});
  return id;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target == g.source)) throw PreconditionError("compose: morphisms are not composable");
  Morphism out{f.source, g.target, f.degree + g.degree, {}};
  out.entries = multiply_matrices(f.source.algebra(), f.source.generators(), f.target.generators(),
                                  g.target.generators(), g.entries, g.degree, f.entries, f.degree);
  return out;
}

Morphism differential(const Morphism& f) {
  const auto& A = f.source.algebra();
  auto left = multiply_matrices(A, f.source.generators(), f.target.generators(), f.target.generators(),
                                f.target.differential(), 1, f.entries, f.degree);
  auto right = multiply_matrices(A, f.source.generators(), f.source.generators(), f.target.generators(),
                                 f.entries, f.degree, f.source.differential(), 1);
  const Rational sign = (f.degree % 2 == 0) ? -1 : 1;
  for (auto& e : right) {
    e.coeff *= sign;
    left.push_back(std::move(e));
  }
  canonicalize(left);
  return Morphism{f.source, f.target, f.degree + 1, std::move(left)};
}

bool is_closed(const Morphism& f) { return differential(f).entries.empty(); }

TwistedComplex shift(const TwistedComplex& X, int n) {
  auto gens = X.generators_;
  for (auto& g : gens) g.shift += n;
  auto diff = X.differential_;
  if (n % 2 != 0)
    for (auto& e : diff) e.coeff = -e.coeff;
  return TwistedComplex(TwistedComplex::Unchecked{}, X.algebra_, std::move(gens), std::move(diff));
}

TwistedComplex direct_sum(const TwistedComplex& X, const TwistedComplex& Y) {
  auto gens = X.generators_;
  gens.insert(gens.end(), Y.generators_.begin(), Y.generators_.end());
  auto diff = X.differential_;
  const int off = static_cast<int>(X.size());
  for (const auto& e : Y.differential_) diff.push_back(MatrixEntry{e.row + off, e.col + off, e.coeff});
  return TwistedComplex(TwistedComplex::Unchecked{}, X.algebra_, std::move(gens), std::move(diff));
}

TwistedComplex cone(const Morphism& f) {
  if (f.degree != 0) throw PreconditionError("cone: morphism must have degree 0");
  if (!is_closed(f)) throw PreconditionError("cone: morphism is not closed");
  const auto& X = f.source;
  const auto& Y = f.target;
  std::vector<Generator> gens;
  for (auto g : X.generators()) gens.push_back(Generator{g.vertex, g.shift + 1});
  gens.insert(gens.end(), Y.generators().begin(), Y.generators().end());
  const int off = static_cast<int>(X.size());
  std::vector<MatrixEntry> diff;
  for (const auto& e : X.differential()) diff.push_back(MatrixEntry{e.row, e.col, -e.coeff});
  for (const auto& e : Y.differential()) diff.push_back(MatrixEntry{e.row + off, e.col + off, e.coeff});
  for (const auto& e : f.entries) diff.push_back(MatrixEntry{e.row + off, e.col, e.coeff});
  return TwistedComplex(X.algebra_ptr(), std::move(gens), std::move(diff));
}

TwistedComplex minimize(const TwistedComplex& X) {
  const auto& A = X.algebra();
  const auto& gens = X.generators_;
  const int n = static_cast<int>(gens.size());
  std::vector<std::map<int, Rational>> rows(n), cols(n);
  for (const auto& e : X.differential_) {
    rows[e.row][e.col] = e.coeff;
    cols[e.col][e.row] = e.coeff;
  }
  std::vector<bool> alive(n, true);
  auto basis_of = [&](int row, int col) { return *component_basis(A, gens[col], gens[row], 1); };

  for (;;) {
    int h = -1, g = -1;
    for (int r = 0; r < n && h < 0; ++r) {
      if (!alive[r]) continue;
      for (const auto& [c, coeff] : rows[r])
        if (gens[c].vertex == gens[r].vertex && gens[r].shift == gens[c].shift - 1) {
          h = r;
          g = c;
          break;
        }
    }
    if (h < 0) break;

    const Rational inv = 1 / rows[h].at(g);
    // delta'[x, y] = delta[x, y] - delta[x, g] inv delta[h, y]
    std::vector<std::pair<int, Rational>> into;  // x <- g
    std::vector<std::pair<int, Rational>> from;  // h <- y
    for (const auto& [x, c] : cols[g])
      if (x != h && x != g) into.emplace_back(x, c);
    for (const auto& [y, c] : rows[h])
      if (y != h && y != g) from.emplace_back(y, c);
    for (const auto& [x, cx] : into) {
      const auto bx = basis_of(x, g);
      for (const auto& [y, cy] : from) {
        if (!A.multiply(basis_of(h, y), bx)) continue;
        Rational& slot = rows[x][y];
        slot -= cx * inv * cy;
        if (sgn(slot) == 0) {
          rows[x].erase(y);
          cols[y].erase(x);
        } else {
          cols[y][x] = slot;
        }
      }
    }
    for (int k : {g, h}) {
      alive[k] = false;
      for (const auto& [c, coeff] : rows[k]) cols[c].erase(k);
      for (const auto& [r, coeff] : cols[k]) rows[r].erase(k);
      rows[k].clear();
      cols[k].clear();
    }
  }

  std::vector<int> renumber(n, -1);
  std::vector<Generator> out_gens;
  for (int i = 0; i < n; ++i)
    if (alive[i]) {
      renumber[i] = static_cast<int>(out_gens.size());
      out_gens.push_back(gens[i]);
    }
  std::vector<MatrixEntry> out_diff;
  for (int r = 0; r < n; ++r)
    for (const auto& [c, coeff] : rows[r]) out_diff.push_back(MatrixEntry{renumber[r], renumber[c], coeff});
  return TwistedComplex(TwistedComplex::Unchecked{}, X.algebra_, std::move(out_gens), std::move(out_diff));
}

RootVector k_class(const TwistedComplex& X) {
  RootVector w = RootVector::zero(X.algebra().vertex_count());
  for (const auto& g : X.generators()) w[g.vertex] += (g.shift % 2 == 0) ? 1 : -1;
  return w;
}

HomComplex::HomComplex(const TwistedComplex& X, const TwistedComplex& Y) : x_(X), y_(Y) {
  if (!(X.algebra() == Y.algebra())) throw PreconditionError("Hom between objects over different quivers");
  const auto& A = X.algebra();
  const auto& xs = X.generators();
  const auto& ys = Y.generators();
  index_.assign(xs.size() * ys.size() * 3, -1);
  bool any = false;
  for (int g = 0; g < static_cast<int>(xs.size()); ++g)
    for (int h = 0; h < static_cast<int>(ys.size()); ++h)
      for (int d = 0; d <= 2; ++d) {
        if (!A.basis(xs[g].vertex, ys[h].vertex, d)) continue;
        const int k = d - ys[h].shift + xs[g].shift;
        auto& list = coords_[k];
        index_[(static_cast<std::size_t>(g) * ys.size() + h) * 3 + d] = static_cast<int>(list.size());
        list.push_back(Coord{g, h});
        if (!any || k < min_degree_) min_degree_ = k;
        if (!any || k > max_degree_) max_degree_ = k;
        any = true;
      }
  y_by_col_.resize(ys.size());
  for (const auto& e : Y.differential()) y_by_col_[e.col].emplace_back(e.row, e.coeff);
  x_by_row_.resize(xs.size());
  for (const auto& e : X.differential()) x_by_row_[e.row].emplace_back(e.col, e.coeff);
}

int HomComplex::lookup(int src, int tgt, int alg_degree) const {
  if (alg_degree < 0 || alg_degree > 2) return -1;
  return index_[(static_cast<std::size_t>(src) * y_.size() + tgt) * 3 + alg_degree];
}

std::size_t HomComplex::cochain_dim(int k) const {
  auto it = coords_.find(k);
  return it == coords_.end() ? 0 : it->second.size();
}

std::vector<linalg::SparseVector> HomComplex::d_columns(int k) const {
  std::vector<linalg::SparseVector> cols;
  auto it = coords_.find(k);
  if (it == coords_.end()) return cols;
  const auto& A = x_.algebra();
  const auto& xs = x_.generators();
  const auto& ys = y_.generators();
  const Rational sign = (k % 2 == 0) ? -1 : 1;
  std::map<int, Rational> acc;
  for (const auto& [g, h] : it->second) {
    acc.clear();
    const int d = ys[h].shift - xs[g].shift + k;
    const BasisElement b = *A.basis(xs[g].vertex, ys[h].vertex, d);
    // delta_Y o f
    for (const auto& [h2, c] : y_by_col_[h]) {
      const BasisElement by = *A.basis(ys[h].vertex, ys[h2].vertex, ys[h2].shift - ys[h].shift + 1);
      if (auto p = A.multiply(b, by)) acc[lookup(g, h2, p->degree())] += c;
    }
    // -(-1)^k f o delta_X
    for (const auto& [g0, c] : x_by_row_[g]) {
      const BasisElement bx = *A.basis(xs[g0].vertex, xs[g].vertex, xs[g].shift - xs[g0].shift + 1);
      if (auto p = A.multiply(bx, b)) acc[lookup(g0, h, p->degree())] += sign * c;
    }
    linalg::SparseVector col;
    for (auto& [idx, c] : acc)
      if (sgn(c) != 0) col.emplace_back(idx, c);
    cols.push_back(std::move(col));
  }
  return cols;
}

std::size_t HomComplex::d_rank(int k) const {
  if (auto it = rank_cache_.find(k); it != rank_cache_.end()) return it->second;
  const std::size_t r = linalg::rank(d_columns(k));
  rank_cache_[k] = r;
  return r;
}

int HomComplex::cohomology_dim(int k) const {
  const std::size_t dim = cochain_dim(k);
  if (dim == 0) return 0;
  return static_cast<int>(dim - d_rank(k) - d_rank(k - 1));
}

std::map<int, int> HomComplex::cohomology_dims() const {
  std::map<int, int> out;
  for (const auto& [k, list] : coords_)
    if (int d = cohomology_dim(k); d > 0) out[k] = d;
  return out;
}

Morphism HomComplex::to_morphism(int k, const linalg::SparseVector& v) const {
  Morphism f{x_, y_, k, {}};
  const auto it = coords_.find(k);
  if (it == coords_.end()) {
    if (!v.empty()) throw PreconditionError("to_morphism: no cochains in degree " + std::to_string(k));
    return f;
  }
  const auto& list = it->second;
  for (const auto& [idx, c] : v) f.entries.push_back(MatrixEntry{list[idx].tgt, list[idx].src, c});
  canonicalize(f.entries);
  return f;
}

linalg::SparseVector HomComplex::to_vector(const Morphism& f) const {
  std::map<int, Rational> acc;
  for (const auto& e : f.entries) {
    const int d = y_.generators()[e.row].shift - x_.generators()[e.col].shift + f.degree;
    const int idx = lookup(e.col, e.row, d);
    if (idx < 0) throw PreconditionError("morphism entry outside the Hom complex");
    acc[idx] += e.coeff;
  }
  linalg::SparseVector v;
  for (auto& [idx, c] : acc)
    if (sgn(c) != 0) v.emplace_back(idx, c);
  return v;
}

std::vector<Morphism> HomComplex::cocycle_basis(int k) const {
  std::vector<Morphism> out;
  if (cochain_dim(k) == 0) return out;
  linalg::EchelonBasis boundaries;
  for (auto& col : d_columns(k - 1)) boundaries.insert(std::move(col));
  for (auto& z : linalg::kernel(d_columns(k)))
    if (boundaries.insert(z)) out.push_back(to_morphism(k, z));
  return out;
}

bool HomComplex::is_coboundary(const Morphism& f) const {
  linalg::EchelonBasis boundaries;
  for (auto& col : d_columns(f.degree - 1)) boundaries.insert(std::move(col));
  return boundaries.contains(to_vector(f));
}

std::map<int, int> hom_dims(const TwistedComplex& X, const TwistedComplex& Y) {
  return HomComplex(X, Y).cohomology_dims();
}

bool is_spherical(const TwistedComplex& X) {
  return hom_dims(X, X) == std::map<int, int>{{0, 1}, {2, 1}};
}

IsoResult find_isomorphism(const TwistedComplex& X, const TwistedComplex& Y) {
  IsoResult result;
  if (X.is_zero() && Y.is_zero()) {
    result.isomorphic = true;
    result.certificate = identity(X);
    return result;
  }
  if (k_class(X) != k_class(Y)) return result;
  HomComplex H(X, Y);
  const auto basis = H.cocycle_basis(0);
  if (basis.empty()) return result;

  auto try_candidate = [&](const std::vector<int>& coeffs) {
    linalg::SparseVector v;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coeffs[i] != 0) v = linalg::axpy(v, coeffs[i], H.to_vector(basis[i]));
    if (v.empty()) return false;
    ++result.searched;
    Morphism f = H.to_morphism(0, v);
    if (minimize(cone(f)).is_zero()) {
      result.isomorphic = true;
      result.certificate = std::move(f);
      return true;
    }
    return false;
  };

  const std::size_t d = basis.size();
  // Basis vectors first, then all combinations with coefficients in [-2, 2]
  // for small Hom spaces.
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<int> c(d, 0);
    c[i] = 1;
    if (try_candidate(c)) return result;
  }
  if (d < 2) return result;
  const std::size_t limit = d <= 3 ? d : 2;
  std::vector<int> c(d, 0);
  // Odometer over [-2, 2]^limit on the first `limit` coordinates.
  std::vector<int> digits(limit, -2);
  for (;;) {
    int nonzero = 0;
    for (std::size_t i = 0; i < limit; ++i) {
      c[i] = digits[i];
      nonzero += digits[i] != 0;
    }
    if (nonzero >= 2 && try_candidate(c)) return result;
    std::size_t pos = 0;
    while (pos < limit && digits[pos] == 2) digits[pos++] = -2;
    if (pos == limit) break;
    ++digits[pos];
  }
  return result;
}

bool is_direct_summand(const TwistedComplex& X, const TwistedComplex& Y, int k) {
  const TwistedComplex Xk = shift(X, k);
  const auto ins = HomComplex(Xk, Y).cocycle_basis(0);
  if (ins.empty()) return false;
  const auto outs = HomComplex(Y, Xk).cocycle_basis(0);
  if (outs.empty()) return false;
  const HomComplex End(Xk, Xk);
  // End^0 of a spherical object is the ground field, so X[k] splits off iff
  // some composite X[k] -> Y -> X[k] is not null-homotopic.
  for (const auto& i : ins)
    for (const auto& p : outs)
      if (!End.is_coboundary(compose(p, i))) return true;
  return false;
}

std::optional<int> isomorphic_up_to_shift(const TwistedComplex& X, const TwistedComplex& Y) {
  if (X.is_zero() || Y.is_zero()) {
    if (X.is_zero() && Y.is_zero()) return 0;
    return std::nullopt;
  }
  const RootVector cx = k_class(X), cy = k_class(Y);
  if (cx != cy && cx != -cy) return std::nullopt;
  // Hom^0(X[k], Y) = Hom^{-k}(X, Y).
  for (const auto& [deg, dim] : hom_dims(X, Y)) {
    const int k = -deg;
    if ((k % 2 == 0) != (cx == cy)) continue;
    if (is_isomorphic(shift(X, k), Y)) return k;
  }
  return std::nullopt;
}

}  // namespace cy2
