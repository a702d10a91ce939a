#pragma once

// Twisted complexes over the zigzag algebra: the objects of the 2-CY category.
//
// An object is a formal sum of shifted projectives P_v[s] together with a
// differential. Every entry of the differential (and of any homogeneous
// morphism) lives in a single degree of e_i A e_j, which is at most one
// dimensional, so an entry is stored as a bare rational coefficient and its
// basis element is recovered from the endpoints and the degree.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cy2/linalg.hpp"
#include "cy2/rational.hpp"
#include "cy2/rootlat.hpp"
#include "cy2/zigzag.hpp"

namespace cy2 {

using AlgebraPtr = std::shared_ptr<const ZigzagAlgebra>;

AlgebraPtr make_algebra(QuiverGraph q);

struct Generator {
  int vertex;
  int shift;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Component from generator `col` of the source to generator `row` of the target.
struct MatrixEntry {
  int row;
  int col;
  Rational coeff;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

class TwistedComplex {
 public:
  // Placeholder with no algebra; only assignment and destruction are valid.
  TwistedComplex() = default;

  // The zero object.
  explicit TwistedComplex(AlgebraPtr algebra);

  // Validates entry degrees and that the differential squares to zero.
  // Throws PreconditionError otherwise.
  TwistedComplex(AlgebraPtr algebra, std::vector<Generator> generators, std::vector<MatrixEntry> differential);

  static TwistedComplex projective(AlgebraPtr algebra, int vertex, int shift = 0);

  const ZigzagAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const std::vector<Generator>& generators() const { return generators_; }
  // Sorted row-major, no zero coefficients.
  const std::vector<MatrixEntry>& differential() const { return differential_; }

  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  int min_shift() const;
  int max_shift() const;

  BasisElement entry_basis(const MatrixEntry& e) const;
  AlgebraElement entry(int row, int col) const;

  friend bool operator==(const TwistedComplex& a, const TwistedComplex& b) {
    return *a.algebra_ == *b.algebra_ && a.generators_ == b.generators_ && a.differential_ == b.differential_;
  }

 private:
  struct Unchecked {};
  TwistedComplex(Unchecked, AlgebraPtr algebra, std::vector<Generator> generators,
                 std::vector<MatrixEntry> differential);
  friend TwistedComplex shift(const TwistedComplex&, int);
  friend TwistedComplex direct_sum(const TwistedComplex&, const TwistedComplex&);
  friend TwistedComplex minimize(const TwistedComplex&);

  AlgebraPtr algebra_;
  std::vector<Generator> generators_;
  std::vector<MatrixEntry> differential_;
};

// A homogeneous morphism. Entry (row <- col) has algebra degree
// shift(target[row]) - shift(source[col]) + degree.
struct Morphism {
  TwistedComplex source;
  TwistedComplex target;
  int degree = 0;
  std::vector<MatrixEntry> entries;  // sorted row-major, no zeros
};

Morphism identity(const TwistedComplex& X);

// g o f.
Morphism compose(const Morphism& g, const Morphism& f);

// d(f) = delta_target o f - (-1)^deg f o delta_source.
Morphism differential(const Morphism& f);
bool is_closed(const Morphism& f);

TwistedComplex shift(const TwistedComplex& X, int n);
TwistedComplex direct_sum(const TwistedComplex& X, const TwistedComplex& Y);

// Source generators shifted by +1 come first, then the target's.
// Throws PreconditionError unless f is closed of degree 0.
TwistedComplex cone(const Morphism& f);

// Gaussian elimination of invertible degree-0 entries, first in row-major
// order, until none remain. The result is homotopy equivalent to X.
TwistedComplex minimize(const TwistedComplex& X);

RootVector k_class(const TwistedComplex& X);

// The Hom complex Hom^*(X, Y) with its cohomology.
class HomComplex {
 public:
  HomComplex(const TwistedComplex& X, const TwistedComplex& Y);

  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }
  std::size_t cochain_dim(int k) const;

  int cohomology_dim(int k) const;
  // Nonzero cohomology dimensions only.
  std::map<int, int> cohomology_dims() const;

  // Closed morphisms of degree k representing a basis of H^k.
  std::vector<Morphism> cocycle_basis(int k) const;

  // f must be closed; true iff its class in cohomology vanishes.
  bool is_coboundary(const Morphism& f) const;

  Morphism to_morphism(int k, const linalg::SparseVector& v) const;
  linalg::SparseVector to_vector(const Morphism& f) const;

 private:
  struct Coord {
    int src;  // generator of X
    int tgt;  // generator of Y
  };
  std::vector<linalg::SparseVector> d_columns(int k) const;
  std::size_t d_rank(int k) const;
  int lookup(int src, int tgt, int alg_degree) const;

  TwistedComplex x_;
  TwistedComplex y_;
  int min_degree_ = 0;
  int max_degree_ = -1;
  std::map<int, std::vector<Coord>> coords_;
  std::vector<int> index_;  // (src, tgt, alg degree) -> position in its degree
  std::vector<std::vector<std::pair<int, Rational>>> y_by_col_;  // entries of delta_Y by column
  std::vector<std::vector<std::pair<int, Rational>>> x_by_row_;  // entries of delta_X by row
  mutable std::map<int, std::size_t> rank_cache_;
};

std::map<int, int> hom_dims(const TwistedComplex& X, const TwistedComplex& Y);

// Hom^*(X, X) is one dimensional in degrees 0 and 2 and vanishes elsewhere.
bool is_spherical(const TwistedComplex& X);

struct IsoResult {
  bool isomorphic = false;
  std::size_t searched = 0;  // candidate morphisms tried
  std::optional<Morphism> certificate;
};

// Searches closed degree-0 maps X -> Y (cocycle basis and small integer
// combinations) for one whose cone is contractible.
IsoResult find_isomorphism(const TwistedComplex& X, const TwistedComplex& Y);
inline bool is_isomorphic(const TwistedComplex& X, const TwistedComplex& Y) {
  return find_isomorphism(X, Y).isomorphic;
}

// Is X[k] a direct summand of Y? X must be spherical.
bool is_direct_summand(const TwistedComplex& X, const TwistedComplex& Y, int k);

// Is Y isomorphic to X[k] for some k? Returns that k.
std::optional<int> isomorphic_up_to_shift(const TwistedComplex& X, const TwistedComplex& Y);

}  // namespace cy2
