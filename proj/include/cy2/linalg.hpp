#pragma once

// Exact sparse linear algebra over the rationals.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cy2/rational.hpp"

namespace cy2::linalg {

// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;

// v + s * w.
SparseVector axpy(const SparseVector& v, const Rational& s, const SparseVector& w);

// Row echelon basis of a growing subspace. Each stored row has leading
// coefficient 1 at its pivot index.
class EchelonBasis {
 public:
  // Reduces v by the stored rows; returns the remainder.
  SparseVector reduce(SparseVector v) const;

  // Adds v if it is independent of the current span.
  bool insert(SparseVector v);

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<int, SparseVector> rows_;
};

std::size_t rank(const std::vector<SparseVector>& vectors);

// columns[j] is the image of the j-th basis vector of the domain. Returns a
// basis of the kernel, as sparse vectors over the domain.
std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns);

}  // namespace cy2::linalg
