#pragma once

// The zigzag algebra of a simply-laced tree: idempotents e_i in degree 0,
// one arrow a_{i->j} per oriented edge in degree 1, and loops l_i in degree 2,
// with a_{i->j} a_{j->i} = l_i and every other length-two path zero.
//
// Multiplication is written in path order: x * y means "x, then y", so it is
// nonzero only when target(x) == source(y). Composition of morphisms between
// projectives P_i -> P_j -> P_k is therefore multiply(f, g) for g after f.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cy2/rational.hpp"
#include "cy2/rootlat.hpp"

namespace cy2 {

enum class BasisKind { idempotent, arrow, loop };

struct BasisElement {
  BasisKind kind;
  int source;
  int target;

  int degree() const { return static_cast<int>(kind); }

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

// "e1", "a1>2", "l1" (1-based).
std::string to_string(const BasisElement& b);

class AlgebraElement {
 public:
  using Term = std::pair<BasisElement, Rational>;

  AlgebraElement() = default;
  AlgebraElement(BasisElement b, Rational c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of b (zero if absent).
  Rational coefficient(const BasisElement& b) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void add(const BasisElement& b, const Rational& c);
  std::vector<Term> terms_;  // sorted by basis element, no zero coefficients
};

std::string to_string(const AlgebraElement& x);

class ZigzagAlgebra {
 public:
  explicit ZigzagAlgebra(QuiverGraph quiver);

  const QuiverGraph& quiver() const { return quiver_; }
  int vertex_count() const { return quiver_.vertex_count(); }

  // The unique basis element of e_i A e_j in the given degree, if any.
  std::optional<BasisElement> basis(int source, int target, int degree) const;

  // Basis of Hom(P_i, P_j), ordered by degree.
  std::vector<BasisElement> hom_basis(int i, int j) const;

  std::vector<BasisElement> all_basis() const;

  // Product of two basis elements in path order; nullopt means zero. The
  // structure constants are all 0 or 1.
  std::optional<BasisElement> multiply(const BasisElement& x, const BasisElement& y) const;

  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

  friend bool operator==(const ZigzagAlgebra& a, const ZigzagAlgebra& b) { return a.quiver_ == b.quiver_; }

 private:
  QuiverGraph quiver_;
};

}  // namespace cy2
