#pragma once

// Root lattice and Weyl group combinatorics of a simply-laced quiver.
//
// Vertices are 0-based throughout the library; text formats (quiver files,
// braid words, JSON) use 1-based vertex labels.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cy2 {

class QuiverGraph {
 public:
  // Throws ConfigError on loops, repeated edges or out-of-range vertices.
  QuiverGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

  // Text format: first non-comment token is the vertex count, followed by
  // one edge "i j" per line with 1-based vertices. '#' starts a comment.
  static QuiverGraph parse(std::string_view text);
  static QuiverGraph load(const std::string& path);

  // Standard Dynkin diagrams: "A<n>", "D<n>" (n >= 4), "E6", "E7", "E8".
  static QuiverGraph of_type(std::string_view name);

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int i, int j) const { return adjacency_[index(i, j)]; }
  const std::vector<int>& neighbours(int v) const { return neighbours_[v]; }

  // Symmetric Cartan matrix entry: 2 on the diagonal, -1 on edges.
  int cartan(int i, int j) const;

  // True iff the Cartan matrix is positive definite (ADE diagrams).
  bool is_finite_type() const;

  friend bool operator==(const QuiverGraph& a, const QuiverGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * vertex_count_ + j; }

  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<bool> adjacency_;
  std::vector<std::vector<int>> neighbours_;
};

// Integer vector in the basis of simple roots.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::vector<int> coords) : coords_(std::move(coords)) {}
  static RootVector zero(int rank) { return RootVector(std::vector<int>(rank, 0)); }
  static RootVector simple(int rank, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[i]; }
  int& operator[](int i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  int height() const;
  bool is_nonnegative() const;
  bool is_zero() const;

  RootVector operator-() const;
  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(int s, RootVector a);

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

 private:
  std::vector<int> coords_;
};

// "a1+a2+a3" style, 1-based.
std::string to_string(const RootVector& w);

// Throws PreconditionError on length mismatch with each other or the quiver.
int cartan_pairing(const QuiverGraph& q, const RootVector& a, const RootVector& b);

RootVector reflect(const QuiverGraph& q, const RootVector& w, int i);

bool is_root(const QuiverGraph& q, const RootVector& w);
bool is_positive_root(const QuiverGraph& q, const RootVector& w);

// Sorted by height, then a1 before a2 before ... Throws ConfigError for quivers
// that are not of finite type.
std::vector<RootVector> positive_roots(const QuiverGraph& q);

// w = s_{v_n} ... s_{v_1} (alpha_base). letters = (v_1, ..., v_n), so
// letters.front() is the first reflection applied to the base root.
struct WeylWord {
  int base = 0;
  std::vector<int> letters;

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend auto operator<=>(const WeylWord&, const WeylWord&) = default;
};

RootVector evaluate(const QuiverGraph& q, const WeylWord& word);

// Greedy height descent with the lowest-index tie break. Throws
// PreconditionError if w is not a positive root.
WeylWord minimal_word(const QuiverGraph& q, const RootVector& w);

// Every minimal word for w (all height-descent paths), sorted.
std::vector<WeylWord> all_minimal_words(const QuiverGraph& q, const RootVector& w);

// R_i = s_{v_n} ... s_{v_{i+1}} (v_i) for i = 0..n, with v_0 = base.
std::vector<RootVector> root_sequence(const QuiverGraph& q, const WeylWord& word);

}  // namespace cy2
