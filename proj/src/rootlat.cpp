#include "cy2/rootlat.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "cy2/error.hpp"
#include "cy2/rational.hpp"

namespace cy2 {

QuiverGraph::QuiverGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count <= 0) throw ConfigError("quiver must have at least one vertex");
  adjacency_.assign(static_cast<std::size_t>(vertex_count) * vertex_count, false);
  neighbours_.resize(vertex_count);
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= vertex_count || j >= vertex_count)
      throw ConfigError("edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") refers to a missing vertex");
    if (i == j) throw ConfigError("loop at vertex " + std::to_string(i + 1));
    if (adjacency_[index(i, j)])
      throw ConfigError("repeated edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    adjacency_[index(i, j)] = adjacency_[index(j, i)] = true;
    neighbours_[i].push_back(j);
    neighbours_[j].push_back(i);
    edges_.emplace_back(std::min(i, j), std::max(i, j));
  }
  for (auto& n : neighbours_) std::sort(n.begin(), n.end());
  std::sort(edges_.begin(), edges_.end());
}

QuiverGraph QuiverGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<long> numbers;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ConfigError("quiver file: unexpected token '" + tok + "'");
      numbers.push_back(value);
    }
  }
  if (numbers.empty()) throw ConfigError("quiver file: missing vertex count");
  if (numbers.size() % 2 != 1) throw ConfigError("quiver file: dangling edge endpoint");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 1; k < numbers.size(); k += 2)
    edges.emplace_back(static_cast<int>(numbers[k] - 1), static_cast<int>(numbers[k + 1] - 1));
  return QuiverGraph(static_cast<int>(numbers[0]), std::move(edges));
}

QuiverGraph QuiverGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open quiver file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

QuiverGraph QuiverGraph::of_type(std::string_view name) {
  auto fail = [&] { return ConfigError("unsupported quiver type '" + std::string(name) + "'"); };
  if (name.size() < 2) throw fail();
  int n = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') throw fail();
    n = n * 10 + (c - '0');
    if (n > 64) throw fail();
  }
  std::vector<std::pair<int, int>> edges;
  switch (name[0]) {
    case 'A':
      if (n < 1) throw fail();
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      // Chain 0 - 1 - ... - (n-2) with the fork n-1 attached to n-3.
      if (n < 4) throw fail();
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      // Chain 0 - ... - (n-2) with the branch n-1 attached to vertex 2.
      if (n < 6 || n > 8) throw fail();
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, n - 1);
      break;
    default:
      throw fail();
  }
  return QuiverGraph(n, std::move(edges));
}

int QuiverGraph::cartan(int i, int j) const {
  if (i == j) return 2;
  return adjacent(i, j) ? -1 : 0;
}

bool QuiverGraph::is_finite_type() const {
  // Positive definite iff every pivot of symmetric elimination without
  // pivoting is positive.
  const int n = vertex_count_;
  std::vector<Rational> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[index(i, j)] = cartan(i, j);
  for (int k = 0; k < n; ++k) {
    const Rational pivot = m[index(k, k)];
    if (sgn(pivot) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      if (sgn(m[index(i, k)]) == 0) continue;
      const Rational factor = m[index(i, k)] / pivot;
      for (int j = k; j < n; ++j) m[index(i, j)] -= factor * m[index(k, j)];
    }
  }
  return true;
}

RootVector RootVector::simple(int rank, int i) {
  RootVector v = zero(rank);
  v[i] = 1;
  return v;
}

int RootVector::height() const {
  int h = 0;
  for (int c : coords_) h += c;
  return h;
}

bool RootVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

bool RootVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

RootVector RootVector::operator-() const {
  RootVector out = *this;
  for (int& c : out.coords_) c = -c;
  return out;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  if (o.rank() != rank()) throw PreconditionError("root vector length mismatch");
  for (int i = 0; i < rank(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  if (o.rank() != rank()) throw PreconditionError("root vector length mismatch");
  for (int i = 0; i < rank(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RootVector operator*(int s, RootVector a) {
  for (int& c : a.coords_) c *= s;
  return a;
}

std::string to_string(const RootVector& w) {
  std::string out;
  for (int i = 0; i < w.rank(); ++i) {
    const int c = w[i];
    if (c == 0) continue;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

int cartan_pairing(const QuiverGraph& q, const RootVector& a, const RootVector& b) {
  const int n = q.vertex_count();
  if (a.rank() != n || b.rank() != n)
    throw PreconditionError("cartan_pairing: vector length does not match the quiver");
  int sum = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    sum += 2 * a[i] * b[i];
    for (int j : q.neighbours(i)) sum -= a[i] * b[j];
  }
  return sum;
}

RootVector reflect(const QuiverGraph& q, const RootVector& w, int i) {
  RootVector out = w;
  out[i] -= cartan_pairing(q, w, RootVector::simple(q.vertex_count(), i));
  return out;
}

bool is_root(const QuiverGraph& q, const RootVector& w) {
  return w.rank() == q.vertex_count() && cartan_pairing(q, w, w) == 2;
}

bool is_positive_root(const QuiverGraph& q, const RootVector& w) {
  return is_root(q, w) && w.is_nonnegative();
}

std::vector<RootVector> positive_roots(const QuiverGraph& q) {
  if (!q.is_finite_type())
    throw ConfigError("quiver is not of finite type: its Cartan matrix is not positive definite");
  const int n = q.vertex_count();
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (int i = 0; i < n; ++i) {
    frontier.push_back(RootVector::simple(n, i));
    seen.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& w : frontier)
      for (int i = 0; i < n; ++i) {
        RootVector r = reflect(q, w, i);
        if (r.is_nonnegative() && seen.insert(r).second) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  std::vector<RootVector> roots(seen.begin(), seen.end());
  // By height, then a1 before a2 and so on.
  std::sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords() > b.coords();
  });
  return roots;
}

RootVector evaluate(const QuiverGraph& q, const WeylWord& word) {
  RootVector w = RootVector::simple(q.vertex_count(), word.base);
  for (int v : word.letters) w = reflect(q, w, v);
  return w;
}

WeylWord minimal_word(const QuiverGraph& q, const RootVector& w) {
  if (!is_positive_root(q, w)) throw PreconditionError("minimal_word: " + to_string(w) + " is not a positive root");
  const int n = q.vertex_count();
  std::vector<int> descent;
  RootVector cur = w;
  while (cur.height() > 1) {
    int chosen = -1;
    for (int i = 0; i < n && chosen < 0; ++i)
      if (cartan_pairing(q, cur, RootVector::simple(n, i)) > 0) chosen = i;
    cur = reflect(q, cur, chosen);
    descent.push_back(chosen);
  }
  int base = 0;
  while (cur[base] == 0) ++base;
  return WeylWord{base, {descent.rbegin(), descent.rend()}};
}

std::vector<WeylWord> all_minimal_words(const QuiverGraph& q, const RootVector& w) {
  if (!is_positive_root(q, w))
    throw PreconditionError("all_minimal_words: " + to_string(w) + " is not a positive root");
  const int n = q.vertex_count();
  std::vector<WeylWord> out;
  std::vector<int> descent;
  std::function<void(const RootVector&)> walk = [&](const RootVector& cur) {
    if (cur.height() == 1) {
      int base = 0;
      while (cur[base] == 0) ++base;
      out.push_back(WeylWord{base, {descent.rbegin(), descent.rend()}});
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (cartan_pairing(q, cur, RootVector::simple(n, i)) <= 0) continue;
      descent.push_back(i);
      walk(reflect(q, cur, i));
      descent.pop_back();
    }
  };
  walk(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootVector> root_sequence(const QuiverGraph& q, const WeylWord& word) {
  const int n = q.vertex_count();
  const int len = static_cast<int>(word.letters.size());
  std::vector<RootVector> seq(len + 1);
  // Build from the right: R_n = v_n, R_{i} = s_{v_n} ... s_{v_{i+1}} v_i.
  for (int i = 0; i <= len; ++i) {
    RootVector r = RootVector::simple(n, i == 0 ? word.base : word.letters[i - 1]);
    for (int j = i; j < len; ++j) r = reflect(q, r, word.letters[j]);
    seq[i] = std::move(r);
  }
  return seq;
}

}  // namespace cy2
