#include "cy2/linalg.hpp"

namespace cy2::linalg {

SparseVector axpy(const SparseVector& v, const Rational& s, const SparseVector& w) {
  SparseVector out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, s * w[j].second);
      ++j;
    } else {
      Rational c = v[i].second + s * w[j].second;
      if (sgn(c) != 0) out.emplace_back(v[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    // Entries before pos are untouched: the row has nothing below its pivot.
    const Rational c = -v[pos].second;
    v = axpy(v, c, it->second);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rational lead = v.front().second;
  if (lead != 1)
    for (auto& [idx, c] : v) c /= lead;
  const int pivot = v.front().first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::size_t rank(const std::vector<SparseVector>& vectors) {
  EchelonBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns) {
  // Echelon rows of the image, each remembering which combination of the
  // domain basis produced it.
  struct Row {
    SparseVector image;
    SparseVector history;
  };
  std::map<int, Row> rows;
  std::vector<SparseVector> out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVector v = columns[j];
    SparseVector hist{{static_cast<int>(j), Rational(1)}};
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows.find(v[pos].first);
      if (it == rows.end()) {
        ++pos;
        continue;
      }
      const Rational c = -v[pos].second;
      v = axpy(v, c, it->second.image);
      hist = axpy(hist, c, it->second.history);
    }
    if (v.empty()) {
      out.push_back(std::move(hist));
      continue;
    }
    const Rational lead = v.front().second;
    if (lead != 1) {
      for (auto& [idx, c] : v) c /= lead;
      for (auto& [idx, c] : hist) c /= lead;
    }
    const int pivot = v.front().first;
    rows.emplace(pivot, Row{std::move(v), std::move(hist)});
  }
  return out;
}

}  // namespace cy2::linalg
