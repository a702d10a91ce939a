#include "cy2/zigzag.hpp"

#include <algorithm>

namespace cy2 {

std::string to_string(const BasisElement& b) {
  switch (b.kind) {
    case BasisKind::idempotent:
      return "e" + std::to_string(b.source + 1);
    case BasisKind::arrow:
      return "a" + std::to_string(b.source + 1) + ">" + std::to_string(b.target + 1);
    case BasisKind::loop:
      return "l" + std::to_string(b.source + 1);
  }
  return "?";
}

AlgebraElement::AlgebraElement(BasisElement b, Rational c) { add(b, c); }

Rational AlgebraElement::coefficient(const BasisElement& b) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const Term& t, const BasisElement& key) { return t.first < key; });
  if (it != terms_.end() && it->first == b) return it->second;
  return 0;
}

void AlgebraElement::add(const BasisElement& b, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const Term& t, const BasisElement& key) { return t.first < key; });
  if (it != terms_.end() && it->first == b) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{b, c});
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

AlgebraElement operator*(const Rational& s, AlgebraElement a) {
  if (sgn(s) == 0) return {};
  for (auto& t : a.terms_) t.second *= s;
  return a;
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += "(" + to_string(c) + ")";
    out += to_string(b);
  }
  return out;
}

ZigzagAlgebra::ZigzagAlgebra(QuiverGraph quiver) : quiver_(std::move(quiver)) {}

std::optional<BasisElement> ZigzagAlgebra::basis(int source, int target, int degree) const {
  switch (degree) {
    case 0:
      if (source == target) return BasisElement{BasisKind::idempotent, source, target};
      return std::nullopt;
    case 1:
      if (quiver_.adjacent(source, target)) return BasisElement{BasisKind::arrow, source, target};
      return std::nullopt;
    case 2:
      if (source == target) return BasisElement{BasisKind::loop, source, target};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::vector<BasisElement> ZigzagAlgebra::hom_basis(int i, int j) const {
  std::vector<BasisElement> out;
  for (int d = 0; d <= 2; ++d)
    if (auto b = basis(i, j, d)) out.push_back(*b);
  return out;
}

std::vector<BasisElement> ZigzagAlgebra::all_basis() const {
  std::vector<BasisElement> out;
  for (int i = 0; i < vertex_count(); ++i)
    for (int j = 0; j < vertex_count(); ++j)
      for (auto b : hom_basis(i, j)) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<BasisElement> ZigzagAlgebra::multiply(const BasisElement& x, const BasisElement& y) const {
  if (x.target != y.source) return std::nullopt;
  if (x.kind == BasisKind::idempotent) return y;
  if (y.kind == BasisKind::idempotent) return x;
  if (x.kind == BasisKind::arrow && y.kind == BasisKind::arrow && y.target == x.source)
    return BasisElement{BasisKind::loop, x.source, x.source};
  return std::nullopt;
}

AlgebraElement ZigzagAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms())
      if (auto b = multiply(bx, by)) out += AlgebraElement(*b, cx * cy);
  return out;
}

}  // namespace cy2
