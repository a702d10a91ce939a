#include "cy2/twists.hpp"

#include <cctype>

#include "cy2/error.hpp"

namespace cy2 {

SphericalObject SphericalObject::certify(TwistedComplex X) {
  if (!is_spherical(X)) throw PreconditionError("object is not spherical");
  return SphericalObject(std::move(X));
}

SphericalObject SphericalObject::simple(const AlgebraPtr& algebra, int vertex) {
  return SphericalObject(TwistedComplex::projective(algebra, vertex));
}

namespace {

// Copies of X, one per cohomology class of the Hom complex, each shifted so
// the class becomes a degree-0 map. `sign` is -1 for Hom(X, Y) (copies
// X[-k]) and +1 for Hom(Y, X) (copies X[k]). Returns the sum and the offset
// of each copy.
struct Copies {
  TwistedComplex sum;
  std::vector<int> offsets;
};

Copies shifted_copies(const TwistedComplex& X, const std::vector<Morphism>& classes, int sign) {
  Copies out{TwistedComplex(X.algebra_ptr()), {}};
  for (const auto& f : classes) {
    out.offsets.push_back(static_cast<int>(out.sum.size()));
    out.sum = direct_sum(out.sum, shift(X, sign * f.degree));
  }
  return out;
}

std::vector<Morphism> all_classes(const HomComplex& H) {
  std::vector<Morphism> out;
  for (const auto& [k, dim] : H.cohomology_dims())
    for (auto& f : H.cocycle_basis(k)) out.push_back(std::move(f));
  return out;
}

}  // namespace

TwistedComplex twist(const SphericalObject& S, const TwistedComplex& Y) {
  const TwistedComplex& X = S.object();
  const HomComplex H(X, Y);
  const auto classes = all_classes(H);
  if (classes.empty()) return minimize(Y);
  auto copies = shifted_copies(X, classes, -1);
  Morphism ev{copies.sum, Y, 0, {}};
  for (std::size_t b = 0; b < classes.size(); ++b)
    for (const auto& e : classes[b].entries)
      ev.entries.push_back(MatrixEntry{e.row, e.col + copies.offsets[b], e.coeff});
  return minimize(cone(ev));
}

TwistedComplex untwist(const SphericalObject& S, const TwistedComplex& Y) {
  const TwistedComplex& X = S.object();
  const HomComplex H(Y, X);
  const auto classes = all_classes(H);
  if (classes.empty()) return minimize(Y);
  auto copies = shifted_copies(X, classes, +1);
  Morphism coev{Y, copies.sum, 0, {}};
  for (std::size_t b = 0; b < classes.size(); ++b)
    for (const auto& e : classes[b].entries)
      coev.entries.push_back(MatrixEntry{e.row + copies.offsets[b], e.col, e.coeff});
  std::sort(coev.entries.begin(), coev.entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  return minimize(shift(cone(coev), -1));
}

TwistedComplex twist(const TwistedComplex& X, const TwistedComplex& Y) {
  return twist(SphericalObject::certify(X), Y);
}

TwistedComplex untwist(const TwistedComplex& X, const TwistedComplex& Y) {
  return untwist(SphericalObject::certify(X), Y);
}

BraidWord::BraidWord(std::vector<BraidLetter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.vertex < 0 || (l.exponent != 1 && l.exponent != -1))
      throw PreconditionError("braid letter must have a vertex and exponent +-1");
}

BraidWord BraidWord::parse(std::string_view text) {
  std::vector<BraidLetter> written;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    return ConfigError("braid word '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 's') throw fail("expected 's' at position " + std::to_string(i));
    ++i;
    int v = 0;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (++digits > 4) throw fail("vertex index too large");
    }
    if (digits == 0 || v == 0) throw fail("missing vertex index");
    int exponent = 1;
    if (i < text.size() && text[i] == '\'') {
      exponent = -1;
      ++i;
    }
    written.push_back(BraidLetter{v - 1, exponent});
  }
  return BraidWord(std::vector<BraidLetter>(written.rbegin(), written.rend()));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(BraidLetter{it->vertex, -it->exponent});
  return BraidWord(std::move(out));
}

BraidWord BraidWord::then(const BraidWord& after) const {
  auto out = letters_;
  out.insert(out.end(), after.letters_.begin(), after.letters_.end());
  return BraidWord(std::move(out));
}

BraidWord BraidWord::reduced() const {
  std::vector<BraidLetter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().vertex == l.vertex && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(std::move(out));
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(it->vertex + 1);
    if (it->exponent < 0) out += '\'';
  }
  return out;
}

TwistedComplex apply_braid(const BraidWord& word, const TwistedComplex& Y) {
  TwistedComplex cur = Y;
  for (const auto& l : word.letters()) {
    if (l.vertex >= Y.algebra().vertex_count())
      throw PreconditionError("braid letter s" + std::to_string(l.vertex + 1) + " outside the quiver");
    const auto P = SphericalObject::simple(Y.algebra_ptr(), l.vertex);
    cur = l.exponent > 0 ? twist(P, cur) : untwist(P, cur);
  }
  return cur;
}

RootVector apply_braid(const QuiverGraph& q, const BraidWord& word, const RootVector& w) {
  RootVector cur = w;
  for (const auto& l : word.letters()) cur = reflect(q, cur, l.vertex);
  return cur;
}

}  // namespace cy2
