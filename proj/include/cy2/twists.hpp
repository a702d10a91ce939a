#pragma once

// Spherical twists realized as cones on evaluation maps, and the braid group
// action by twists in the projectives P_i.

#include <string>
#include <string_view>
#include <vector>

#include "cy2/homcore.hpp"

namespace cy2 {

// A twisted complex known to be spherical.
class SphericalObject {
 public:
  // Throws PreconditionError if X is not spherical.
  static SphericalObject certify(TwistedComplex X);
  static SphericalObject simple(const AlgebraPtr& algebra, int vertex);

  const TwistedComplex& object() const { return object_; }

 private:
  explicit SphericalObject(TwistedComplex X) : object_(std::move(X)) {}
  TwistedComplex object_;
};

// sigma_X(Y) = cone(Hom(X, Y) (x) X -> Y), minimized.
TwistedComplex twist(const SphericalObject& X, const TwistedComplex& Y);
TwistedComplex twist(const TwistedComplex& X, const TwistedComplex& Y);

// sigma_X^{-1}(Y) = cone(Y -> X (x) Hom(Y, X)^dual)[-1], minimized.
TwistedComplex untwist(const SphericalObject& X, const TwistedComplex& Y);
TwistedComplex untwist(const TwistedComplex& X, const TwistedComplex& Y);

struct BraidLetter {
  int vertex;    // 0-based
  int exponent;  // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// letters()[0] is applied first. The text form writes the word as a product
// of operators, so the rightmost letter is applied first: "s2' s3' s1" is
// sigma_2^{-1} sigma_3^{-1} sigma_1.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidLetter> letters);

  // Throws ConfigError on malformed text. Vertices are 1-based in text.
  static BraidWord parse(std::string_view text);

  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  // Apply `this` first, then `after`.
  BraidWord then(const BraidWord& after) const;
  // Free reduction: cancels adjacent inverse pairs.
  BraidWord reduced() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<BraidLetter> letters_;
};

std::string to_string(const BraidWord& w);

TwistedComplex apply_braid(const BraidWord& word, const TwistedComplex& Y);

// The induced action on K-classes: the matching product of reflections.
RootVector apply_braid(const QuiverGraph& q, const BraidWord& word, const RootVector& w);

}  // namespace cy2
