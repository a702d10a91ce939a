#pragma once

// Generic standard stability conditions given by exact central charges,
// the root-sequence sign rule, the stable spherical objects it produces, and
// top/bottom phase probing.

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cy2/homcore.hpp"
#include "cy2/rational.hpp"
#include "cy2/rootlat.hpp"
#include "cy2/twists.hpp"

namespace cy2 {

class CentralCharge {
 public:
  // Throws ConfigError if some value lies outside the half-open upper half plane.
  explicit CentralCharge(std::vector<Complex> values);

  int rank() const { return static_cast<int>(values_.size()); }
  const std::vector<Complex>& values() const { return values_; }
  Complex operator()(const RootVector& w) const;

  // Every coordinate p/q with q <= 64, |Re| <= 2, 0 < Im <= 2; redrawn until
  // generic for q. Deterministic for a given engine state.
  static CentralCharge random_generic(const QuiverGraph& q, std::mt19937_64& rng);

 private:
  std::vector<Complex> values_;
};

// Distinct positive roots have non-proportional images.
bool validate_generic(const CentralCharge& Z, const QuiverGraph& q);

// shift + arg(direction)/pi with direction in the half-open upper half plane,
// so the fractional part is in [0, 1). Ordered exactly.
class PhaseValue {
 public:
  PhaseValue() : PhaseValue(0, Complex(1, 0)) {}
  PhaseValue(int shift, Complex direction);
  static PhaseValue integer(int k) { return PhaseValue(k, Complex(1, 0)); }

  int shift() const { return shift_; }
  const Complex& direction() const { return direction_; }

  // For display only; never used in comparisons.
  double approx() const;
  std::string exact() const;

  friend std::strong_ordering operator<=>(const PhaseValue& a, const PhaseValue& b);
  friend bool operator==(const PhaseValue& a, const PhaseValue& b) { return (a <=> b) == 0; }
  friend PhaseValue operator+(const PhaseValue& a, const PhaseValue& b);
  friend PhaseValue operator-(const PhaseValue& a, const PhaseValue& b);

 private:
  int shift_;
  Complex direction_;
};

// For i = 1..n: +1 if arg Z(R_i) > arg Z(R_0), -1 if smaller. Throws
// PreconditionError on equal arguments or a root outside the upper half plane.
std::vector<int> sign_rule(const CentralCharge& Z, const std::vector<RootVector>& roots);

// sigma_{v_n}^{e_n} ... sigma_{v_1}^{e_1} as a braid word.
BraidWord lift(const WeylWord& word, const std::vector<int>& signs);

struct StableConstruction {
  WeylWord word;
  std::vector<RootVector> roots;
  std::vector<int> signs;
  BraidWord braid;  // applied to P_base
  TwistedComplex object;
};

StableConstruction construct_stable(const AlgebraPtr& algebra, const CentralCharge& Z, const WeylWord& word);
StableConstruction construct_stable(const AlgebraPtr& algebra, const CentralCharge& Z, const RootVector& w);
TwistedComplex stable_object(const AlgebraPtr& algebra, const CentralCharge& Z, const RootVector& w);

struct PhaseBounds {
  PhaseValue lower;
  PhaseValue upper;
  int lower_root = -1;  // index into the positive roots
  int lower_shift = 0;  // lower == phase of stable(lower_root)[lower_shift]
  int upper_root = -1;
  int upper_shift = 0;

  PhaseValue spread() const { return upper - lower; }
};

// A generic standard stability condition together with its table of stable
// spherical objects, built once on construction.
class StandardStability {
 public:
  // Throws ConfigError if the quiver is not of finite type or Z is not generic.
  StandardStability(AlgebraPtr algebra, CentralCharge charge);

  const AlgebraPtr& algebra() const { return algebra_; }
  const QuiverGraph& quiver() const { return algebra_->quiver(); }
  const CentralCharge& charge() const { return charge_; }
  const std::vector<RootVector>& roots() const { return roots_; }

  // -1 if w is not a positive root.
  int root_index(const RootVector& w) const;

  const StableConstruction& stable(int r) const { return stable_[r]; }
  const SphericalObject& stable_spherical(int r) const { return spherical_[r]; }
  // Phase of stable(r)[shift].
  PhaseValue phase(int r, int shift) const;

  // Caller asserts Y's HN factors are spherical (Y spherical or a sum of
  // sphericals). Throws PreconditionError for the zero object.
  PhaseBounds bounds(const TwistedComplex& Y) const;

 private:
  AlgebraPtr algebra_;
  CentralCharge charge_;
  std::vector<RootVector> roots_;
  std::vector<StableConstruction> stable_;
  std::vector<SphericalObject> spherical_;
};

inline PhaseBounds phi_bounds(const StandardStability& tau, const TwistedComplex& Y) { return tau.bounds(Y); }
PhaseValue spread(const StandardStability& tau, const TwistedComplex& Y);
bool heart_test(const StandardStability& tau, const TwistedComplex& Y);
bool heart_test(const PhaseBounds& b);

}  // namespace cy2
