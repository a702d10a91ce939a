#include "cy2/stability.hpp"

#include <cmath>
#include <numbers>

#include "cy2/error.hpp"

namespace cy2 {

namespace {

// Positive rescaling keeps the argument and the numbers small.
Complex normalized(const Complex& z) {
  Rational scale = abs(z.re) + abs(z.im);
  if (sgn(scale) == 0) return z;
  return (1 / scale) * z;
}

}  // namespace

CentralCharge::CentralCharge(std::vector<Complex> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!in_upper_half_plane(values_[i]))
      throw ConfigError("central charge of simple root " + std::to_string(i + 1) + " (" + to_string(values_[i]) +
                        ") is not in the half-open upper half plane");
}

Complex CentralCharge::operator()(const RootVector& w) const {
  if (w.rank() != rank()) throw PreconditionError("central charge: rank mismatch");
  Complex z(0, 0);
  for (int i = 0; i < rank(); ++i)
    if (w[i] != 0) z = z + Rational(w[i]) * values_[i];
  return z;
}

CentralCharge CentralCharge::random_generic(const QuiverGraph& q, std::mt19937_64& rng) {
  auto draw = [&](long lo_num_per_den, long hi_num_per_den, bool positive) {
    const long den = 1 + static_cast<long>(rng() % 64);
    const long lo = positive ? 1 : lo_num_per_den * den;
    const long hi = hi_num_per_den * den;
    const long num = lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  for (;;) {
    std::vector<Complex> values;
    for (int i = 0; i < q.vertex_count(); ++i) {
      Rational re = draw(-2, 2, false);
      Rational im = draw(0, 2, true);
      values.emplace_back(re, im);
    }
    CentralCharge Z(std::move(values));
    if (validate_generic(Z, q)) return Z;
  }
}

bool validate_generic(const CentralCharge& Z, const QuiverGraph& q) {
  if (Z.rank() != q.vertex_count()) return false;
  const auto roots = positive_roots(q);
  std::vector<Complex> images;
  for (const auto& r : roots) images.push_back(Z(r));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (sgn(cross(images[i], images[j])) == 0) return false;
  return true;
}

PhaseValue::PhaseValue(int shift, Complex direction) : shift_(shift), direction_(normalized(direction)) {
  if (!in_upper_half_plane(direction_))
    throw PreconditionError("phase direction " + to_string(direction) + " outside the half-open upper half plane");
}

double PhaseValue::approx() const {
  return shift_ + std::atan2(direction_.im.get_d(), direction_.re.get_d()) / std::numbers::pi;
}

std::string PhaseValue::exact() const {
  return std::to_string(shift_) + "+arg(" + to_string(direction_) + ")/pi";
}

std::strong_ordering operator<=>(const PhaseValue& a, const PhaseValue& b) {
  if (a.shift_ != b.shift_) return a.shift_ <=> b.shift_;
  const int s = sgn(cross(a.direction_, b.direction_));
  if (s > 0) return std::strong_ordering::less;
  if (s < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

PhaseValue operator+(const PhaseValue& a, const PhaseValue& b) {
  const Complex w = a.direction_ * b.direction_;
  if (in_upper_half_plane(w)) return PhaseValue(a.shift_ + b.shift_, w);
  return PhaseValue(a.shift_ + b.shift_ + 1, -w);
}

PhaseValue operator-(const PhaseValue& a, const PhaseValue& b) {
  const Complex w = a.direction_ * b.direction_.conj();
  if (in_upper_half_plane(w)) return PhaseValue(a.shift_ - b.shift_, w);
  return PhaseValue(a.shift_ - b.shift_ - 1, -w);
}

std::vector<int> sign_rule(const CentralCharge& Z, const std::vector<RootVector>& roots) {
  std::vector<int> signs;
  if (roots.empty()) return signs;
  const Complex neutral = Z(roots[0]);
  if (!in_upper_half_plane(neutral)) throw PreconditionError("sign_rule: neutral root is not positive");
  for (std::size_t i = 1; i < roots.size(); ++i) {
    const Complex z = Z(roots[i]);
    if (!in_upper_half_plane(z)) throw PreconditionError("sign_rule: root " + to_string(roots[i]) + " is not positive");
    const int s = sgn(cross(neutral, z));
    if (s == 0)
      throw PreconditionError("sign_rule: " + to_string(roots[i]) + " and " + to_string(roots[0]) +
                              " have the same phase (charge not generic)");
    signs.push_back(s > 0 ? 1 : -1);
  }
  return signs;
}

BraidWord lift(const WeylWord& word, const std::vector<int>& signs) {
  if (signs.size() != word.letters.size()) throw PreconditionError("lift: one sign per letter required");
  std::vector<BraidLetter> letters;
  for (std::size_t i = 0; i < signs.size(); ++i) letters.push_back(BraidLetter{word.letters[i], signs[i]});
  return BraidWord(std::move(letters));
}

StableConstruction construct_stable(const AlgebraPtr& algebra, const CentralCharge& Z, const WeylWord& word) {
  StableConstruction c{word, root_sequence(algebra->quiver(), word), {}, {}, TwistedComplex(algebra)};
  c.signs = sign_rule(Z, c.roots);
  c.braid = lift(word, c.signs);
  c.object = apply_braid(c.braid, TwistedComplex::projective(algebra, word.base));
  return c;
}

StableConstruction construct_stable(const AlgebraPtr& algebra, const CentralCharge& Z, const RootVector& w) {
  return construct_stable(algebra, Z, minimal_word(algebra->quiver(), w));
}

TwistedComplex stable_object(const AlgebraPtr& algebra, const CentralCharge& Z, const RootVector& w) {
  return construct_stable(algebra, Z, w).object;
}

StandardStability::StandardStability(AlgebraPtr algebra, CentralCharge charge)
    : algebra_(std::move(algebra)), charge_(std::move(charge)) {
  roots_ = positive_roots(algebra_->quiver());
  if (!validate_generic(charge_, algebra_->quiver()))
    throw ConfigError("central charge is not generic: two positive roots have the same phase");
  for (const auto& w : roots_) {
    stable_.push_back(construct_stable(algebra_, charge_, w));
    spherical_.push_back(SphericalObject::certify(stable_.back().object));
  }
}

int StandardStability::root_index(const RootVector& w) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i] == w) return static_cast<int>(i);
  return -1;
}

PhaseValue StandardStability::phase(int r, int shift) const { return PhaseValue(shift, charge_(roots_[r])); }

PhaseBounds StandardStability::bounds(const TwistedComplex& Y) const {
  if (Y.is_zero()) throw PreconditionError("phases of the zero object are undefined");
  std::optional<PhaseValue> lower, upper;
  int lr = -1, ls = 0, ur = -1, us = 0;
  for (int r = 0; r < static_cast<int>(roots_.size()); ++r) {
    const auto& S = stable_[r].object;
    // Hom^0(Y, S[k]) = Hom^k(Y, S).
    for (const auto& [k, dim] : hom_dims(Y, S)) {
      PhaseValue p = phase(r, k);
      if (!lower || p < *lower) {
        lower = p;
        lr = r;
        ls = k;
      }
    }
    // Hom^0(S[k], Y) = Hom^{-k}(S, Y).
    for (const auto& [k, dim] : hom_dims(S, Y)) {
      PhaseValue p = phase(r, -k);
      if (!upper || p > *upper) {
        upper = p;
        ur = r;
        us = -k;
      }
    }
  }
  if (!lower || !upper) throw InvariantViolation("nonzero object with no nonzero map to or from a stable spherical");
  return PhaseBounds{*lower, *upper, lr, ls, ur, us};
}

PhaseValue spread(const StandardStability& tau, const TwistedComplex& Y) { return tau.bounds(Y).spread(); }

bool heart_test(const PhaseBounds& b) { return b.lower >= PhaseValue::integer(0) && b.upper < PhaseValue::integer(1); }

bool heart_test(const StandardStability& tau, const TwistedComplex& Y) { return heart_test(tau.bounds(Y)); }

}  // namespace cy2
