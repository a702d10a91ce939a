#include <doctest.h>

#include <cmath>
#include <random>

#include "cy2/error.hpp"
#include "cy2/stability.hpp"
#include "cy2/verify.hpp"

using namespace cy2;

namespace {

AlgebraPtr alg(const char* t) { return make_algebra(QuiverGraph::of_type(t)); }
TwistedComplex P(const AlgebraPtr& A, int v, int s = 0) { return TwistedComplex::projective(A, v, s); }
RootVector rv(std::vector<int> c) { return RootVector(std::move(c)); }

CentralCharge golden() {
  return CentralCharge({Complex(-1, Rational(1, 2)), Complex(0, 1), Complex(Rational(1, 2), Rational(1, 4))});
}
CentralCharge golden_a2() { return CentralCharge({Complex(-1, Rational(1, 2)), Complex(0, 1)}); }

// Floating-point phase oracle: shift + atan2(im, re) / pi.
double float_phase(int shift, const Complex& z) {
  return shift + std::atan2(z.im.get_d(), z.re.get_d()) / M_PI;
}

CentralCharge scaled(const CentralCharge& Z, const Rational& s) {
  std::vector<Complex> v;
  for (const auto& z : Z.values()) v.emplace_back(z.re * s, z.im * s);
  return CentralCharge(v);
}

}  // namespace

TEST_CASE("central charges") {
  CHECK_NOTHROW(CentralCharge({Complex(2, 0)}));
  CHECK_THROWS_AS(CentralCharge({Complex(-2, 0)}), ConfigError);
  CHECK_THROWS_AS(CentralCharge({Complex(0, 0)}), ConfigError);
  CHECK_THROWS_AS(CentralCharge({Complex(1, -1)}), ConfigError);
  const auto Z = golden();
  CHECK(Z(rv({1, 1, 1})).re == Rational(-1, 2));
  CHECK(Z(rv({1, 1, 1})).im == Rational(7, 4));
}

TEST_CASE("validate_generic examples") {
  CHECK(validate_generic(golden(), QuiverGraph::of_type("A3")));
  const auto a2 = QuiverGraph::of_type("A2");
  CHECK_FALSE(validate_generic(CentralCharge({Complex(1, 1), Complex(1, 1)}), a2));
  CHECK_FALSE(validate_generic(CentralCharge({Complex(0, 1), Complex(0, 2)}), a2));
  CHECK_THROWS_AS(StandardStability(alg("A2"), CentralCharge({Complex(0, 1), Complex(0, 2)})), ConfigError);
}

TEST_CASE("random generic charges") {
  const auto q = QuiverGraph::of_type("D4");
  std::mt19937_64 r1(8), r2(8);
  for (int t = 0; t < 30; ++t) {
    const auto Z = CentralCharge::random_generic(q, r1);
    const auto Z2 = CentralCharge::random_generic(q, r2);
    CHECK(validate_generic(Z, q));
    for (std::size_t i = 0; i < Z.values().size(); ++i) {
      const auto& z = Z.values()[i];
      CHECK(z.re == Z2.values()[i].re);
      CHECK(z.im == Z2.values()[i].im);
      CHECK(z.re.get_den() <= 64);
      CHECK(z.im.get_den() <= 64);
      CHECK(abs(z.re) <= 2);
      CHECK(z.im > 0);
      CHECK(z.im <= 2);
    }
  }
}

TEST_CASE("phase values against the floating oracle") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), sh(-3, 3);
  std::vector<std::pair<PhaseValue, double>> vals;
  for (int t = 0; t < 120; ++t) {
    Complex z(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    z.re.canonicalize();
    z.im.canonicalize();
    if (!in_upper_half_plane(z)) continue;
    const int k = sh(rng);
    const PhaseValue p(k, z);
    CHECK(p.approx() == doctest::Approx(float_phase(k, z)));
    vals.emplace_back(p, float_phase(k, z));
  }
  for (const auto& [p, x] : vals)
    for (const auto& [q, y] : vals) {
      if (std::abs(x - y) < 1e-9) {
        CHECK(p == q);
        continue;
      }
      CHECK((p < q) == (x < y));
      const PhaseValue d = q - p;
      CHECK(d.approx() == doctest::Approx(y - x));
      CHECK(p + d == q);
    }
  CHECK(PhaseValue(0, Complex(5, 0)) == PhaseValue::integer(0));
  CHECK(PhaseValue(0, Complex(0, 1)) + PhaseValue(0, Complex(0, 3)) == PhaseValue::integer(1));
  CHECK(PhaseValue(2, Complex(-1, 1)).approx() == doctest::Approx(2.75));
  CHECK_THROWS_AS(PhaseValue(0, Complex(-1, 0)), PreconditionError);
}

TEST_CASE("sign_rule examples") {
  const auto a3 = QuiverGraph::of_type("A3");
  CHECK(sign_rule(golden(), root_sequence(a3, WeylWord{1, {0, 2, 1}})) == std::vector<int>{1, -1, -1});
  CHECK(sign_rule(golden(), {rv({0, 1, 0})}).empty());
  CHECK(sign_rule(golden_a2(), {rv({1, 1}), rv({1, 0})}) == std::vector<int>{1});
  CHECK_THROWS_AS(sign_rule(CentralCharge({Complex(0, 1), Complex(0, 2)}), {rv({1, 1}), rv({1, 0})}),
                  PreconditionError);
}

TEST_CASE("stable_object examples") {
  const auto A3 = alg("A3");
  const auto sc = construct_stable(A3, golden(), WeylWord{1, {0, 2, 1}});
  CHECK(to_string(sc.braid) == "s2' s3' s1");
  CHECK(sc.object == apply_braid(BraidWord::parse("s2' s3' s1"), P(A3, 1)));
  for (int v = 0; v < 3; ++v) CHECK(stable_object(A3, golden(), RootVector::simple(3, v)) == P(A3, v));
  const auto A2 = alg("A2");
  const auto ext = stable_object(A2, golden_a2(), rv({1, 1}));
  CHECK(is_isomorphic(ext, apply_braid(BraidWord::parse("s1"), P(A2, 1))));
  CHECK_THROWS(stable_object(A3, golden(), rv({1, 0, 1})));
}

TEST_CASE("phi_bounds examples") {
  const auto A3 = alg("A3");
  const StandardStability tau(A3, golden());
  const auto b = tau.bounds(P(A3, 1));
  CHECK(b.lower == PhaseValue(0, Complex(0, 1)));
  CHECK(b.upper == b.lower);
  CHECK(b.lower.approx() == doctest::Approx(0.5));

  const auto Y = direct_sum(P(A3, 0), P(A3, 1, 1));
  const auto by = tau.bounds(Y);
  CHECK(by.lower == PhaseValue(0, Complex(-1, Rational(1, 2))));
  CHECK(by.lower.approx() == doctest::Approx(std::atan2(0.5, -1.0) / M_PI));
  CHECK(by.upper == PhaseValue(1, Complex(0, 1)));
  CHECK(by.spread().approx() == doctest::Approx(1.5 - std::atan2(0.5, -1.0) / M_PI));
  CHECK(by.spread().approx() == doctest::Approx(0.648).epsilon(0.001));
  CHECK_FALSE(heart_test(tau, Y));
  CHECK(heart_test(tau, direct_sum(P(A3, 0), P(A3, 1))));
  CHECK(heart_test(tau, direct_sum(direct_sum(P(A3, 0), P(A3, 1)), P(A3, 2))));
  CHECK_FALSE(heart_test(tau, P(A3, 2, -1)));
  CHECK_THROWS_AS(tau.bounds(TwistedComplex(A3)), PreconditionError);

  const auto A2 = alg("A2");
  const StandardStability tau2(A2, golden_a2());
  CHECK(spread(tau2, apply_braid(BraidWord::parse("s1'"), P(A2, 1))) > PhaseValue::integer(0));
  CHECK(spread(tau2, apply_braid(BraidWord::parse("s1"), P(A2, 1))) == PhaseValue::integer(0));
}

TEST_CASE("phases of shifted stable objects") {
  const auto A3 = alg("A3");
  const StandardStability tau(A3, golden());
  for (int r = 0; r < 6; ++r)
    for (int k = -2; k <= 2; ++k) {
      const auto b = tau.bounds(shift(tau.stable(r).object, k));
      CHECK(b.lower == tau.phase(r, k));
      CHECK(b.upper == tau.phase(r, k));
      CHECK(b.lower_root == r);
      CHECK(b.lower_shift == k);
      CHECK(tau.phase(r, k).approx() ==
            doctest::Approx(float_phase(k, golden()(tau.roots()[r]))));
    }
}

TEST_CASE("real positive simple has phase 0") {
  const auto A2 = alg("A2");
  const StandardStability tau(A2, CentralCharge({Complex(1, 0), Complex(-1, 1)}));
  CHECK(tau.bounds(P(A2, 0)).lower == PhaseValue::integer(0));
  CHECK(heart_test(tau, P(A2, 0)));
}

TEST_CASE("results are invariant under positive rescaling of the charge") {
  const auto q = QuiverGraph::of_type("A4");
  const auto A = make_algebra(q);
  std::mt19937_64 rng(33);
  for (int t = 0; t < 5; ++t) {
    const auto Z = CentralCharge::random_generic(q, rng);
    const auto Z2 = scaled(Z, Rational(7, 3));
    const StandardStability tau(A, Z), tau2(A, Z2);
    for (std::size_t r = 0; r < tau.roots().size(); ++r) {
      CHECK(tau.stable(int(r)).signs == tau2.stable(int(r)).signs);
      CHECK(tau.stable(int(r)).object == tau2.stable(int(r)).object);
    }
    for (int c = 0; c < 10; ++c) {
      const auto Y = apply_braid(verify::random_word(q, 1 + rng() % 6, rng), P(A, c % 4));
      const auto b = tau.bounds(Y), b2 = tau2.bounds(Y);
      CHECK(b.lower == b2.lower);
      CHECK(b.upper == b2.upper);
    }
  }
}

TEST_CASE("stable objects and sign flips on small types") {
  for (const char* t : {"A1", "A2", "A3", "D4", "E6"}) {
    CAPTURE(t);
    const auto r = verify::stable_objects(QuiverGraph::of_type(t), t[0] == 'E' ? 2 : 5, 41);
    CHECK(r.passed());
    for (const auto& m : r.messages) MESSAGE(m);
  }
}

TEST_CASE("uniqueness across minimal words") {
  const auto r = verify::uniqueness(QuiverGraph::of_type("A4"), 3, 42, 1);
  CHECK(r.passed());
}
