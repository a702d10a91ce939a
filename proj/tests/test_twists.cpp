#include <doctest.h>

#include <random>

#include "cy2/error.hpp"
#include "cy2/stability.hpp"
#include "cy2/twists.hpp"
#include "cy2/verify.hpp"

using namespace cy2;

namespace {

AlgebraPtr alg(const char* t) { return make_algebra(QuiverGraph::of_type(t)); }
TwistedComplex P(const AlgebraPtr& A, int v, int s = 0) { return TwistedComplex::projective(A, v, s); }
RootVector rv(std::vector<int> c) { return RootVector(std::move(c)); }

}  // namespace

TEST_CASE("braid word text") {
  const auto w = BraidWord::parse("s2' s3' s1");
  REQUIRE(w.length() == 3);
  // rightmost applied first
  CHECK(w.letters()[0] == BraidLetter{0, 1});
  CHECK(w.letters()[1] == BraidLetter{2, -1});
  CHECK(w.letters()[2] == BraidLetter{1, -1});
  CHECK(to_string(w) == "s2' s3' s1");
  CHECK(BraidWord::parse("").empty());
  CHECK(BraidWord::parse("  s12  ").letters()[0] == BraidLetter{11, 1});
  CHECK(to_string(BraidWord()) == "");
  CHECK(to_string(BraidWord::parse("s1's2")) == "s1' s2");
  for (const char* bad : {"s0", "x1", "s", "s1''", "s-1", "s1 ,s2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(BraidWord::parse(bad), ConfigError);
  }
  CHECK_THROWS_AS(BraidWord({{0, 2}}), PreconditionError);
}

TEST_CASE("braid word algebra") {
  const auto w = BraidWord::parse("s2' s3' s1");
  CHECK(to_string(w.inverse()) == "s1' s3 s2");
  CHECK(w.then(w.inverse()).reduced().empty());
  CHECK(to_string(w.then(BraidWord::parse("s4"))) == "s4 s2' s3' s1");
  CHECK(to_string(BraidWord::parse("s1 s2 s2' s3").reduced()) == "s1 s3");
}

TEST_CASE("twist examples") {
  const auto A2 = alg("A2");
  const auto S1 = SphericalObject::simple(A2, 0);
  CHECK(is_isomorphic(twist(S1, P(A2, 0)), P(A2, 0, -1)));
  const auto t = twist(S1, P(A2, 1));
  CHECK(t.size() == 2);
  CHECK(k_class(t) == rv({1, 1}));
  REQUIRE(t.differential().size() == 1);
  CHECK(t.entry_basis(t.differential()[0]).kind == BasisKind::arrow);
  const auto A3 = alg("A3");
  CHECK(twist(SphericalObject::simple(A3, 0), P(A3, 2)) == P(A3, 2));
}

TEST_CASE("untwist examples") {
  const auto A3 = alg("A3");
  const auto S1 = SphericalObject::simple(A3, 0);
  CHECK(is_isomorphic(untwist(S1, twist(S1, P(A3, 1))), P(A3, 1)));
  CHECK(is_isomorphic(untwist(S1, P(A3, 0)), P(A3, 0, 1)));
  CHECK(untwist(S1, P(A3, 2)) == P(A3, 2));
}

TEST_CASE("non-spherical twisting objects are rejected") {
  const auto A = alg("A2");
  const auto sum = direct_sum(P(A, 0), P(A, 1));
  CHECK_THROWS_AS(SphericalObject::certify(sum), PreconditionError);
  CHECK_THROWS_AS(twist(sum, P(A, 0)), PreconditionError);
  CHECK_THROWS_AS(untwist(sum, P(A, 0)), PreconditionError);
  CHECK_THROWS_AS(SphericalObject::certify(TwistedComplex(A)), PreconditionError);
}

TEST_CASE("apply_braid examples") {
  const auto A2 = alg("A2");
  CHECK(apply_braid(BraidWord(), P(A2, 1)) == P(A2, 1));
  CHECK(k_class(apply_braid(BraidWord::parse("s1"), P(A2, 1))) == rv({1, 1}));
  const auto A3 = alg("A3");
  const auto X = apply_braid(BraidWord::parse("s2' s3' s1"), P(A3, 1));
  const CentralCharge Z({Complex(-1, Rational(1, 2)), Complex(0, 1), Complex(Rational(1, 2), Rational(1, 4))});
  CHECK(is_isomorphic(X, stable_object(A3, Z, rv({1, 1, 1}))));
}

TEST_CASE("twisting by a shifted object is the same functor") {
  const auto A = alg("A3");
  const auto X = apply_braid(BraidWord::parse("s1 s2'"), P(A, 2));
  const auto Y = apply_braid(BraidWord::parse("s3 s1"), P(A, 1));
  CHECK(is_isomorphic(twist(X, Y), twist(shift(X, 3), Y)));
  CHECK(is_isomorphic(untwist(X, Y), untwist(shift(X, -1), Y)));
}

TEST_CASE("twist of X by itself is X[-1]") {
  const auto q = QuiverGraph::of_type("D4");
  const auto A = make_algebra(q);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto X = apply_braid(verify::random_word(q, rng() % 5, rng), P(A, t % 4));
    CHECK(is_isomorphic(twist(X, X), shift(X, -1)));
    CHECK(is_isomorphic(untwist(X, X), shift(X, 1)));
  }
}

TEST_CASE("K-linearization: classes move by reflections") {
  for (const char* t : {"A3", "D4"}) {
    const auto q = QuiverGraph::of_type(t);
    const auto A = make_algebra(q);
    std::mt19937_64 rng(17);
    for (int c = 0; c < 60; ++c) {
      const auto w = verify::random_word(q, rng() % 8, rng);
      const int v = static_cast<int>(rng() % q.vertex_count());
      const int s = static_cast<int>(rng() % 3) - 1;
      const auto Y = P(A, v, s);
      RootVector expected = k_class(Y);
      // reflections do not see exponents
      for (const auto& l : w.letters()) expected = reflect(q, expected, l.vertex);
      CHECK(k_class(apply_braid(w, Y)) == expected);
      CHECK(apply_braid(q, w, k_class(Y)) == expected);
    }
  }
}

TEST_CASE("braid relations on every simple") {
  for (const char* t : {"A3", "D4"}) {
    const auto q = QuiverGraph::of_type(t);
    const auto A = make_algebra(q);
    const int n = q.vertex_count();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int e : {1, -1}) {
          const BraidLetter si{i, e}, sj{j, e};
          const BraidWord lhs = q.adjacent(i, j) ? BraidWord({si, sj, si}) : BraidWord({si, sj});
          const BraidWord rhs = q.adjacent(i, j) ? BraidWord({sj, si, sj}) : BraidWord({sj, si});
          for (int k = 0; k < n; ++k) CHECK(is_isomorphic(apply_braid(lhs, P(A, k)), apply_braid(rhs, P(A, k))));
        }
      }
  }
}

TEST_CASE("twist inversion on random objects") {
  for (const char* t : {"A2", "D4"}) {
    const auto r = verify::twist_inversion(QuiverGraph::of_type(t), 40, 31);
    CHECK(r.passed());
  }
}

TEST_CASE("heart criterion for twists by simples") {
  // Objects of the standard heart: stable objects of random charges and
  // sums of two of them. Untwisting by P_v stays in the heart exactly when
  // Hom^0(P_v, X) = 0; twisting, exactly when Hom^0(X, P_v) = 0.
  for (const char* t : {"A3", "D4"}) {
    CAPTURE(t);
    const auto q = QuiverGraph::of_type(t);
    const auto A = make_algebra(q);
    std::mt19937_64 rng(23);
    int nontrivial_untwist = 0, nontrivial_twist = 0;
    for (int c = 0; c < 6; ++c) {
      const StandardStability tau(A, CentralCharge::random_generic(q, rng));
      const int nroots = static_cast<int>(tau.roots().size());
      for (int r = 0; r < nroots; ++r) {
        std::vector<TwistedComplex> objects = {tau.stable(r).object,
                                               direct_sum(tau.stable(r).object, tau.stable((r + 1) % nroots).object)};
        for (const auto& X : objects) {
          REQUIRE(heart_test(tau, X));
          for (int v = 0; v < q.vertex_count(); ++v) {
            const auto Pv = SphericalObject::simple(A, v);
            const auto to = hom_dims(Pv.object(), X);
            const auto from = hom_dims(X, Pv.object());
            const bool hom_to = to.count(0) > 0, hom_from = from.count(0) > 0;
            const auto u = untwist(Pv, X);
            const auto w = twist(Pv, X);
            CHECK(heart_test(tau, u) == !hom_to);
            CHECK(heart_test(tau, w) == !hom_from);
            nontrivial_untwist += hom_to;
            nontrivial_twist += hom_from;
          }
        }
      }
    }
    CHECK(nontrivial_untwist > 0);
    CHECK(nontrivial_twist > 0);
  }
}
