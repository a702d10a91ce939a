#include "cy2/verify.hpp"

#include <chrono>

#include "cy2/error.hpp"

namespace cy2::verify {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int uniform(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

TwistedComplex random_braid_image(const AlgebraPtr& A, std::size_t max_length, std::mt19937_64& rng) {
  const auto& q = A->quiver();
  const std::size_t len = static_cast<std::size_t>(uniform(rng, static_cast<int>(max_length) + 1));
  const BraidWord w = random_word(q, len, rng);
  return apply_braid(w, TwistedComplex::projective(A, uniform(rng, q.vertex_count())));
}

// X (x) H for a graded vector space H given by its dimensions: copies X[sign * k].
TwistedComplex tensor(const TwistedComplex& X, const std::map<int, int>& dims, int sign) {
  TwistedComplex out(X.algebra_ptr());
  for (const auto& [k, d] : dims)
    for (int i = 0; i < d; ++i) out = direct_sum(out, shift(X, sign * k));
  return out;
}

}  // namespace

void SuiteResult::fail(std::string message) {
  ++failures;
  if (messages.size() < 8) messages.push_back(std::move(message));
}

BraidWord random_word(const QuiverGraph& q, std::size_t length, std::mt19937_64& rng) {
  std::vector<BraidLetter> letters;
  while (letters.size() < length) {
    BraidLetter l{uniform(rng, q.vertex_count()), uniform(rng, 2) == 0 ? 1 : -1};
    if (!letters.empty() && letters.back().vertex == l.vertex && letters.back().exponent == -l.exponent) continue;
    letters.push_back(l);
  }
  return BraidWord(std::move(letters));
}

SuiteResult stable_objects(const QuiverGraph& q, int charges, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult r{"stable objects " + std::to_string(q.vertex_count())};
  std::mt19937_64 rng(seed);
  const AlgebraPtr A = make_algebra(q);
  for (int c = 0; c < charges; ++c) {
    const StandardStability tau(A, CentralCharge::random_generic(q, rng));
    for (int i = 0; i < static_cast<int>(tau.roots().size()); ++i) {
      const auto& w = tau.roots()[i];
      const auto& sc = tau.stable(i);
      ++r.cases;
      const PhaseBounds b = tau.bounds(sc.object);
      if (!is_spherical(sc.object)) r.fail("charge " + std::to_string(c) + ": " + to_string(w) + " not spherical");
      if (k_class(sc.object) != w) r.fail("charge " + std::to_string(c) + ": " + to_string(w) + " wrong class");
      if (!heart_test(b)) r.fail("charge " + std::to_string(c) + ": " + to_string(w) + " outside the heart");
      if (b.spread() != PhaseValue::integer(0))
        r.fail("charge " + std::to_string(c) + ": " + to_string(w) + " has positive spread");
      for (std::size_t k = 0; k < sc.signs.size(); ++k) {
        ++r.cases;
        auto flipped = sc.signs;
        flipped[k] = -flipped[k];
        const auto X = apply_braid(lift(sc.word, flipped), TwistedComplex::projective(A, sc.word.base));
        const PhaseBounds fb = tau.bounds(X);
        if (fb.spread() == PhaseValue::integer(0) && heart_test(fb))
          r.fail("charge " + std::to_string(c) + ": " + to_string(w) + " flip " + std::to_string(k + 1) +
                 " is still stable in the heart");
      }
    }
  }
  r.seconds = since(start);
  return r;
}

SuiteResult uniqueness(const QuiverGraph& q, int charges, std::uint64_t seed, std::size_t min_roots) {
  const auto start = Clock::now();
  SuiteResult r{"uniqueness"};
  std::mt19937_64 rng(seed);
  const AlgebraPtr A = make_algebra(q);
  for (int c = 0; c < charges; ++c) {
    const CentralCharge Z = CentralCharge::random_generic(q, rng);
    for (const auto& w : positive_roots(q)) {
      const auto words = all_minimal_words(q, w);
      if (words.size() < 2) continue;
      ++r.cases;
      const auto first = construct_stable(A, Z, words.front()).object;
      for (std::size_t k = 1; k < words.size(); ++k) {
        const auto other = construct_stable(A, Z, words[k]).object;
        if (!is_isomorphic(first, other)) {
          r.fail("charge " + std::to_string(c) + ": " + to_string(w) + " words 1 and " + std::to_string(k + 1) +
                 " give non-isomorphic objects");
          break;
        }
      }
    }
  }
  if (r.cases < min_roots) r.fail("only " + std::to_string(r.cases) + " roots with several minimal words");
  r.seconds = since(start);
  return r;
}

SuiteResult reduction(const QuiverGraph& q, int cases, std::size_t max_length, std::uint64_t seed, Strategy strategy,
                      ReductionStats* stats, bool check_orbit) {
  const auto start = Clock::now();
  SuiteResult r{strategy == Strategy::bottom ? "reduction (bottom)" : "reduction (top)"};
  std::mt19937_64 rng(seed);
  const AlgebraPtr A = make_algebra(q);
  for (int c = 0; c < cases; ++c) {
    const StandardStability tau(A, CentralCharge::random_generic(q, rng));
    const std::size_t len = 1 + static_cast<std::size_t>(uniform(rng, static_cast<int>(max_length)));
    const BraidWord word = random_word(q, len, rng);
    const int v = uniform(rng, q.vertex_count());
    const std::string label = "case " + std::to_string(c) + " (" + to_string(word) + ")P" + std::to_string(v + 1);
    ++r.cases;
    try {
      const TwistedComplex Y = apply_braid(word, TwistedComplex::projective(A, v));
      const ReductionTrace trace = reduce_to_stable(tau, Y, strategy, ReduceOptions{0, false});
      if (stats) {
        stats->steps += trace.steps.size();
        stats->max_generators = std::max(stats->max_generators, Y.size());
        for (const auto& s : trace.steps) {
          ++stats->improvement_checks;
          if (s.certificate.clause == OtherEnd::large_spread) ++stats->large_spread_checks;
          if (s.certificate.clause == OtherEnd::small_spread) ++stats->small_spread_checks;
        }
      }
      for (std::size_t k = 0; k + 1 < trace.steps.size(); ++k)
        if (!(trace.steps[k + 1].spread_before == trace.steps[k].spread_after) ||
            !(trace.steps[k].spread_after < trace.steps[k].spread_before))
          r.fail(label + ": spread not strictly decreasing at step " + std::to_string(k + 1));
      RootVector cls = k_class(trace.final_object);
      if (!cls.is_nonnegative()) cls = -cls;
      const int root = tau.root_index(cls);
      const auto k = root < 0 ? std::nullopt : isomorphic_up_to_shift(tau.stable(root).object, trace.final_object);
      if (!k || root != trace.final_root || *k != trace.final_shift)
        r.fail(label + ": final object is not a shift of the stable object of " + to_string(cls));
      if (!heart_test(tau.bounds(shift(trace.final_object, -trace.final_shift))))
        r.fail(label + ": final object is not semistable in the heart after unshifting");
      if (check_orbit) {
        const auto back = apply_braid(trace.to_stable.inverse(), trace.final_object);
        if (!is_isomorphic(back, Y)) r.fail(label + ": accumulated word does not reproduce the input");
        const auto from_simple = shift(apply_braid(trace.from_simple, TwistedComplex::projective(A, trace.base_vertex)),
                                       trace.final_shift);
        if (!is_isomorphic(from_simple, Y)) r.fail(label + ": simple-orbit word does not reproduce the input");
      }
    } catch (const std::exception& ex) {
      r.fail(label + ": " + ex.what());
    }
  }
  r.seconds = since(start);
  return r;
}

SuiteResult sandwich(const QuiverGraph& q, int cases, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult r{"sandwich"};
  std::mt19937_64 rng(seed);
  const AlgebraPtr A = make_algebra(q);
  const StandardStability tau(A, CentralCharge::random_generic(q, rng));
  for (int c = 0; c < cases; ++c) {
    const TwistedComplex Y = random_braid_image(A, 6, rng);
    const int root = uniform(rng, static_cast<int>(tau.roots().size()));
    const auto& X = tau.stable_spherical(root);
    ++r.cases;
    try {
      SandwichResult s;
      if (c % 2 == 0) {
        // Hom(X, Y) (x) X -> Y -> sigma_X Y
        const auto first = tensor(X.object(), hom_dims(X.object(), Y), -1);
        s = sandwich_check(tau, first, Y, twist(X, Y));
      } else {
        // sigma_X^{-1} Y -> Y -> X (x) Hom(Y, X)^dual
        const auto last = tensor(X.object(), hom_dims(Y, X.object()), +1);
        s = sandwich_check(tau, untwist(X, Y), Y, last);
      }
      if (!s.holds()) r.fail("case " + std::to_string(c) + ": sandwich inequality fails");
    } catch (const std::exception& ex) {
      r.fail("case " + std::to_string(c) + ": " + ex.what());
    }
  }
  r.seconds = since(start);
  return r;
}

SuiteResult alignment(const QuiverGraph& q, int cases, std::size_t max_length, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult r{"alignment"};
  std::mt19937_64 rng(seed);
  const AlgebraPtr A = make_algebra(q);
  for (int c = 0; c < cases; ++c) {
    auto tau = std::make_shared<const StandardStability>(A, CentralCharge::random_generic(q, rng));
    const std::size_t len = static_cast<std::size_t>(uniform(rng, static_cast<int>(max_length) + 1));
    const BraidWord transport = random_word(q, len, rng);
    ++r.cases;
    try {
      const AlignResult res = heart_align(OrbitStability{tau, transport, PhaseValue::integer(0)});
      if (!res.realigned) r.fail("case " + std::to_string(c) + " (" + to_string(transport) + "): simples not realigned");
    } catch (const std::exception& ex) {
      r.fail("case " + std::to_string(c) + " (" + to_string(transport) + "): " + ex.what());
    }
  }
  r.seconds = since(start);
  return r;
}

SuiteResult serre_duality(const QuiverGraph& q, int cases, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult r{"serre duality"};
  std::mt19937_64 rng(seed);
  const AlgebraPtr A = make_algebra(q);
  for (int c = 0; c < cases; ++c) {
    const auto X = random_braid_image(A, 5, rng);
    const auto Y = random_braid_image(A, 5, rng);
    ++r.cases;
    const auto xy = hom_dims(X, Y);
    const auto yx = hom_dims(Y, X);
    std::map<int, int> dual;
    for (const auto& [k, d] : yx) dual[2 - k] = d;
    if (xy != dual) r.fail("case " + std::to_string(c) + ": dim Hom^k(X,Y) != dim Hom^{2-k}(Y,X)");
  }
  r.seconds = since(start);
  return r;
}

SuiteResult euler_pairing(const QuiverGraph& q, int cases, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult r{"euler pairing"};
  std::mt19937_64 rng(seed);
  const AlgebraPtr A = make_algebra(q);
  for (int c = 0; c < cases; ++c) {
    const auto X = random_braid_image(A, 5, rng);
    const auto Y = random_braid_image(A, 5, rng);
    ++r.cases;
    int chi = 0;
    for (const auto& [k, d] : hom_dims(X, Y)) chi += (k % 2 == 0) ? d : -d;
    if (chi != cartan_pairing(q, k_class(X), k_class(Y)))
      r.fail("case " + std::to_string(c) + ": Euler characteristic differs from the Cartan pairing");
  }
  r.seconds = since(start);
  return r;
}

SuiteResult braid_relations(const QuiverGraph& q, int cases, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult r{"braid relations"};
  std::mt19937_64 rng(seed);
  const AlgebraPtr A = make_algebra(q);
  const int n = q.vertex_count();
  if (n < 2) return r;
  for (int c = 0; c < cases; ++c) {
    const auto Y = random_braid_image(A, 4, rng);
    const int i = uniform(rng, n);
    int j = uniform(rng, n - 1);
    if (j >= i) ++j;
    const int e = uniform(rng, 2) == 0 ? 1 : -1;
    const BraidLetter si{i, e}, sj{j, e};
    BraidWord lhs, rhs;
    if (q.adjacent(i, j)) {
      lhs = BraidWord({si, sj, si});
      rhs = BraidWord({sj, si, sj});
    } else {
      lhs = BraidWord({si, sj});
      rhs = BraidWord({sj, si});
    }
    ++r.cases;
    if (!is_isomorphic(apply_braid(lhs, Y), apply_braid(rhs, Y)))
      r.fail("case " + std::to_string(c) + ": " + to_string(lhs) + " vs " + to_string(rhs));
  }
  r.seconds = since(start);
  return r;
}

SuiteResult twist_inversion(const QuiverGraph& q, int cases, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult r{"twist inversion"};
  std::mt19937_64 rng(seed);
  const AlgebraPtr A = make_algebra(q);
  for (int c = 0; c < cases; ++c) {
    const auto Y = random_braid_image(A, 6, rng);
    const auto X = SphericalObject::simple(A, uniform(rng, q.vertex_count()));
    ++r.cases;
    if (!is_isomorphic(untwist(X, twist(X, Y)), Y)) r.fail("case " + std::to_string(c) + ": untwist(twist Y) != Y");
    if (!is_isomorphic(twist(X, untwist(X, Y)), Y)) r.fail("case " + std::to_string(c) + ": twist(untwist Y) != Y");
  }
  r.seconds = since(start);
  return r;
}

}  // namespace cy2::verify
