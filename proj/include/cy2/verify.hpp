#pragma once

// Randomized property suites over a quiver type. Used by the `verify`
// command and the acceptance tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cy2/reduce.hpp"

namespace cy2::verify {

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  double seconds = 0;

  bool passed() const { return cases > 0 && failures == 0; }
  void fail(std::string message);
};

// Free-reduced word of the given length with uniformly random letters.
BraidWord random_word(const QuiverGraph& q, std::size_t length, std::mt19937_64& rng);

// Every positive root under `charges` random generic charges: the
// constructed object is spherical, has the right class, lies in the standard
// heart with spread zero; flipping any one sign breaks this.
SuiteResult stable_objects(const QuiverGraph& q, int charges, std::uint64_t seed);

// Roots with several minimal words give isomorphic stable objects.
SuiteResult uniqueness(const QuiverGraph& q, int charges, std::uint64_t seed, std::size_t min_roots = 0);

struct ReductionStats {
  std::size_t steps = 0;
  std::size_t improvement_checks = 0;
  std::size_t large_spread_checks = 0;
  std::size_t small_spread_checks = 0;
  std::size_t max_generators = 0;
};

// Random braid images of random simples reduce to stable objects with
// certified steps; the final object matches the stable object of the
// class up to shift and the returned word reproduces the input.
SuiteResult reduction(const QuiverGraph& q, int cases, std::size_t max_length, std::uint64_t seed,
                      Strategy strategy, ReductionStats* stats = nullptr, bool check_orbit = true);

// Twist triangles Hom(X, Y) (x) X -> Y -> sigma_X Y and
// sigma_X^{-1} Y -> Y -> X (x) Hom(Y, X)^dual satisfy the sandwich bounds.
SuiteResult sandwich(const QuiverGraph& q, int cases, std::uint64_t seed);

SuiteResult alignment(const QuiverGraph& q, int cases, std::size_t max_length, std::uint64_t seed);

// Serre duality of Hom dimensions, Euler form vs. Cartan pairing, braid
// relations and twist/untwist inversion.
SuiteResult serre_duality(const QuiverGraph& q, int cases, std::uint64_t seed);
SuiteResult euler_pairing(const QuiverGraph& q, int cases, std::uint64_t seed);
SuiteResult braid_relations(const QuiverGraph& q, int cases, std::uint64_t seed);
SuiteResult twist_inversion(const QuiverGraph& q, int cases, std::uint64_t seed);

}  // namespace cy2::verify
