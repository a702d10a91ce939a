#include <doctest.h>

#include <random>
#include <set>

#include "cy2/error.hpp"
#include "cy2/rootlat.hpp"

using namespace cy2;

namespace {

// Positive roots of a simply-laced diagram are the nonzero nonnegative
// vectors on which the Tits form sum x_i^2 - sum_{edges} x_i x_j equals 1.
std::set<RootVector> tits_roots(const QuiverGraph& q, int max_coeff) {
  const int n = q.vertex_count();
  std::set<RootVector> out;
  std::vector<int> x(n, 0);
  while (true) {
    int i = 0;
    while (i < n && x[i] == max_coeff) x[i++] = 0;
    if (i == n) break;
    ++x[i];
    int form = 0;
    for (int a = 0; a < n; ++a) {
      form += x[a] * x[a];
      for (int b = a + 1; b < n; ++b)
        if (q.adjacent(a, b)) form -= x[a] * x[b];
    }
    if (form == 1) out.insert(RootVector(x));
  }
  return out;
}

// All words of the given length over all bases that evaluate to w.
std::set<WeylWord> brute_words(const QuiverGraph& q, const RootVector& w, int length) {
  const int n = q.vertex_count();
  std::set<WeylWord> out;
  std::vector<int> letters(length, 0);
  for (int base = 0; base < n; ++base) {
    std::fill(letters.begin(), letters.end(), 0);
    while (true) {
      WeylWord word{base, letters};
      if (evaluate(q, word) == w) out.insert(word);
      int i = 0;
      while (i < length && letters[i] == n - 1) letters[i++] = 0;
      if (i == length) break;
      ++letters[i];
    }
  }
  return out;
}

RootVector rv(std::vector<int> c) { return RootVector(std::move(c)); }

}  // namespace

TEST_CASE("quiver parsing and validation") {
  const auto q = QuiverGraph::parse("# chain\n3\n1 2\n2 3\n");
  CHECK(q.vertex_count() == 3);
  CHECK(q.adjacent(0, 1));
  CHECK(q.adjacent(2, 1));
  CHECK_FALSE(q.adjacent(0, 2));
  CHECK(q == QuiverGraph::of_type("A3"));
  CHECK_THROWS_AS(QuiverGraph::parse("2\n1 1\n"), ConfigError);
  CHECK_THROWS_AS(QuiverGraph::parse("2\n1 3\n"), ConfigError);
  CHECK_THROWS_AS(QuiverGraph::parse("2\n1 2\n2 1\n"), ConfigError);
  CHECK_THROWS_AS(QuiverGraph::parse("two\n"), ConfigError);
  CHECK_THROWS_AS(QuiverGraph::parse(""), ConfigError);
  CHECK_THROWS_AS(QuiverGraph::of_type("A0"), ConfigError);
  CHECK_THROWS_AS(QuiverGraph::of_type("D3"), ConfigError);
  CHECK_THROWS_AS(QuiverGraph::of_type("E9"), ConfigError);
  CHECK_THROWS_AS(QuiverGraph::of_type("A99"), ConfigError);
  CHECK_THROWS_AS(QuiverGraph::of_type("B3"), ConfigError);
}

TEST_CASE("finite-type gate") {
  for (const char* t : {"A1", "A5", "D4", "D6", "E6", "E7", "E8"}) CHECK(QuiverGraph::of_type(t).is_finite_type());
  const auto affine_a2 = QuiverGraph::parse("3\n1 2\n2 3\n3 1\n");
  const auto affine_d4 = QuiverGraph::parse("5\n1 5\n2 5\n3 5\n4 5\n");
  CHECK_FALSE(affine_a2.is_finite_type());
  CHECK_FALSE(affine_d4.is_finite_type());
  CHECK_THROWS_AS(positive_roots(affine_a2), ConfigError);
  CHECK_THROWS_AS(positive_roots(affine_d4), ConfigError);
}

TEST_CASE("positive roots match the Tits-form enumeration") {
  for (const char* t : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6"}) {
    CAPTURE(t);
    const auto q = QuiverGraph::of_type(t);
    const auto roots = positive_roots(q);
    const std::set<RootVector> got(roots.begin(), roots.end());
    CHECK(got.size() == roots.size());
    CHECK(got == tits_roots(q, 3));
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].height() <= roots[i].height());
  }
}

TEST_CASE("positive root counts") {
  for (int n = 1; n <= 8; ++n)
    CHECK(positive_roots(QuiverGraph::of_type("A" + std::to_string(n))).size() == std::size_t(n * (n + 1) / 2));
  for (int n = 4; n <= 7; ++n)
    CHECK(positive_roots(QuiverGraph::of_type("D" + std::to_string(n))).size() == std::size_t(n * (n - 1)));
  CHECK(positive_roots(QuiverGraph::of_type("E6")).size() == 36);
  CHECK(positive_roots(QuiverGraph::of_type("E7")).size() == 63);
  CHECK(positive_roots(QuiverGraph::of_type("E8")).size() == 120);
}

TEST_CASE("cartan pairing and reflections") {
  const auto q = QuiverGraph::of_type("D4");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(cartan_pairing(q, RootVector::simple(4, i), RootVector::simple(4, j)) ==
            (i == j ? 2 : q.adjacent(i, j) ? -1 : 0));
  CHECK(reflect(q, RootVector::simple(4, 0), 0) == -RootVector::simple(4, 0));
  CHECK_THROWS_AS(cartan_pairing(q, rv({1, 0}), rv({1, 0, 0, 0})), PreconditionError);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3), vert(0, 3);
  for (int t = 0; t < 200; ++t) {
    const RootVector a = rv({coeff(rng), coeff(rng), coeff(rng), coeff(rng)});
    const RootVector b = rv({coeff(rng), coeff(rng), coeff(rng), coeff(rng)});
    const int i = vert(rng);
    CHECK(cartan_pairing(q, reflect(q, a, i), reflect(q, b, i)) == cartan_pairing(q, a, b));
    CHECK(reflect(q, reflect(q, a, i), i) == a);
  }
}

TEST_CASE("is_root") {
  const auto q = QuiverGraph::of_type("A3");
  CHECK(is_positive_root(q, rv({1, 1, 1})));
  CHECK(is_root(q, rv({-1, -1, 0})));
  CHECK_FALSE(is_positive_root(q, rv({-1, -1, 0})));
  CHECK_FALSE(is_root(q, rv({1, 0, 1})));
  CHECK_FALSE(is_root(q, rv({0, 0, 0})));
  CHECK_FALSE(is_root(q, rv({1, 2, 1})));
}

TEST_CASE("minimal_word examples") {
  const auto a2 = QuiverGraph::of_type("A2");
  CHECK(minimal_word(a2, rv({1, 1})) == WeylWord{1, {0}});
  CHECK(minimal_word(a2, rv({0, 1})) == WeylWord{1, {}});
  const auto a3 = QuiverGraph::of_type("A3");
  const auto w = minimal_word(a3, rv({1, 1, 1}));
  CHECK(w.letters.size() == 2);
  CHECK(evaluate(a3, w) == rv({1, 1, 1}));
  CHECK_THROWS_AS(minimal_word(a3, rv({1, 0, 1})), PreconditionError);
  CHECK_THROWS_AS(minimal_word(a3, rv({-1, 0, 0})), PreconditionError);
}

TEST_CASE("minimal words: length, evaluation and positivity") {
  for (const char* t : {"A1", "A2", "A3", "A4", "D4", "E6"}) {
    CAPTURE(t);
    const auto q = QuiverGraph::of_type(t);
    for (const auto& w : positive_roots(q)) {
      const WeylWord word = minimal_word(q, w);
      CHECK(evaluate(q, word) == w);
      // Simply-laced reflections move height by at most one.
      CHECK(int(word.letters.size()) == w.height() - 1);
      const auto seq = root_sequence(q, word);
      REQUIRE(seq.size() == word.letters.size() + 1);
      CHECK(seq.front() == w);
      for (const auto& r : seq) CHECK(is_positive_root(q, r));
    }
  }
}

TEST_CASE("all_minimal_words agrees with brute force") {
  for (const char* t : {"A3", "A4", "D4"}) {
    CAPTURE(t);
    const auto q = QuiverGraph::of_type(t);
    for (const auto& w : positive_roots(q)) {
      CAPTURE(to_string(w));
      const auto words = all_minimal_words(q, w);
      const std::set<WeylWord> got(words.begin(), words.end());
      CHECK(got.size() == words.size());
      CHECK(got == brute_words(q, w, w.height() - 1));
      CHECK(got.count(minimal_word(q, w)) == 1);
    }
  }
}

TEST_CASE("root_sequence examples") {
  const auto a3 = QuiverGraph::of_type("A3");
  CHECK(root_sequence(a3, WeylWord{1, {0, 2, 1}}) ==
        std::vector<RootVector>{rv({1, 1, 1}), rv({1, 1, 0}), rv({0, 1, 1}), rv({0, 1, 0})});
  CHECK(root_sequence(a3, WeylWord{2, {}}) == std::vector<RootVector>{rv({0, 0, 1})});
  const auto a2 = QuiverGraph::of_type("A2");
  CHECK(root_sequence(a2, WeylWord{1, {0}}) == std::vector<RootVector>{rv({1, 1}), rv({1, 0})});
}

TEST_CASE("root text form") {
  CHECK(to_string(rv({1, 1, 0})) == "a1+a2");
  CHECK(to_string(rv({1, 2, 1, 1})) == "a1+2a2+a3+a4");
  CHECK(to_string(rv({0, -1})) == "-a2");
  CHECK(to_string(rv({0, 0})) == "0");
}
