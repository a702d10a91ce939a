#include <doctest.h>

#include <random>

#include "cy2/error.hpp"
#include "cy2/linalg.hpp"
#include "cy2/rational.hpp"

using namespace cy2;

TEST_CASE("rational text") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  Rational half(-2, 4);
  half.canonicalize();
  CHECK(to_string(half) == "-1/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("x"), ConfigError);
}

TEST_CASE("complex helpers") {
  const Complex z(Rational(-1), Rational(1, 2));
  CHECK(in_upper_half_plane(z));
  CHECK(in_upper_half_plane(Complex(2, 0)));
  CHECK_FALSE(in_upper_half_plane(Complex(-2, 0)));
  CHECK_FALSE(in_upper_half_plane(Complex(0, 0)));
  CHECK_FALSE(in_upper_half_plane(Complex(1, -1)));
  CHECK(cross(Complex(1, 0), Complex(0, 1)) == 1);
  CHECK((z * z.conj()).im == 0);
}

namespace {

// Dense Gaussian elimination oracle for rank.
std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && m[i][c] != 0) {
        const Rational f = m[i][c] / m[r][c];
        for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
      }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("sparse rank and kernel against dense elimination") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> val(-2, 2), size(1, 7);
  for (int t = 0; t < 200; ++t) {
    const int rows = size(rng), cols = size(rng);
    std::vector<std::vector<Rational>> dense(cols, std::vector<Rational>(rows));
    std::vector<linalg::SparseVector> columns(cols);
    for (int c = 0; c < cols; ++c)
      for (int r = 0; r < rows; ++r) {
        const int v = (rng() % 3 == 0) ? val(rng) : 0;
        dense[c][r] = v;
        if (v != 0) columns[c].emplace_back(r, Rational(v));
      }
    const std::size_t rk = dense_rank(dense);
    CHECK(linalg::rank(columns) == rk);
    const auto ker = linalg::kernel(columns);
    CHECK(ker.size() == std::size_t(cols) - rk);
    for (const auto& k : ker) {
      std::vector<Rational> sum(rows);
      for (const auto& [c, coeff] : k)
        for (const auto& [r, x] : columns[c]) sum[r] += coeff * x;
      for (const auto& s : sum) CHECK(s == 0);
    }
  }
}
