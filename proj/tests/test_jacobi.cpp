#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "slx/jacobi.hpp"

using namespace slx;

namespace {

DenseMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

}  // namespace

TEST_CASE("2x2 closed form") {
  DenseMatrix a(2);
  a(0, 0) = 1.5;
  a(1, 1) = 1.5;
  a(0, 1) = a(1, 0) = 8e-5;
  const Eigensystem es = jacobi_eigensystem(a);
  CHECK(es.values[0] == doctest::Approx(1.5 - 8e-5).epsilon(1e-15));
  CHECK(es.values[1] == doctest::Approx(1.5 + 8e-5).epsilon(1e-15));
  CHECK(std::abs(std::abs(es.vectors(0, 0)) - std::sqrt(0.5)) < 1e-15);
}

TEST_CASE("diagonal input is returned sorted") {
  DenseMatrix a(4);
  const double d[] = {3.0, -1.0, 2.0, 0.5};
  for (std::size_t i = 0; i < 4; ++i) a(i, i) = d[i];
  const Eigensystem es = jacobi_eigensystem(a);
  CHECK(es.values == std::vector<double>{-1.0, 0.5, 2.0, 3.0});
  CHECK(eigen_residual(a, es) == 0.0);
}

TEST_CASE("random symmetric matrices") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 3u, 8u, 25u, 60u}) {
    const DenseMatrix a = random_symmetric(n, rng);
    const Eigensystem es = jacobi_eigensystem(a);
    CHECK(std::is_sorted(es.values.begin(), es.values.end()));
    CHECK(eigen_residual(a, es) < 1e-12 * static_cast<double>(n));
    double sum = 0.0;
    for (double v : es.values) sum += v;
    CHECK(std::abs(sum - a.trace()) < 1e-12 * static_cast<double>(n));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        double dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += es.vectors(r, p) * es.vectors(r, q);
        CHECK(std::abs(dot - (p == q ? 1.0 : 0.0)) < 1e-12);
      }
  }
}

TEST_CASE("clustered spectrum with a large diagonal offset") {
  // Same structure as the paulion sectors: huge common diagonal, tiny couplings.
  std::mt19937_64 rng(11);
  DenseMatrix a = random_symmetric(30, rng);
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = 0; j < 30; ++j) a(i, j) = (i == j ? 3.0 : 0.0) + 1e-7 * a(i, j);
  const Eigensystem es = jacobi_eigensystem(a);
  CHECK(eigen_residual(a, es) < 1e-14);
}

TEST_CASE("asymmetric input is symmetrized") {
  DenseMatrix a(2);
  a(0, 1) = 2.0;
  a(1, 0) = 0.0;
  CHECK(a.asymmetry() == 2.0);
  const Eigensystem es = jacobi_eigensystem(a);
  CHECK(es.values[0] == doctest::Approx(-1.0));
  CHECK(es.values[1] == doctest::Approx(1.0));
}
