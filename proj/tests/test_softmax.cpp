#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "attnmod/rng.hpp"
#include "attnmod/softmax.hpp"

using namespace attnmod;

namespace {

MatrixXd random_rows(std::uint64_t seed, Index rows, Index cols) {
  Rng rng(seed);
  MatrixXd m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = rng.normal();
  }
  return m;
}

Index argmax(const Eigen::Ref<const Eigen::RowVectorXd>& row) {
  Index best = 0;
  row.maxCoeff(&best);
  return best;
}

}  // namespace

TEST_CASE("softmax on a two-entry row") {
  MatrixXd row(1, 2);
  row << 0.0, std::log(3.0);
  const MatrixXd p1 = softmax_rows(row, 1.0);
  CHECK(p1(0, 0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(p1(0, 1) == doctest::Approx(0.75).epsilon(1e-12));

  // halving the temperature squares the odds ratio: 3 -> 9
  const MatrixXd p05 = softmax_rows(row, 0.5);
  CHECK(p05(0, 0) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(p05(0, 1) == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("constant row maps to the uniform distribution") {
  MatrixXd row = MatrixXd::Constant(1, 3, 7.25);
  for (double tau : {0.2, 1.0, 3.0}) {
    const MatrixXd p = softmax_rows(row, tau);
    for (Index i = 0; i < 3; ++i) CHECK(p(0, i) == doctest::Approx(1.0 / 3.0));
  }
}

TEST_CASE("softmax input validation") {
  MatrixXd row(1, 2);
  row << 1.0, 2.0;
  CHECK_THROWS_AS(softmax_rows(row, 0.0), NonPositiveTemperature);
  CHECK_THROWS_AS(softmax_rows(row, -1.0), NonPositiveTemperature);
  row(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(softmax_rows(row, 1.0), NonFiniteInput);
  row(0, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(softmax_rows(row, 1.0), NonFiniteInput);
}

TEST_CASE("every output row is a simplex vector") {
  const MatrixXd scores = random_rows(101, 40, 12);
  for (double tau : {0.05, 0.5, 1.0, 2.0}) {
    const MatrixXd p = softmax_rows(scores, tau);
    CHECK(p.minCoeff() >= 0.0);
    for (Index r = 0; r < p.rows(); ++r) {
      CHECK(std::abs(p.row(r).sum() - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("temperature law: smaller tau strictly lowers row entropy") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    MatrixXd row(1, 2 + int(rng.next() % 10));
    for (Index i = 0; i < row.cols(); ++i) row(0, i) = rng.normal();
    const double base = row_entropy(softmax_rows(row, 1.0).row(0).transpose());
    double previous = base;
    for (double tau : {0.9, 0.7, 0.4, 0.1}) {
      const double h = row_entropy(softmax_rows(row, tau).row(0).transpose());
      CHECK(h < previous);
      previous = h;
    }
  }
}

TEST_CASE("argmax is invariant under temperature") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    MatrixXd row(1, 2 + int(rng.next() % 10));
    for (Index i = 0; i < row.cols(); ++i) row(0, i) = rng.normal();
    const Index expected = argmax(row.row(0));
    for (double tau : {0.05, 0.5, 1.0, 4.0}) {
      CHECK(argmax(softmax_rows(row, tau).row(0)) == expected);
    }
  }
}

TEST_CASE("shift invariance") {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const MatrixXd row = random_rows(1000 + std::uint64_t(trial), 1, 6);
    const double shift = rng.uniform(-50.0, 50.0);
    const MatrixXd a = softmax_rows(row, 0.7);
    const MatrixXd b = softmax_rows((row.array() + shift).matrix(), 0.7);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("entropy basics") {
  VectorXd point(3);
  point << 1.0, 0.0, 0.0;
  CHECK(row_entropy(point) == 0.0);

  VectorXd uniform = VectorXd::Constant(4, 0.25);
  CHECK(row_entropy(uniform) == doctest::Approx(std::log(4.0)).epsilon(1e-12));

  VectorXd skew(2);
  skew << 0.1, 0.9;
  CHECK(row_entropy(skew) == doctest::Approx(0.3251).epsilon(1e-4 / 0.3251));
}

TEST_CASE("entropy rejects non-distributions") {
  VectorXd bad(2);
  bad << 0.5, 0.4;
  CHECK_THROWS_AS(row_entropy(bad), NotNormalized);
  bad << -0.1, 1.1;
  CHECK_THROWS_AS(row_entropy(bad), NotNormalized);
  VectorXd empty(0);
  CHECK_THROWS_AS(row_entropy(empty), NotNormalized);
}

TEST_CASE("entropy is bounded by log of the support size") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + Index(rng.next() % 16);
    VectorXd p(n);
    double sum = 0;
    for (Index i = 0; i < n; ++i) {
      p(i) = rng.uniform();
      sum += p(i);
    }
    p /= sum;
    p(n - 1) += 1.0 - p.sum();  // pin the sum inside the 1e-9 budget
    const double h = row_entropy(p);
    CHECK(h >= 0.0);
    CHECK(h <= std::log(double(n)) + 1e-12);
  }
}
