#ifndef ATTNMOD_SOFTMAX_HPP
#define ATTNMOD_SOFTMAX_HPP

#include <cmath>

#include "attnmod/types.hpp"

namespace attnmod {

/// Row-wise softmax with temperature. The temperature divides the scores
/// before exponentiation; rows are stabilized by max subtraction so small
/// temperatures do not overflow.
template <typename Derived>
MatrixX<typename Derived::Scalar> softmax_rows(const Eigen::MatrixBase<Derived>& scores,
                                               typename Derived::Scalar temperature) {
  using Scalar = typename Derived::Scalar;
  if (!(temperature > Scalar(0))) {
    throw NonPositiveTemperature("softmax_rows: temperature must be > 0");
  }
  MatrixX<Scalar> z = scores.derived();
  if (!z.allFinite()) {
    throw NonFiniteInput("softmax_rows: scores contain non-finite entries");
  }
  z /= temperature;
  for (Index r = 0; r < z.rows(); ++r) {
    const Scalar m = z.row(r).maxCoeff();
    z.row(r) = (z.row(r).array() - m).exp();
    z.row(r) /= z.row(r).sum();
  }
  return z;
}

/// Shannon entropy in nats of a probability row, with the 0*ln(0) = 0
/// convention. Rejects inputs that are not on the simplex (1e-9 budget).
template <typename Derived>
typename Derived::Scalar row_entropy(const Eigen::MatrixBase<Derived>& probs) {
  using Scalar = typename Derived::Scalar;
  const auto& p = probs.derived();
  if (p.size() == 0 || p.minCoeff() < Scalar(0) ||
      std::abs(double(p.sum()) - 1.0) > 1e-9) {
    throw NotNormalized("row_entropy: input is not a probability distribution");
  }
  Scalar h = 0;
  for (Index i = 0; i < p.size(); ++i) {
    const Scalar v = p(i);
    if (v > Scalar(0)) h -= v * std::log(v);
  }
  return h;
}

}  // namespace attnmod

#endif  // ATTNMOD_SOFTMAX_HPP
