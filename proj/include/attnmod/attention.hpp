#ifndef ATTNMOD_ATTENTION_HPP
#define ATTNMOD_ATTENTION_HPP

#include <cmath>

#include "attnmod/softmax.hpp"
#include "attnmod/types.hpp"

namespace attnmod {

/// One head's Q/K/V triple over N = H*W patches.
template <typename Scalar>
struct SelfAttentionBatch {
  MatrixX<Scalar> Q;  // N x d_k
  MatrixX<Scalar> K;  // N x d_k
  MatrixX<Scalar> V;  // N x d_v

  Index patches() const { return Q.rows(); }
  Index head_dim() const { return Q.cols(); }
};

template <typename Scalar>
struct AttentionResult {
  MatrixX<Scalar> weights;  // N x N, rows on the simplex
  MatrixX<Scalar> output;   // N x d_v
};

/// softmax(Q K^T / (tau * sqrt(d_k))) V. With tau = 1 this is the plain
/// scaled dot-product kernel, bit for bit (same code path, exact division).
template <typename Scalar>
AttentionResult<Scalar> tempered_self_attention(const SelfAttentionBatch<Scalar>& batch,
                                                Scalar temperature) {
  if (batch.Q.rows() < 1 || batch.Q.cols() < 1) {
    throw ShapeMismatch("tempered_self_attention: empty Q");
  }
  if (batch.Q.cols() != batch.K.cols() || batch.Q.rows() != batch.K.rows() ||
      batch.K.rows() != batch.V.rows()) {
    throw ShapeMismatch("tempered_self_attention: Q/K/V shapes disagree");
  }
  if (!batch.V.allFinite()) {
    throw NonFiniteInput("tempered_self_attention: V contains non-finite entries");
  }
  const Scalar scale = std::sqrt(Scalar(batch.Q.cols()));
  MatrixX<Scalar> scores = batch.Q * batch.K.transpose();
  scores /= scale;
  AttentionResult<Scalar> result;
  result.weights = softmax_rows(scores, temperature);
  result.output = result.weights * batch.V;
  return result;
}

}  // namespace attnmod

#endif  // ATTNMOD_ATTENTION_HPP
