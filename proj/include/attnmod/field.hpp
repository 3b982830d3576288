#ifndef ATTNMOD_FIELD_HPP
#define ATTNMOD_FIELD_HPP

#include "attnmod/types.hpp"

namespace attnmod {

/// Cross-attention values over an H x W patch grid and T token slots.
/// Stored patch-major: row h*W + w holds the token distribution of patch
/// (h, w). `normalized` marks that every patch row sums to 1.
template <typename Scalar>
struct AttentionField {
  Index height = 0;
  Index width = 0;
  Index tokens = 0;
  MatrixX<Scalar> values;  // (height*width) x tokens
  bool normalized = false;

  Index patches() const { return height * width; }

  Scalar& at(Index h, Index w, Index t) { return values(h * width + w, t); }
  Scalar at(Index h, Index w, Index t) const { return values(h * width + w, t); }
};

template <typename Scalar>
AttentionField<Scalar> make_field(Index height, Index width, Index tokens) {
  AttentionField<Scalar> f;
  f.height = height;
  f.width = width;
  f.tokens = tokens;
  f.values = MatrixX<Scalar>::Zero(height * width, tokens);
  return f;
}

/// Divides every patch row by its sum so each row is a token distribution.
/// Row sums are accumulated left to right; the naive oracle does the same,
/// which keeps the two pipelines bitwise comparable.
template <typename Scalar>
AttentionField<Scalar> normalize_field(const AttentionField<Scalar>& field) {
  AttentionField<Scalar> out = field;
  for (Index p = 0; p < out.values.rows(); ++p) {
    Scalar sum = 0;
    for (Index t = 0; t < out.values.cols(); ++t) sum += out.values(p, t);
    if (!(sum > Scalar(0))) {
      throw ZeroRow("normalize_field: patch row " + std::to_string(p) +
                    " has non-positive sum");
    }
    out.values.row(p) /= sum;
  }
  out.normalized = true;
  return out;
}

}  // namespace attnmod

#endif  // ATTNMOD_FIELD_HPP
