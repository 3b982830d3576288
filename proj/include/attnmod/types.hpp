#ifndef ATTNMOD_TYPES_HPP
#define ATTNMOD_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace attnmod {

using Index = Eigen::Index;

// Patch-major dense storage: one row per spatial patch, rows contiguous in
// memory. Matches the row-major payload of the ATNF interchange format.
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// A single patch's token distribution (one row of a normalized field).
template <typename Scalar>
using PatchDistribution = VectorX<Scalar>;

using MatrixXd = MatrixX<double>;
using VectorXd = VectorX<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyPrompt : Error { using Error::Error; };
struct NoEntityFound : Error { using Error::Error; };
struct NonPositiveTemperature : Error { using Error::Error; };
struct NonFiniteInput : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct ZeroRow : Error { using Error::Error; };
struct SpanOutOfRange : Error { using Error::Error; };
struct SingleEntity : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace attnmod

#endif  // ATTNMOD_TYPES_HPP
