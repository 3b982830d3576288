#ifndef ATTNMOD_TENSOR_IO_HPP
#define ATTNMOD_TENSOR_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "attnmod/field.hpp"
#include "attnmod/types.hpp"

namespace attnmod {

/// ATNF interchange format: "ATNF" magic, u32 rank, u32 dims, f64 payload,
/// row-major, everything little-endian.
struct TensorData {
  std::vector<std::uint32_t> dims;
  std::vector<double> values;  // product(dims) entries, row-major
};

void write_tensor(const std::string& path, const TensorData& tensor);
TensorData read_tensor(const std::string& path);

void write_field(const std::string& path, const AttentionField<double>& field);
AttentionField<double> read_field(const std::string& path);

void write_matrix(const std::string& path, const MatrixXd& matrix);
MatrixXd read_matrix(const std::string& path);

/// Serializes to a private temp file in the target directory, then renames.
void write_file_atomic(const std::string& path, const std::string& bytes);

}  // namespace attnmod

#endif  // ATTNMOD_TENSOR_IO_HPP
