#include "attnmod/tensor_io.hpp"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "attnmod/hash.hpp"

namespace attnmod {

namespace {

void append_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>((v >> 16) & 0xFF));
  out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

void append_f64(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
  }
}

std::uint32_t take_u32(const std::string& in, size_t& pos) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= std::uint32_t(static_cast<unsigned char>(in[pos++])) << (8 * i);
  }
  return v;
}

double take_f64(const std::string& in, size_t& pos) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) {
    bits |= std::uint64_t(static_cast<unsigned char>(in[pos++])) << (8 * i);
  }
  double v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return bytes;
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("rename failed: " + path);
  }
}

void write_tensor(const std::string& path, const TensorData& tensor) {
  std::uint64_t count = 1;
  for (std::uint32_t d : tensor.dims) count *= d;
  if (count != tensor.values.size()) {
    throw IoError("write_tensor: dims do not match payload size");
  }
  std::string bytes;
  bytes.reserve(8 + 4 * tensor.dims.size() + 8 * tensor.values.size());
  bytes += "ATNF";
  append_u32(bytes, static_cast<std::uint32_t>(tensor.dims.size()));
  for (std::uint32_t d : tensor.dims) append_u32(bytes, d);
  for (double v : tensor.values) append_f64(bytes, v);
  write_file_atomic(path, bytes);
}

TensorData read_tensor(const std::string& path) {
  const std::string bytes = read_all(path);
  if (bytes.size() < 8 || bytes.compare(0, 4, "ATNF") != 0) {
    throw IoError("not an ATNF tensor: " + path);
  }
  size_t pos = 4;
  TensorData tensor;
  const std::uint32_t rank = take_u32(bytes, pos);
  if (rank > 8) throw IoError("ATNF rank too large: " + path);
  if (bytes.size() < 8 + 4ull * rank) throw IoError("truncated ATNF header: " + path);
  std::uint64_t count = 1;
  tensor.dims.resize(rank);
  for (std::uint32_t& d : tensor.dims) {
    d = take_u32(bytes, pos);
    count *= d;
  }
  if (bytes.size() != pos + 8 * count) {
    throw IoError("ATNF payload size mismatch: " + path);
  }
  tensor.values.resize(count);
  for (double& v : tensor.values) v = take_f64(bytes, pos);
  return tensor;
}

void write_field(const std::string& path, const AttentionField<double>& field) {
  TensorData tensor;
  tensor.dims = {static_cast<std::uint32_t>(field.height),
                 static_cast<std::uint32_t>(field.width),
                 static_cast<std::uint32_t>(field.tokens)};
  tensor.values.assign(field.values.data(),
                       field.values.data() + field.values.size());
  write_tensor(path, tensor);
}

AttentionField<double> read_field(const std::string& path) {
  const TensorData tensor = read_tensor(path);
  if (tensor.dims.size() != 3) {
    throw IoError("expected a rank-3 field tensor: " + path);
  }
  AttentionField<double> field =
      make_field<double>(tensor.dims[0], tensor.dims[1], tensor.dims[2]);
  std::memcpy(field.values.data(), tensor.values.data(),
              tensor.values.size() * sizeof(double));
  return field;
}

void write_matrix(const std::string& path, const MatrixXd& matrix) {
  TensorData tensor;
  tensor.dims = {static_cast<std::uint32_t>(matrix.rows()),
                 static_cast<std::uint32_t>(matrix.cols())};
  tensor.values.assign(matrix.data(), matrix.data() + matrix.size());
  write_tensor(path, tensor);
}

MatrixXd read_matrix(const std::string& path) {
  const TensorData tensor = read_tensor(path);
  if (tensor.dims.size() != 2) {
    throw IoError("expected a rank-2 tensor: " + path);
  }
  MatrixXd matrix(tensor.dims[0], tensor.dims[1]);
  std::memcpy(matrix.data(), tensor.values.data(),
              tensor.values.size() * sizeof(double));
  return matrix;
}

std::uint64_t fnv1a64_file(const std::string& path) {
  const std::string bytes = read_all(path);
  return fnv1a64(bytes.data(), bytes.size());
}

}  // namespace attnmod
