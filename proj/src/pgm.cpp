#include "attnmod/pgm.hpp"

#include <cmath>

#include "attnmod/tensor_io.hpp"

namespace attnmod {

std::string encode_pgm(const MatrixXd& slice) {
  if (slice.size() == 0 || !slice.allFinite()) {
    throw NonFiniteInput("encode_pgm: slice must be non-empty and finite");
  }
  const double lo = slice.minCoeff();
  const double hi = slice.maxCoeff();
  std::string bytes = "P5\n" + std::to_string(slice.cols()) + " " +
                      std::to_string(slice.rows()) + "\n255\n";
  bytes.reserve(bytes.size() + static_cast<size_t>(slice.size()));
  for (Index r = 0; r < slice.rows(); ++r) {
    for (Index c = 0; c < slice.cols(); ++c) {
      long pixel = 128;
      if (hi > lo) {
        pixel = std::lround((slice(r, c) - lo) / (hi - lo) * 255.0);
        if (pixel < 0) pixel = 0;
        if (pixel > 255) pixel = 255;
      }
      bytes.push_back(static_cast<char>(static_cast<unsigned char>(pixel)));
    }
  }
  return bytes;
}

void render_heatmap(const MatrixXd& slice, const std::string& path) {
  write_file_atomic(path, encode_pgm(slice));
}

}  // namespace attnmod
