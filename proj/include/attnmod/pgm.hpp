#ifndef ATTNMOD_PGM_HPP
#define ATTNMOD_PGM_HPP

#include <string>

#include "attnmod/types.hpp"

namespace attnmod {

/// Writes an H x W slice as a binary 8-bit PGM (P5), min-max normalized per
/// slice; a constant slice renders as mid-gray 128. The write is atomic.
void render_heatmap(const MatrixXd& slice, const std::string& path);

/// The PGM bytes without touching the filesystem (golden tests).
std::string encode_pgm(const MatrixXd& slice);

}  // namespace attnmod

#endif  // ATTNMOD_PGM_HPP
