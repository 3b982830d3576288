#ifndef ATTNMOD_SYNTH_HPP
#define ATTNMOD_SYNTH_HPP

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "attnmod/attention.hpp"
#include "attnmod/field.hpp"
#include "attnmod/prompt.hpp"
#include "attnmod/rng.hpp"
#include "attnmod/types.hpp"

namespace attnmod {

/// Shape and texture of the synthetic attention generator.
struct SynthParams {
  Index height = 16;
  Index width = 16;
  Index tokens = 16;
  int heads = 4;
  Index head_dim = 32;
  std::uint64_t seed = 42;
  double floor_weight = 0.1;   // uniform mass on every prompt token
  double bump_weight = 1.0;    // Gaussian bump mass on entity tokens
  double sigma_frac = 0.18;    // bump stddev as a fraction of min(H, W)
  double jitter = 1.5;         // center jitter amplitude at theta = 0 (patches)
};

namespace synth_detail {

// PRNG stream ids; step-independent streams model per-trace draws.
inline constexpr std::uint64_t kCenterStream = 1;
inline constexpr std::uint64_t kTokenStream = 2;
inline constexpr std::uint64_t kJitterStream = 3;
inline constexpr std::uint64_t kSelfStream = 16;  // + head index

}  // namespace synth_detail

/// One spatial bump center per entity, drawn once per trace (step-invariant)
/// with rejection sampling toward pairwise separation.
inline std::vector<std::pair<double, double>> entity_centers(const SynthParams& params,
                                                             int entity_count) {
  Rng rng = Rng::derive(params.seed, synth_detail::kCenterStream, 0);
  const double min_sep =
      std::max(2.0, double(std::min(params.height, params.width)) /
                        (2.0 * std::max(entity_count, 1)));
  std::vector<std::pair<double, double>> centers;
  centers.reserve(entity_count);
  for (int i = 0; i < entity_count; ++i) {
    std::pair<double, double> c;
    for (int attempt = 0; attempt < 100; ++attempt) {
      c = {rng.uniform(0.0, double(params.height - 1)),
           rng.uniform(0.0, double(params.width - 1))};
      bool separated = true;
      for (const auto& prev : centers) {
        const double dh = c.first - prev.first;
        const double dw = c.second - prev.second;
        if (std::sqrt(dh * dh + dw * dw) < min_sep) {
          separated = false;
          break;
        }
      }
      if (separated) break;
    }
    centers.push_back(c);
  }
  return centers;
}

namespace synth_detail {

// 3x3 binomial blur with clamped borders, applied in place.
template <typename Scalar>
void blur_grid(MatrixX<Scalar>& grid) {
  const Index rows = grid.rows();
  const Index cols = grid.cols();
  MatrixX<Scalar> tmp(rows, cols);
  auto clamp = [](Index v, Index hi) { return v < 0 ? 0 : (v >= hi ? hi - 1 : v); };
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      Scalar acc = 0;
      static const int kW[3] = {1, 2, 1};
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          acc += Scalar(kW[dr + 1] * kW[dc + 1]) *
                 grid(clamp(r + dr, rows), clamp(c + dc, cols));
        }
      }
      tmp(r, c) = acc / Scalar(16);
    }
  }
  grid = tmp;
}

}  // namespace synth_detail

template <typename Scalar>
struct SynthResult {
  std::vector<SelfAttentionBatch<Scalar>> heads;
  AttentionField<Scalar> field;
};

/// Deterministic stand-in for a denoiser's attention inputs at one step.
///
/// The cross field is a mixture: every prompt token gets a uniform floor;
/// each entity's tokens additionally get a spatial Gaussian bump around the
/// entity's center, jittered per step with an amplitude that decays as
/// theta grows (layout settles early, details land late). Token slots past
/// the prompt stay zero. Self-attention Q/K/V are spatially smoothed noise
/// fields, one triple per head.
template <typename Scalar = double>
SynthResult<Scalar> synth_attention(const SynthParams& params, const ParsedPrompt& parse,
                                    int step, int total_steps) {
  const double theta = double(step) / double(total_steps);
  const Index patch_count = params.height * params.width;
  const int m = parse.entity_count();
  const int prompt_tokens = static_cast<int>(parse.tokens.size());

  SynthResult<Scalar> result;
  result.field = make_field<Scalar>(params.height, params.width, params.tokens);

  // Per-token bump gains, drawn once per trace.
  Rng token_rng = Rng::derive(params.seed, synth_detail::kTokenStream, 0);
  std::vector<double> token_gain(static_cast<size_t>(prompt_tokens), 1.0);
  for (auto& g : token_gain) g = token_rng.uniform(0.5, 1.5);

  const auto centers = entity_centers(params, m);
  Rng jitter_rng = Rng::derive(params.seed, synth_detail::kJitterStream,
                               static_cast<std::uint64_t>(step));
  const double amplitude = params.jitter * (1.0 - theta);
  std::vector<std::pair<double, double>> jittered(centers);
  for (auto& c : jittered) {
    c.first += amplitude * jitter_rng.normal();
    c.second += amplitude * jitter_rng.normal();
  }

  const double sigma =
      params.sigma_frac * double(std::min(params.height, params.width));
  for (Index h = 0; h < params.height; ++h) {
    for (Index w = 0; w < params.width; ++w) {
      const Index p = h * params.width + w;
      for (int t = 0; t < prompt_tokens && t < params.tokens; ++t) {
        double value = params.floor_weight;
        const int owner = parse.entity_of(t);
        if (owner >= 0) {
          const double dh = double(h) - jittered[static_cast<size_t>(owner)].first;
          const double dw = double(w) - jittered[static_cast<size_t>(owner)].second;
          const double bump = std::exp(-(dh * dh + dw * dw) / (2.0 * sigma * sigma));
          value += params.bump_weight * token_gain[static_cast<size_t>(t)] * bump;
        }
        result.field.values(p, t) = Scalar(value);
      }
    }
  }

  result.heads.reserve(static_cast<size_t>(params.heads));
  for (int head = 0; head < params.heads; ++head) {
    Rng self_rng = Rng::derive(params.seed, synth_detail::kSelfStream + head,
                               static_cast<std::uint64_t>(step));
    SelfAttentionBatch<Scalar> batch;
    auto smooth_matrix = [&](Index cols) {
      MatrixX<Scalar> out(patch_count, cols);
      for (Index c = 0; c < cols; ++c) {
        MatrixX<Scalar> grid(params.height, params.width);
        for (Index r = 0; r < params.height; ++r) {
          for (Index w = 0; w < params.width; ++w) grid(r, w) = Scalar(self_rng.normal());
        }
        synth_detail::blur_grid(grid);
        synth_detail::blur_grid(grid);
        for (Index r = 0; r < params.height; ++r) {
          for (Index w = 0; w < params.width; ++w) out(r * params.width + w, c) = grid(r, w);
        }
      }
      return out;
    };
    batch.Q = smooth_matrix(params.head_dim) * Scalar(3);
    batch.K = smooth_matrix(params.head_dim) * Scalar(3);
    batch.V = smooth_matrix(params.head_dim);
    result.heads.push_back(std::move(batch));
  }
  return result;
}

}  // namespace attnmod

#endif  // ATTNMOD_SYNTH_HPP
