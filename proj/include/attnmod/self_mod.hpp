#ifndef ATTNMOD_SELF_MOD_HPP
#define ATTNMOD_SELF_MOD_HPP

#include <vector>

#include "attnmod/attention.hpp"
#include "attnmod/types.hpp"

namespace attnmod {

/// Temperature control for self-attention, active only inside the early
/// gate window [gate_start, gate_end) of the trajectory fraction.
struct SelfModConfig {
  double tau = 0.8;
  double gate_start = 0.0;
  double gate_end = 0.3;
  bool enabled = true;

  void validate() const {
    if (!(tau > 0)) throw ConfigError("self_mod.tau: must be > 0");
    if (!(gate_start >= 0 && gate_start < gate_end && gate_end <= 1)) {
      throw ConfigError("self_mod.gate_start/gate_end: need 0 <= start < end <= 1");
    }
  }
};

/// tau inside the gate window, 1 otherwise (or when disabled).
inline double effective_temperature(const SelfModConfig& config, double theta) {
  if (config.enabled && theta >= config.gate_start && theta < config.gate_end) {
    return config.tau;
  }
  return 1.0;
}

/// Outside the window this runs the identical kernel with tau = 1, so the
/// passthrough is exact, not approximate.
template <typename Scalar>
AttentionResult<Scalar> modulate_self_attention(const SelfAttentionBatch<Scalar>& batch,
                                                const SelfModConfig& config,
                                                double theta) {
  return tempered_self_attention(batch, Scalar(effective_temperature(config, theta)));
}

/// Per-head application: the temperature acts on each Q/K/V triple before
/// any head merge.
template <typename Scalar>
std::vector<AttentionResult<Scalar>> modulate_self_attention(
    const std::vector<SelfAttentionBatch<Scalar>>& heads, const SelfModConfig& config,
    double theta) {
  std::vector<AttentionResult<Scalar>> results;
  results.reserve(heads.size());
  for (const auto& head : heads) {
    results.push_back(modulate_self_attention(head, config, theta));
  }
  return results;
}

}  // namespace attnmod

#endif  // ATTNMOD_SELF_MOD_HPP
