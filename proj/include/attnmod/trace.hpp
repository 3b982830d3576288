#ifndef ATTNMOD_TRACE_HPP
#define ATTNMOD_TRACE_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "attnmod/cross_mod.hpp"
#include "attnmod/lexicon.hpp"
#include "attnmod/metrics.hpp"
#include "attnmod/parser.hpp"
#include "attnmod/self_mod.hpp"
#include "attnmod/synth.hpp"
#include "attnmod/types.hpp"

namespace attnmod {

/// One self-contained toy run: the synthesizer stands in for the denoiser
/// and both modulators act on its attention tensors step by step.
struct TraceConfig {
  SynthParams synth;           // grid, token capacity, heads, seed, texture
  int steps = 30;
  SelfModConfig self_mod;
  CrossModConfig cross_mod;
  std::string prompt = "a boy in front of a female";

  Index height() const { return synth.height; }
  Index width() const { return synth.width; }
  Index tokens() const { return synth.tokens; }
  std::uint64_t seed() const { return synth.seed; }

  void validate() const {
    if (synth.height < 1) throw ConfigError("trace.height: must be >= 1");
    if (synth.width < 1) throw ConfigError("trace.width: must be >= 1");
    if (synth.tokens < 1) throw ConfigError("trace.tokens: must be >= 1");
    if (synth.heads < 1) throw ConfigError("trace.heads: must be >= 1");
    if (synth.head_dim < 1) throw ConfigError("trace.head_dim: must be >= 1");
    if (steps < 1) throw ConfigError("trace.steps: must be >= 1");
    if (synth.floor_weight < 0) throw ConfigError("trace.floor_weight: must be >= 0");
    if (synth.bump_weight < 0) throw ConfigError("trace.bump_weight: must be >= 0");
    if (prompt.empty()) throw ConfigError("trace.prompt: must be non-empty");
    self_mod.validate();
    cross_mod.validate();
  }
};

template <typename Scalar>
struct StepRecord {
  int step = 0;
  double theta = 0.0;
  std::vector<MatrixX<Scalar>> self_weights;  // one N x N matrix per head
  AttentionField<Scalar> raw_field;
  AttentionField<Scalar> mod_field;
  LeakageReport raw_report;
  LeakageReport mod_report;
};

template <typename Scalar>
struct TraceResult {
  ParsedPrompt parse;
  std::vector<StepRecord<Scalar>> steps;
  std::int64_t attention_ns = 0;  // modulation + attention kernels only
  std::int64_t synth_ns = 0;
};

/// Runs the full per-step loop: synthesize, self-modulate each head,
/// cross-modulate, collect metrics. Only the attention path is counted in
/// attention_ns; synthesis and metrics are excluded.
template <typename Scalar = double>
TraceResult<Scalar> run_trace(const TraceConfig& config,
                              const Lexicon& lexicon = Lexicon::builtin(),
                              const ParserOptions& options = {}) {
  config.validate();
  TraceResult<Scalar> result;
  result.parse = parse_prompt(config.prompt, lexicon, options);
  if (static_cast<Index>(result.parse.tokens.size()) > config.tokens()) {
    throw ConfigError("trace.tokens (" + std::to_string(config.tokens()) +
                      ") smaller than prompt token count (" +
                      std::to_string(result.parse.tokens.size()) + ")");
  }

  using Clock = std::chrono::steady_clock;
  std::optional<PatchAssignment> frozen;
  result.steps.reserve(static_cast<size_t>(config.steps));
  for (int step = 0; step < config.steps; ++step) {
    const double theta = double(step) / double(config.steps);

    const auto synth_begin = Clock::now();
    SynthResult<Scalar> synth =
        synth_attention<Scalar>(config.synth, result.parse, step, config.steps);
    result.synth_ns +=
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - synth_begin)
            .count();

    StepRecord<Scalar> record;
    record.step = step;
    record.theta = theta;
    record.raw_field = synth.field;

    const bool freezing = config.cross_mod.freeze_after >= 0.0 &&
                          config.cross_mod.mode != CrossMode::Off &&
                          config.cross_mod.mode != CrossMode::ReweightOnly;
    const auto attn_begin = Clock::now();
    record.self_weights.reserve(synth.heads.size());
    for (const auto& head : synth.heads) {
      record.self_weights.push_back(
          modulate_self_attention(head, config.self_mod, theta).weights);
    }
    const PatchAssignment* reuse =
        (freezing && frozen && theta > config.cross_mod.freeze_after) ? &*frozen
                                                                      : nullptr;
    record.mod_field =
        modulate_cross_attention(record.raw_field, result.parse, config.cross_mod,
                                 theta, reuse);
    result.attention_ns +=
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - attn_begin)
            .count();

    if (freezing && theta <= config.cross_mod.freeze_after) {
      frozen = compute_assignment(record.raw_field, result.parse);
    }

    record.raw_report = make_leakage_report(record.raw_field, result.parse,
                                            record.self_weights.front());
    record.mod_report = make_leakage_report(record.mod_field, result.parse,
                                            record.self_weights.front());
    result.steps.push_back(std::move(record));
  }
  return result;
}

struct OverheadReport {
  std::int64_t modulated_ns = 0;  // median attention-path time, modulation on
  std::int64_t baseline_ns = 0;   // median attention-path time, modulation off
  double ratio = 0.0;
};

TraceConfig ablation_baseline(TraceConfig config);

/// Median-of-9 attention-path timing of the given config against the same
/// config with every modulation switched off.
template <typename Scalar = double>
OverheadReport overhead_report(const TraceConfig& config, int repetitions = 9) {
  const TraceConfig baseline = ablation_baseline(config);
  auto median_time = [&](const TraceConfig& c) {
    std::vector<std::int64_t> times;
    times.reserve(static_cast<size_t>(repetitions));
    for (int i = 0; i < repetitions; ++i) {
      times.push_back(run_trace<Scalar>(c).attention_ns);
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
  };
  run_trace<Scalar>(baseline);  // warm-up, not counted

  OverheadReport report;
  report.modulated_ns = median_time(config);
  report.baseline_ns = median_time(baseline);
  report.ratio = double(report.modulated_ns) / double(report.baseline_ns);
  return report;
}

enum class AblationArm { Baseline, SelfOnly, MaskOnly, ReweightOnly, Full };

const char* ablation_arm_name(AblationArm arm);
TraceConfig ablation_config(TraceConfig config, AblationArm arm);

}  // namespace attnmod

#endif  // ATTNMOD_TRACE_HPP
