#ifndef ATTNMOD_CROSS_MOD_HPP
#define ATTNMOD_CROSS_MOD_HPP

#include <string>

#include "attnmod/field.hpp"
#include "attnmod/prompt.hpp"
#include "attnmod/schedule.hpp"
#include "attnmod/types.hpp"

namespace attnmod {

/// Per-patch attention mass of each entity group: scores(p, i) is the sum
/// of the field over entity i's token span at patch p.
template <typename Scalar>
struct EntityScoreMap {
  Index height = 0;
  Index width = 0;
  MatrixX<Scalar> scores;  // (height*width) x m
};

/// winner(p) is the entity index holding the most mass at patch p.
struct PatchAssignment {
  Index height = 0;
  Index width = 0;
  Eigen::VectorXi winner;
};

/// Binary token mask: 1 on the winning entity's span and on all other
/// spans, 0 everywhere else (including padding slots).
template <typename Scalar>
struct ObjectMask {
  Index height = 0;
  Index width = 0;
  Index tokens = 0;
  MatrixX<Scalar> mask;  // entries are exactly 0 or 1
};

/// Three-valued mask: f_entity(theta) on the winning span, f_other(theta)
/// on other spans, 0 elsewhere.
template <typename Scalar>
struct WeightedMask {
  Index height = 0;
  Index width = 0;
  Index tokens = 0;
  double theta = 0.0;
  MatrixX<Scalar> mask;
};

enum class CrossMode { Off, MaskOnly, ReweightOnly, Both };

const char* cross_mode_name(CrossMode mode);
CrossMode cross_mode_from_name(const std::string& name);  // throws ConfigError

struct CrossModConfig {
  CrossMode mode = CrossMode::Both;
  PhaseSchedule schedule;
  bool renormalize = false;     // experimental: renormalize rows after masking
  double freeze_after = -1.0;   // experimental: freeze the patch assignment
                                // once theta exceeds this; negative disables

  void validate() const {
    schedule.validate();
    if (freeze_after > 1.0) {
      throw ConfigError("cross_mod.freeze_after: must be <= 1 (or negative to disable)");
    }
  }
};

namespace detail {

template <typename Scalar>
void check_spans(const ParsedPrompt& parse, Index tokens, const char* who) {
  if (parse.entities.empty()) {
    throw SpanOutOfRange(std::string(who) + ": parse carries no entities");
  }
  for (const EntityGroup& e : parse.entities) {
    if (e.span.start < 0 || e.span.end > tokens) {
      throw SpanOutOfRange(std::string(who) + ": entity span [" +
                           std::to_string(e.span.start) + "," +
                           std::to_string(e.span.end) + ") exceeds token length " +
                           std::to_string(tokens));
    }
  }
  for (int t : parse.other_spans) {
    if (t < 0 || t >= tokens) {
      throw SpanOutOfRange(std::string(who) + ": other-span index " +
                           std::to_string(t) + " exceeds token length " +
                           std::to_string(tokens));
    }
  }
}

}  // namespace detail

/// Entity-group mass per patch. Sums run left to right over each span; no
/// normalization across entities happens here.
template <typename Scalar>
EntityScoreMap<Scalar> entity_scores(const AttentionField<Scalar>& field,
                                     const ParsedPrompt& parse) {
  detail::check_spans<Scalar>(parse, field.tokens, "entity_scores");
  const Index m = parse.entity_count();
  EntityScoreMap<Scalar> map;
  map.height = field.height;
  map.width = field.width;
  map.scores.resize(field.patches(), m);
  for (Index p = 0; p < field.patches(); ++p) {
    for (Index i = 0; i < m; ++i) {
      const TokenSpan span = parse.entities[i].span;
      Scalar s = 0;
      for (int t = span.start; t < span.end; ++t) s += field.values(p, t);
      map.scores(p, i) = s;
    }
  }
  return map;
}

/// Per-patch argmax over entity scores; ties break toward the lowest entity
/// index (document order).
template <typename Scalar>
PatchAssignment assign_patches(const EntityScoreMap<Scalar>& scores) {
  PatchAssignment assign;
  assign.height = scores.height;
  assign.width = scores.width;
  assign.winner.resize(scores.scores.rows());
  for (Index p = 0; p < scores.scores.rows(); ++p) {
    int best = 0;
    for (Index i = 1; i < scores.scores.cols(); ++i) {
      if (scores.scores(p, i) > scores.scores(p, best)) best = static_cast<int>(i);
    }
    assign.winner(p) = best;
  }
  return assign;
}

template <typename Scalar>
ObjectMask<Scalar> build_object_mask(const PatchAssignment& assign,
                                     const ParsedPrompt& parse, Index tokens) {
  detail::check_spans<Scalar>(parse, tokens, "build_object_mask");
  ObjectMask<Scalar> result;
  result.height = assign.height;
  result.width = assign.width;
  result.tokens = tokens;
  result.mask = MatrixX<Scalar>::Zero(assign.winner.size(), tokens);
  for (Index p = 0; p < assign.winner.size(); ++p) {
    const TokenSpan span = parse.entities[assign.winner(p)].span;
    for (int t = span.start; t < span.end; ++t) result.mask(p, t) = Scalar(1);
    for (int t : parse.other_spans) result.mask(p, t) = Scalar(1);
  }
  return result;
}

/// Elementwise product with the binary mask. The result is deliberately not
/// renormalized; the `normalized` flag is cleared.
template <typename Scalar>
AttentionField<Scalar> apply_mask(const AttentionField<Scalar>& field,
                                  const ObjectMask<Scalar>& mask) {
  if (field.height != mask.height || field.width != mask.width ||
      field.tokens != mask.tokens) {
    throw ShapeMismatch("apply_mask: field and mask shapes disagree");
  }
  AttentionField<Scalar> out = field;
  out.values = field.values.cwiseProduct(mask.mask);
  out.normalized = false;
  return out;
}

template <typename Scalar>
WeightedMask<Scalar> build_weighted_mask(const PatchAssignment& assign,
                                         const ParsedPrompt& parse, Index tokens,
                                         const PhaseSchedule& schedule, double theta) {
  detail::check_spans<Scalar>(parse, tokens, "build_weighted_mask");
  const ScheduleWeights w = schedule_weights(schedule, theta);
  WeightedMask<Scalar> result;
  result.height = assign.height;
  result.width = assign.width;
  result.tokens = tokens;
  result.theta = theta;
  result.mask = MatrixX<Scalar>::Zero(assign.winner.size(), tokens);
  for (Index p = 0; p < assign.winner.size(); ++p) {
    const TokenSpan span = parse.entities[assign.winner(p)].span;
    for (int t = span.start; t < span.end; ++t) result.mask(p, t) = Scalar(w.entity);
    for (int t : parse.other_spans) result.mask(p, t) = Scalar(w.other);
  }
  return result;
}

template <typename Scalar>
AttentionField<Scalar> apply_weighted_mask(const AttentionField<Scalar>& field,
                                           const WeightedMask<Scalar>& mask) {
  if (field.height != mask.height || field.width != mask.width ||
      field.tokens != mask.tokens) {
    throw ShapeMismatch("apply_weighted_mask: field and mask shapes disagree");
  }
  AttentionField<Scalar> out = field;
  out.values = field.values.cwiseProduct(mask.mask);
  out.normalized = false;
  return out;
}

/// Shortcut for the assignment stage: normalize, score, argmax.
template <typename Scalar>
PatchAssignment compute_assignment(const AttentionField<Scalar>& field,
                                   const ParsedPrompt& parse) {
  return assign_patches(entity_scores(normalize_field(field), parse));
}

/// The full cross-attention control pipeline. Scores are taken on the
/// normalized field (patch rows as token distributions), and the mask
/// multiplies that normalized field.
///
/// ReweightOnly skips the argmax: every entity span gets the entity weight,
/// so the original distribution is emphasized without selecting a winner.
/// `reuse` optionally supplies a frozen patch assignment.
template <typename Scalar>
AttentionField<Scalar> modulate_cross_attention(const AttentionField<Scalar>& field,
                                                const ParsedPrompt& parse,
                                                const PhaseSchedule& schedule,
                                                double theta, CrossMode mode,
                                                const PatchAssignment* reuse = nullptr) {
  if (mode == CrossMode::Off) return field;
  AttentionField<Scalar> normalized = normalize_field(field);
  if (mode == CrossMode::ReweightOnly) {
    detail::check_spans<Scalar>(parse, field.tokens, "modulate_cross_attention");
    const ScheduleWeights w = schedule_weights(schedule, theta);
    MatrixX<Scalar> row = MatrixX<Scalar>::Zero(1, field.tokens);
    for (const EntityGroup& e : parse.entities) {
      for (int t = e.span.start; t < e.span.end; ++t) row(0, t) = Scalar(w.entity);
    }
    for (int t : parse.other_spans) row(0, t) = Scalar(w.other);
    AttentionField<Scalar> out = normalized;
    for (Index p = 0; p < out.values.rows(); ++p) {
      out.values.row(p) = normalized.values.row(p).cwiseProduct(row.row(0));
    }
    out.normalized = false;
    return out;
  }
  PatchAssignment assign =
      reuse ? *reuse : assign_patches(entity_scores(normalized, parse));
  if (mode == CrossMode::MaskOnly) {
    return apply_mask(normalized,
                      build_object_mask<Scalar>(assign, parse, field.tokens));
  }
  return apply_weighted_mask(
      normalized,
      build_weighted_mask<Scalar>(assign, parse, field.tokens, schedule, theta));
}

/// Divides every row with positive sum by that sum; zero rows stay zero.
/// The `normalized` flag is set only when no row was skipped.
template <typename Scalar>
AttentionField<Scalar> renormalize_rows(const AttentionField<Scalar>& field) {
  AttentionField<Scalar> out = field;
  bool all_rows = true;
  for (Index p = 0; p < out.values.rows(); ++p) {
    Scalar sum = 0;
    for (Index t = 0; t < out.values.cols(); ++t) sum += out.values(p, t);
    if (sum > Scalar(0)) {
      out.values.row(p) /= sum;
    } else {
      all_rows = false;
    }
  }
  out.normalized = all_rows;
  return out;
}

/// Config-driven entry point; honors the experimental renormalize flag.
template <typename Scalar>
AttentionField<Scalar> modulate_cross_attention(const AttentionField<Scalar>& field,
                                                const ParsedPrompt& parse,
                                                const CrossModConfig& config,
                                                double theta,
                                                const PatchAssignment* reuse = nullptr) {
  AttentionField<Scalar> out = modulate_cross_attention(
      field, parse, config.schedule, theta, config.mode, reuse);
  if (config.renormalize && config.mode != CrossMode::Off) {
    out = renormalize_rows(out);
  }
  return out;
}

}  // namespace attnmod

#endif  // ATTNMOD_CROSS_MOD_HPP
