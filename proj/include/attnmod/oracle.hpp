#ifndef ATTNMOD_ORACLE_HPP
#define ATTNMOD_ORACLE_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "attnmod/field.hpp"
#include "attnmod/prompt.hpp"
#include "attnmod/schedule.hpp"
#include "attnmod/types.hpp"

namespace attnmod {

/// Anti-regression oracle: recomputes the whole cross-attention control
/// pipeline (normalize, entity scores, per-patch argmax, phase-weighted
/// mask, product) with plain loops and no code shared with the
/// cross-modulator. Intended for small instances; the real pipeline must
/// match it bitwise.
template <typename Scalar>
AttentionField<Scalar> oracle_pipeline(const AttentionField<Scalar>& field,
                                       const ParsedPrompt& parse,
                                       const PhaseSchedule& schedule, double theta) {
  const Index patch_count = field.height * field.width;
  const Index token_count = field.tokens;
  const int m = static_cast<int>(parse.entities.size());

  auto eval_curve = [theta](const Curve& c) -> double {
    if (c.kind == CurveKind::Constant) return c.w0;
    if (c.kind == CurveKind::LinearUp || c.kind == CurveKind::LinearDown) {
      return c.w0 + (c.w1 - c.w0) * theta;
    }
    return c.w0 + (c.w1 - c.w0) * (0.5 * (1.0 - std::cos(std::numbers::pi * theta)));
  };
  const Scalar entity_weight = Scalar(eval_curve(schedule.entity_curve));
  const Scalar other_weight = Scalar(eval_curve(schedule.other_curve));

  AttentionField<Scalar> out = make_field<Scalar>(field.height, field.width, token_count);
  std::vector<Scalar> normalized(static_cast<size_t>(token_count));
  for (Index p = 0; p < patch_count; ++p) {
    Scalar row_sum = 0;
    for (Index t = 0; t < token_count; ++t) row_sum += field.values(p, t);
    for (Index t = 0; t < token_count; ++t) {
      normalized[static_cast<size_t>(t)] = field.values(p, t) / row_sum;
    }

    int winner = 0;
    Scalar winner_score = 0;
    for (int i = 0; i < m; ++i) {
      Scalar score = 0;
      for (int t = parse.entities[i].span.start; t < parse.entities[i].span.end; ++t) {
        score += normalized[static_cast<size_t>(t)];
      }
      if (i == 0 || score > winner_score) {
        winner = i;
        winner_score = score;
      }
    }

    for (Index t = 0; t < token_count; ++t) {
      Scalar weight = 0;
      if (t >= parse.entities[winner].span.start && t < parse.entities[winner].span.end) {
        weight = entity_weight;
      } else {
        for (int o : parse.other_spans) {
          if (o == t) {
            weight = other_weight;
            break;
          }
        }
      }
      out.values(p, t) = normalized[static_cast<size_t>(t)] * weight;
    }
  }
  out.normalized = false;
  return out;
}

}  // namespace attnmod

#endif  // ATTNMOD_ORACLE_HPP
