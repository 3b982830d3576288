#ifndef ATTNMOD_SCHEDULE_HPP
#define ATTNMOD_SCHEDULE_HPP

#include <cmath>
#include <numbers>
#include <string>

#include "attnmod/types.hpp"

namespace attnmod {

enum class CurveKind { LinearUp, CosineUp, LinearDown, CosineDown, Constant };

const char* curve_name(CurveKind kind);
CurveKind curve_from_name(const std::string& name);  // throws ConfigError

/// Weight curve over the trajectory fraction theta in [0, 1]. w0 is the
/// value at theta = 0, w1 at theta = 1; Constant returns w0 everywhere.
struct Curve {
  CurveKind kind = CurveKind::Constant;
  double w0 = 1.0;
  double w1 = 1.0;

  double operator()(double theta) const {
    switch (kind) {
      case CurveKind::LinearUp:
      case CurveKind::LinearDown:
        return w0 + (w1 - w0) * theta;
      case CurveKind::CosineUp:
      case CurveKind::CosineDown:
        return w0 + (w1 - w0) * (0.5 * (1.0 - std::cos(std::numbers::pi * theta)));
      case CurveKind::Constant:
        return w0;
    }
    return w0;
  }

  bool rising() const {
    return kind == CurveKind::LinearUp || kind == CurveKind::CosineUp;
  }
  bool falling() const {
    return kind == CurveKind::LinearDown || kind == CurveKind::CosineDown;
  }
};

/// Phase weights: the entity curve is non-decreasing in theta, the other
/// curve non-increasing. Averaging both defaults to 1 keeps the total
/// attention mass comparable to the unweighted mask.
struct PhaseSchedule {
  Curve entity_curve{CurveKind::LinearUp, 0.5, 1.5};
  Curve other_curve{CurveKind::LinearDown, 1.5, 0.5};

  void validate() const {
    if (entity_curve.w0 < 0 || entity_curve.w1 < 0 || other_curve.w0 < 0 ||
        other_curve.w1 < 0) {
      throw ConfigError("cross_mod: curve weights must be >= 0");
    }
    if (entity_curve.falling()) {
      throw ConfigError("cross_mod.entity_curve: must be non-decreasing "
                        "(linear_up, cosine_up or constant)");
    }
    if (entity_curve.rising() && entity_curve.w1 < entity_curve.w0) {
      throw ConfigError("cross_mod.entity_curve: endpoints must rise (w1 >= w0)");
    }
    if (other_curve.rising()) {
      throw ConfigError("cross_mod.other_curve: must be non-increasing "
                        "(linear_down, cosine_down or constant)");
    }
    if (other_curve.falling() && other_curve.w1 > other_curve.w0) {
      throw ConfigError("cross_mod.other_curve: endpoints must fall (w1 <= w0)");
    }
  }
};

struct ScheduleWeights {
  double entity = 1.0;
  double other = 1.0;
};

inline ScheduleWeights schedule_weights(const PhaseSchedule& schedule, double theta) {
  return ScheduleWeights{schedule.entity_curve(theta), schedule.other_curve(theta)};
}

}  // namespace attnmod

#endif  // ATTNMOD_SCHEDULE_HPP
