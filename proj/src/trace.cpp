#include "attnmod/trace.hpp"

namespace attnmod {

const char* ablation_arm_name(AblationArm arm) {
  switch (arm) {
    case AblationArm::Baseline: return "baseline";
    case AblationArm::SelfOnly: return "self_only";
    case AblationArm::MaskOnly: return "mask_only";
    case AblationArm::ReweightOnly: return "reweight_only";
    case AblationArm::Full: return "full";
  }
  return "baseline";
}

TraceConfig ablation_config(TraceConfig config, AblationArm arm) {
  config.self_mod.enabled =
      (arm == AblationArm::SelfOnly || arm == AblationArm::Full);
  switch (arm) {
    case AblationArm::Baseline:
    case AblationArm::SelfOnly:
      config.cross_mod.mode = CrossMode::Off;
      break;
    case AblationArm::MaskOnly:
      config.cross_mod.mode = CrossMode::MaskOnly;
      break;
    case AblationArm::ReweightOnly:
      config.cross_mod.mode = CrossMode::ReweightOnly;
      break;
    case AblationArm::Full:
      config.cross_mod.mode = CrossMode::Both;
      break;
  }
  return config;
}

TraceConfig ablation_baseline(TraceConfig config) {
  return ablation_config(std::move(config), AblationArm::Baseline);
}

}  // namespace attnmod
