#include "attnmod/config.hpp"

#include <fstream>

using nlohmann::json;

namespace attnmod {

const char* curve_name(CurveKind kind) {
  switch (kind) {
    case CurveKind::LinearUp: return "linear_up";
    case CurveKind::CosineUp: return "cosine_up";
    case CurveKind::LinearDown: return "linear_down";
    case CurveKind::CosineDown: return "cosine_down";
    case CurveKind::Constant: return "constant";
  }
  return "constant";
}

CurveKind curve_from_name(const std::string& name) {
  if (name == "linear_up") return CurveKind::LinearUp;
  if (name == "cosine_up") return CurveKind::CosineUp;
  if (name == "linear_down") return CurveKind::LinearDown;
  if (name == "cosine_down") return CurveKind::CosineDown;
  if (name == "constant") return CurveKind::Constant;
  throw ConfigError("unknown curve kind: " + name);
}

const char* cross_mode_name(CrossMode mode) {
  switch (mode) {
    case CrossMode::Off: return "off";
    case CrossMode::MaskOnly: return "mask_only";
    case CrossMode::ReweightOnly: return "reweight_only";
    case CrossMode::Both: return "both";
  }
  return "off";
}

CrossMode cross_mode_from_name(const std::string& name) {
  if (name == "off") return CrossMode::Off;
  if (name == "mask_only") return CrossMode::MaskOnly;
  if (name == "reweight_only") return CrossMode::ReweightOnly;
  if (name == "both") return CrossMode::Both;
  throw ConfigError("cross_mod.mode: unknown mode `" + name +
                    "` (expected off|mask_only|reweight_only|both)");
}

namespace {

// Pulls `key` out of `section` when present, with a section-qualified error
// on type mismatches.
template <typename T>
void take(const json& section, const std::string& section_name,
          const std::string& key, T& out) {
  if (!section.contains(key)) return;
  try {
    out = section.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(section_name + "." + key + ": wrong type");
  }
}

void check_known_keys(const json& section, const std::string& section_name,
                      std::initializer_list<const char*> known) {
  for (const auto& item : section.items()) {
    bool ok = false;
    for (const char* k : known) {
      if (item.key() == k) { ok = true; break; }
    }
    if (!ok) throw ConfigError(section_name + "." + item.key() + ": unknown key");
  }
}

}  // namespace

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  check_known_keys(j, "config", {"self_mod", "cross_mod", "trace", "parser"});
  RunConfig config;

  if (j.contains("self_mod")) {
    const json& s = j.at("self_mod");
    if (!s.is_object()) throw ConfigError("self_mod: must be an object");
    check_known_keys(s, "self_mod", {"tau", "gate_start", "gate_end", "enabled"});
    take(s, "self_mod", "tau", config.trace.self_mod.tau);
    take(s, "self_mod", "gate_start", config.trace.self_mod.gate_start);
    take(s, "self_mod", "gate_end", config.trace.self_mod.gate_end);
    take(s, "self_mod", "enabled", config.trace.self_mod.enabled);
  }

  if (j.contains("cross_mod")) {
    const json& c = j.at("cross_mod");
    if (!c.is_object()) throw ConfigError("cross_mod: must be an object");
    check_known_keys(c, "cross_mod",
                     {"mode", "entity_curve", "other_curve", "entity_w0", "entity_w1",
                      "other_w0", "other_w1", "renormalize", "freeze_after"});
    std::string mode = cross_mode_name(config.trace.cross_mod.mode);
    std::string entity_curve = curve_name(config.trace.cross_mod.schedule.entity_curve.kind);
    std::string other_curve = curve_name(config.trace.cross_mod.schedule.other_curve.kind);
    take(c, "cross_mod", "mode", mode);
    take(c, "cross_mod", "entity_curve", entity_curve);
    take(c, "cross_mod", "other_curve", other_curve);
    config.trace.cross_mod.mode = cross_mode_from_name(mode);
    config.trace.cross_mod.schedule.entity_curve.kind = curve_from_name(entity_curve);
    config.trace.cross_mod.schedule.other_curve.kind = curve_from_name(other_curve);
    take(c, "cross_mod", "entity_w0", config.trace.cross_mod.schedule.entity_curve.w0);
    take(c, "cross_mod", "entity_w1", config.trace.cross_mod.schedule.entity_curve.w1);
    take(c, "cross_mod", "other_w0", config.trace.cross_mod.schedule.other_curve.w0);
    take(c, "cross_mod", "other_w1", config.trace.cross_mod.schedule.other_curve.w1);
    take(c, "cross_mod", "renormalize", config.trace.cross_mod.renormalize);
    take(c, "cross_mod", "freeze_after", config.trace.cross_mod.freeze_after);
  }

  if (j.contains("trace")) {
    const json& t = j.at("trace");
    if (!t.is_object()) throw ConfigError("trace: must be an object");
    check_known_keys(t, "trace",
                     {"height", "width", "tokens", "heads", "head_dim", "steps",
                      "seed", "prompt", "floor_weight", "bump_weight", "sigma_frac",
                      "jitter"});
    std::int64_t height = config.trace.synth.height;
    std::int64_t width = config.trace.synth.width;
    std::int64_t tokens = config.trace.synth.tokens;
    std::int64_t head_dim = config.trace.synth.head_dim;
    take(t, "trace", "height", height);
    take(t, "trace", "width", width);
    take(t, "trace", "tokens", tokens);
    take(t, "trace", "head_dim", head_dim);
    config.trace.synth.height = height;
    config.trace.synth.width = width;
    config.trace.synth.tokens = tokens;
    config.trace.synth.head_dim = head_dim;
    take(t, "trace", "heads", config.trace.synth.heads);
    take(t, "trace", "steps", config.trace.steps);
    take(t, "trace", "seed", config.trace.synth.seed);
    take(t, "trace", "prompt", config.trace.prompt);
    take(t, "trace", "floor_weight", config.trace.synth.floor_weight);
    take(t, "trace", "bump_weight", config.trace.synth.bump_weight);
    take(t, "trace", "sigma_frac", config.trace.synth.sigma_frac);
    take(t, "trace", "jitter", config.trace.synth.jitter);
  }

  if (j.contains("parser")) {
    const json& p = j.at("parser");
    if (!p.is_object()) throw ConfigError("parser: must be an object");
    check_known_keys(p, "parser", {"attachment_preps"});
    take(p, "parser", "attachment_preps", config.parser.attachment_preps);
  }

  config.trace.validate();
  return config;
}

json config_to_json(const RunConfig& config) {
  json j;
  j["self_mod"] = {{"tau", config.trace.self_mod.tau},
                   {"gate_start", config.trace.self_mod.gate_start},
                   {"gate_end", config.trace.self_mod.gate_end},
                   {"enabled", config.trace.self_mod.enabled}};
  j["cross_mod"] = {
      {"mode", cross_mode_name(config.trace.cross_mod.mode)},
      {"entity_curve", curve_name(config.trace.cross_mod.schedule.entity_curve.kind)},
      {"entity_w0", config.trace.cross_mod.schedule.entity_curve.w0},
      {"entity_w1", config.trace.cross_mod.schedule.entity_curve.w1},
      {"other_curve", curve_name(config.trace.cross_mod.schedule.other_curve.kind)},
      {"other_w0", config.trace.cross_mod.schedule.other_curve.w0},
      {"other_w1", config.trace.cross_mod.schedule.other_curve.w1},
      {"renormalize", config.trace.cross_mod.renormalize},
      {"freeze_after", config.trace.cross_mod.freeze_after}};
  j["trace"] = {{"height", config.trace.synth.height},
                {"width", config.trace.synth.width},
                {"tokens", config.trace.synth.tokens},
                {"heads", config.trace.synth.heads},
                {"head_dim", config.trace.synth.head_dim},
                {"steps", config.trace.steps},
                {"seed", config.trace.synth.seed},
                {"prompt", config.trace.prompt},
                {"floor_weight", config.trace.synth.floor_weight},
                {"bump_weight", config.trace.synth.bump_weight},
                {"sigma_frac", config.trace.synth.sigma_frac},
                {"jitter", config.trace.synth.jitter}};
  j["parser"] = {{"attachment_preps", config.parser.attachment_preps}};
  return j;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
  return config_from_json(j);
}

}  // namespace attnmod
