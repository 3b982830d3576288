// attnmod -- prompt decomposition, attention-modulation traces, ablation
// tables and heatmap rendering on the synthetic harness.
//
// exit codes: 0 ok, 1 usage, 2 parse failure, 3 config validation,
//             4 unwritable output

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "attnmod/config.hpp"
#include "attnmod/hash.hpp"
#include "attnmod/metrics.hpp"
#include "attnmod/parser.hpp"
#include "attnmod/pgm.hpp"
#include "attnmod/tensor_io.hpp"
#include "attnmod/trace.hpp"
#include "attnmod/trace_io.hpp"
#include "attnmod/version.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParseFailure = 2;
constexpr int kExitConfig = 3;
constexpr int kExitUnwritable = 4;

bool color_enabled() {
  return std::getenv("ATTNMOD_NO_COLOR") == nullptr && isatty(fileno(stdout));
}

struct GlobalArgs {
  std::string config_path;
  std::string lexicon_path;
  std::optional<std::uint64_t> seed;
  bool as_json = false;
};

attnmod::RunConfig resolve_config(const GlobalArgs& args) {
  attnmod::RunConfig config;
  if (!args.config_path.empty()) config = attnmod::load_config(args.config_path);
  if (args.seed) config.trace.synth.seed = *args.seed;
  return config;
}

const attnmod::Lexicon& resolve_lexicon(const GlobalArgs& args,
                                        std::optional<attnmod::Lexicon>& storage) {
  if (args.lexicon_path.empty()) return attnmod::Lexicon::builtin();
  storage = attnmod::Lexicon::load(args.lexicon_path);
  return *storage;
}

void warn_hot_temperature(const attnmod::SelfModConfig& config) {
  if (config.enabled && config.tau > 1.0) {
    std::fprintf(stderr,
                 "warning: self_mod.tau = %g > 1 flattens the distribution "
                 "instead of sharpening it\n",
                 config.tau);
  }
}

// ---------------------------------------------------------------- parse --

int cmd_parse(const std::string& prompt, const GlobalArgs& args) {
  std::optional<attnmod::Lexicon> storage;
  const attnmod::Lexicon& lexicon = resolve_lexicon(args, storage);
  attnmod::RunConfig config = resolve_config(args);
  const attnmod::ParsedPrompt parse =
      attnmod::parse_prompt(prompt, lexicon, config.parser);

  if (args.as_json) {
    json j = attnmod::parse_to_json(parse);
    j["prompt"] = prompt;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  const bool color = color_enabled();
  const char* em = color ? "\033[1;36m" : "";
  const char* off = color ? "\033[0m" : "";

  std::cout << "prompt: " << prompt << "\n";
  std::cout << "tokens:";
  for (const attnmod::Token& t : parse.tokens) {
    std::cout << ' ' << t.text << '/' << attnmod::tag_name(t.tag);
  }
  std::cout << "\nentities:\n";
  for (const attnmod::EntityGroup& e : parse.entities) {
    std::printf("  [%2d,%2d)  head=%-3d %s\"%s\"%s\n", e.span.start, e.span.end,
                e.head_noun_index, em, e.label.c_str(), off);
  }
  std::cout << "other:   ";
  if (parse.other_spans.empty()) std::cout << " (none)";
  for (int t : parse.other_spans) {
    std::cout << ' ' << parse.tokens[static_cast<size_t>(t)].text << '(' << t << ')';
  }
  std::cout << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- trace --

json metrics_summary(const attnmod::TraceResult<double>& result) {
  attnmod::KahanSum raw_overlap, mod_overlap, mod_entropy;
  for (const auto& record : result.steps) {
    raw_overlap.add(record.raw_report.inter_entity_overlap);
    mod_overlap.add(record.mod_report.inter_entity_overlap);
    mod_entropy.add(record.mod_report.mean_patch_entropy);
  }
  const double n = double(result.steps.size());
  return json{{"steps", result.steps.size()},
              {"mean_raw_overlap", raw_overlap.value() / n},
              {"mean_mod_overlap", mod_overlap.value() / n},
              {"mean_mod_entropy", mod_entropy.value() / n}};
}

int cmd_trace(const GlobalArgs& args, const std::string& out_dir, bool save_self) {
  attnmod::RunConfig config = resolve_config(args);
  std::optional<attnmod::Lexicon> storage;
  const attnmod::Lexicon& lexicon = resolve_lexicon(args, storage);
  warn_hot_temperature(config.trace.self_mod);

  const auto result = attnmod::run_trace(config.trace, lexicon, config.parser);
  const auto files = attnmod::write_trace(result, config, out_dir, save_self);
  const json summary = metrics_summary(result);

  if (args.as_json) {
    json j = {{"artifact_version", attnmod::kVersion},
              {"manifest", files.manifest_path},
              {"timings", files.timings_path},
              {"tensor_count", files.tensor_paths.size()},
              {"metrics", summary}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "trace written to " << files.directory << "\n";
  std::cout << "  manifest:  " << files.manifest_path << "\n";
  std::cout << "  tensors:   " << files.tensor_paths.size() << " files\n";
  std::printf("  mean overlap: raw %.6f -> modulated %.6f\n",
              summary.at("mean_raw_overlap").get<double>(),
              summary.at("mean_mod_overlap").get<double>());
  std::printf("  mean entropy (modulated): %.4f nats\n",
              summary.at("mean_mod_entropy").get<double>());
  std::printf("  attention path: %.3f ms, synthesis: %.3f ms\n",
              double(result.attention_ns) * 1e-6, double(result.synth_ns) * 1e-6);
  return kExitOk;
}

// --------------------------------------------------------------- ablate --

int cmd_ablate(const GlobalArgs& args, int repetitions) {
  attnmod::RunConfig config = resolve_config(args);
  std::optional<attnmod::Lexicon> storage;
  const attnmod::Lexicon& lexicon = resolve_lexicon(args, storage);
  warn_hot_temperature(config.trace.self_mod);

  const attnmod::AblationArm arms[] = {
      attnmod::AblationArm::Baseline, attnmod::AblationArm::SelfOnly,
      attnmod::AblationArm::MaskOnly, attnmod::AblationArm::ReweightOnly,
      attnmod::AblationArm::Full};

  struct ArmRow {
    std::string name;
    double overlap = 0.0;
    double entropy = 0.0;
    double top_mass = 0.0;
    std::int64_t attention_ns = 0;
  };
  std::vector<ArmRow> rows;

  for (const auto arm : arms) {
    const attnmod::TraceConfig arm_config = attnmod::ablation_config(config.trace, arm);
    std::vector<std::int64_t> times;
    attnmod::TraceResult<double> result;
    for (int rep = 0; rep < repetitions; ++rep) {
      result = attnmod::run_trace(arm_config, lexicon, config.parser);
      times.push_back(result.attention_ns);
    }
    std::sort(times.begin(), times.end());

    ArmRow row;
    row.name = attnmod::ablation_arm_name(arm);
    row.attention_ns = times[times.size() / 2];
    attnmod::KahanSum overlap, entropy, top_mass;
    for (const auto& record : result.steps) {
      overlap.add(record.mod_report.inter_entity_overlap);
      entropy.add(record.mod_report.mean_patch_entropy);
      top_mass.add(double(record.mod_report.top_mass_region_size));
    }
    const double n = double(result.steps.size());
    row.overlap = overlap.value() / n;
    row.entropy = entropy.value() / n;
    row.top_mass = top_mass.value() / n;
    rows.push_back(row);
  }

  const double baseline_ns = double(rows.front().attention_ns);
  if (args.as_json) {
    json arms_json = json::array();
    for (const ArmRow& row : rows) {
      arms_json.push_back({{"arm", row.name},
                           {"mean_overlap", row.overlap},
                           {"mean_entropy", row.entropy},
                           {"mean_top_mass_region", row.top_mass},
                           {"attention_ns", row.attention_ns},
                           {"overhead_ratio", double(row.attention_ns) / baseline_ns}});
    }
    std::cout << json{{"arms", arms_json}}.dump(2) << "\n";
    return kExitOk;
  }

  std::printf("%-14s %12s %12s %10s %12s %8s\n", "arm", "overlap", "entropy",
              "top90", "attn_ms", "ratio");
  for (const ArmRow& row : rows) {
    std::printf("%-14s %12.6f %12.4f %10.2f %12.3f %8.3f\n", row.name.c_str(),
                row.overlap, row.entropy, row.top_mass,
                double(row.attention_ns) * 1e-6,
                double(row.attention_ns) / baseline_ns);
  }
  return kExitOk;
}

// --------------------------------------------------------------- render --

int cmd_render(const GlobalArgs& args, const std::string& trace_dir, int step,
               const std::string& token_text, int token_index, bool raw,
               const std::string& out_path) {
  const fs::path dir(trace_dir);
  std::ifstream in(dir / "manifest.json");
  if (!in) throw attnmod::IoError("cannot open manifest in " + trace_dir);
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& e) {
    throw attnmod::IoError("manifest is not valid JSON: " + std::string(e.what()));
  }

  int t = token_index;
  if (!token_text.empty()) {
    t = -1;
    for (const auto& token : manifest.at("parse").at("tokens")) {
      if (token.at("text") == token_text) {
        t = token.at("index").get<int>();
        break;
      }
    }
    if (t < 0) {
      throw attnmod::ConfigError("token `" + token_text + "` not in the traced prompt");
    }
  }

  const json* step_entry = nullptr;
  for (const auto& entry : manifest.at("steps")) {
    if (entry.at("step").get<int>() == step) {
      step_entry = &entry;
      break;
    }
  }
  if (!step_entry) {
    throw attnmod::ConfigError("step " + std::to_string(step) + " not in trace");
  }

  const std::string file =
      step_entry->at(raw ? "raw_file" : "mod_file").get<std::string>();
  const auto field = attnmod::read_field((dir / file).string());
  if (t < 0 || t >= field.tokens) {
    throw attnmod::ConfigError("token index " + std::to_string(t) +
                               " outside field token range");
  }

  attnmod::MatrixXd slice(field.height, field.width);
  for (attnmod::Index h = 0; h < field.height; ++h) {
    for (attnmod::Index w = 0; w < field.width; ++w) slice(h, w) = field.at(h, w, t);
  }
  attnmod::render_heatmap(slice, out_path);

  if (args.as_json) {
    const json j = {{"output", out_path},
                    {"step", step},
                    {"token_index", t},
                    {"source", file},
                    {"fnv1a64", attnmod::to_hex(attnmod::fnv1a64_file(out_path))}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "wrote " << out_path << " (step " << step << ", token " << t
              << ", " << (raw ? "raw" : "modulated") << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-wise attention modulation toolkit"};
  app.set_version_flag("--version", attnmod::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalArgs globals;
  app.add_option("--config", globals.config_path, "run config (JSON)");
  app.add_option("--lexicon", globals.lexicon_path,
                 "part-of-speech table replacing the built-in one");
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "override the trace seed");
  app.add_flag("--json", globals.as_json, "machine-readable output");

  std::string prompt;
  auto* parse_cmd = app.add_subcommand("parse", "decompose a prompt into spans");
  parse_cmd->add_option("prompt", prompt, "the prompt text")->required();

  std::string out_dir = "trace_out";
  bool save_self = false;
  auto* trace_cmd = app.add_subcommand("trace", "run the harness and write a trace");
  trace_cmd->add_option("--out", out_dir, "output directory");
  trace_cmd->add_flag("--save-self", save_self, "also dump self-attention weights");

  int repetitions = 3;
  auto* ablate_cmd =
      app.add_subcommand("ablate", "compare the five modulation arms on one seed");
  ablate_cmd->add_option("--reps", repetitions, "timing repetitions per arm")
      ->check(CLI::PositiveNumber);

  std::string trace_dir;
  std::string token_text;
  int token_index = -1;
  int step = 0;
  bool raw = false;
  std::string render_out = "heatmap.pgm";
  auto* render_cmd =
      app.add_subcommand("render", "render one token's attention map as PGM");
  render_cmd->add_option("--trace", trace_dir, "trace directory")->required();
  render_cmd->add_option("--step", step, "step index");
  auto* tok_opt = render_cmd->add_option("--token", token_text, "token text");
  render_cmd->add_option("--token-index", token_index, "token index")->excludes(tok_opt);
  render_cmd->add_flag("--raw", raw, "render the unmodulated field");
  render_cmd->add_option("--out", render_out, "output PGM path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (seed_opt->count() > 0) globals.seed = seed_value;

  try {
    if (parse_cmd->parsed()) return cmd_parse(prompt, globals);
    if (trace_cmd->parsed()) return cmd_trace(globals, out_dir, save_self);
    if (ablate_cmd->parsed()) return cmd_ablate(globals, repetitions);
    if (render_cmd->parsed()) {
      if (token_text.empty() && token_index < 0) {
        std::fprintf(stderr, "render: need --token or --token-index\n");
        return kExitUsage;
      }
      return cmd_render(globals, trace_dir, step, token_text, token_index, raw,
                        render_out);
    }
  } catch (const attnmod::EmptyPrompt& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const attnmod::NoEntityFound& e) {
    std::fprintf(stderr, "parse failure: %s\n", e.what());
    return kExitParseFailure;
  } catch (const attnmod::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const attnmod::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitUnwritable;
  } catch (const attnmod::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
