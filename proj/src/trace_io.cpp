#include "attnmod/trace_io.hpp"

#include <cstdio>
#include <filesystem>

#include "attnmod/hash.hpp"
#include "attnmod/tensor_io.hpp"
#include "attnmod/version.hpp"

using nlohmann::json;

namespace attnmod {

json parse_to_json(const ParsedPrompt& parse) {
  json tokens = json::array();
  for (const Token& t : parse.tokens) {
    tokens.push_back({{"text", t.text}, {"index", t.index}, {"tag", tag_name(t.tag)}});
  }
  json entities = json::array();
  for (const EntityGroup& e : parse.entities) {
    entities.push_back({{"start", e.span.start},
                        {"end", e.span.end},
                        {"head", e.head_noun_index},
                        {"label", e.label}});
  }
  return json{{"tokens", tokens}, {"entities", entities}, {"other", parse.other_spans}};
}

json report_to_json(const LeakageReport& report) {
  return json{{"inter_entity_overlap", report.inter_entity_overlap},
              {"mean_patch_entropy", report.mean_patch_entropy},
              {"winner_region_sizes", report.winner_region_sizes},
              {"top_mass_region_size", report.top_mass_region_size}};
}

namespace {

std::string step_name(int step, const char* kind) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "step_%03d_%s.atnf", step, kind);
  return buf;
}

}  // namespace

TraceFiles write_trace(const TraceResult<double>& result, const RunConfig& config,
                       const std::string& directory, bool save_self) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw IoError("cannot create trace directory: " + directory);

  TraceFiles files;
  files.directory = directory;

  json steps = json::array();
  for (const auto& record : result.steps) {
    const std::string raw_name = step_name(record.step, "raw");
    const std::string mod_name = step_name(record.step, "mod");
    const std::string raw_path = (fs::path(directory) / raw_name).string();
    const std::string mod_path = (fs::path(directory) / mod_name).string();
    write_field(raw_path, record.raw_field);
    write_field(mod_path, record.mod_field);
    files.tensor_paths.push_back(raw_path);
    files.tensor_paths.push_back(mod_path);

    json step = {{"step", record.step},
                 {"theta", record.theta},
                 {"raw_file", raw_name},
                 {"raw_fnv1a64", to_hex(fnv1a64_file(raw_path))},
                 {"mod_file", mod_name},
                 {"mod_fnv1a64", to_hex(fnv1a64_file(mod_path))},
                 {"raw_metrics", report_to_json(record.raw_report)},
                 {"mod_metrics", report_to_json(record.mod_report)}};
    if (save_self) {
      json self_files = json::array();
      for (size_t head = 0; head < record.self_weights.size(); ++head) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "step_%03d_self_h%zu.atnf", record.step, head);
        const std::string self_path = (fs::path(directory) / buf).string();
        write_matrix(self_path, record.self_weights[head]);
        files.tensor_paths.push_back(self_path);
        self_files.push_back({{"file", buf}, {"fnv1a64", to_hex(fnv1a64_file(self_path))}});
      }
      step["self_files"] = self_files;
    }
    steps.push_back(step);
  }

  json manifest = {{"artifact_version", kVersion},
                   {"prompt", config.trace.prompt},
                   {"config", config_to_json(config)},
                   {"parse", parse_to_json(result.parse)},
                   {"steps", steps},
                   {"exit_status", 0}};
  json file_list = json::array();
  for (const auto& p : files.tensor_paths) {
    file_list.push_back(fs::path(p).filename().string());
  }
  manifest["files"] = file_list;

  files.manifest_path = (fs::path(directory) / "manifest.json").string();
  write_file_atomic(files.manifest_path, manifest.dump(2) + "\n");

  const json timings = {{"attention_ns", result.attention_ns},
                        {"synth_ns", result.synth_ns}};
  files.timings_path = (fs::path(directory) / "timings.json").string();
  write_file_atomic(files.timings_path, timings.dump(2) + "\n");
  return files;
}

}  // namespace attnmod
