#ifndef ATTNMOD_TRACE_IO_HPP
#define ATTNMOD_TRACE_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "attnmod/config.hpp"
#include "attnmod/metrics.hpp"
#include "attnmod/trace.hpp"

namespace attnmod {

nlohmann::json parse_to_json(const ParsedPrompt& parse);
nlohmann::json report_to_json(const LeakageReport& report);

/// What a `trace` run left on disk. The manifest is deterministic for a
/// fixed config; wall-clock timings go to the separate timings file so they
/// cannot perturb byte-identical reruns.
struct TraceFiles {
  std::string directory;
  std::string manifest_path;
  std::string timings_path;
  std::vector<std::string> tensor_paths;
};

TraceFiles write_trace(const TraceResult<double>& result, const RunConfig& config,
                       const std::string& directory, bool save_self = false);

}  // namespace attnmod

#endif  // ATTNMOD_TRACE_IO_HPP
