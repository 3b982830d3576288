#ifndef ATTNMOD_CONFIG_HPP
#define ATTNMOD_CONFIG_HPP

#include <string>

#include <json.hpp>

#include "attnmod/parser.hpp"
#include "attnmod/trace.hpp"

namespace attnmod {

/// Run configuration as a JSON document with `self_mod`, `cross_mod` and
/// `trace` sections (all optional; absent keys keep their defaults), plus an
/// optional `parser` section for the attachment-preposition list.
struct RunConfig {
  TraceConfig trace;
  ParserOptions parser;
};

RunConfig config_from_json(const nlohmann::json& j);  // throws ConfigError
nlohmann::json config_to_json(const RunConfig& config);

RunConfig load_config(const std::string& path);  // throws ConfigError / IoError

}  // namespace attnmod

#endif  // ATTNMOD_CONFIG_HPP
