#pragma once

#include <cstdint>
#include <string>

#include "bellctx/optimize.hpp"

namespace bellctx {

struct SamplerParams {
  long long shots = 1000000;
  std::uint64_t seed = 42;
};

enum class OutputFormat { Csv, Json };

struct OutputParams {
  OutputFormat format = OutputFormat::Csv;
  std::string path;    // empty = stdout
  int precision = 6;   // significant digits, 6..17
};

// The CLI's runtime knobs: an `optimizer` section shared by the KCBS and CHSH
// searches, a `sampler` section, and an `output` section. JSON on disk;
// command-line flags override individual fields.
struct RunConfig {
  OptimizerParams optimizer;
  SamplerParams sampler;
  OutputParams output;
};

// Parses a JSON config file and validates the field ranges. Unknown keys are
// rejected so typos do not silently fall back to defaults.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

void validate_config(const RunConfig& cfg);

OutputFormat output_format_from_name(const std::string& name);

// Name of the environment variable holding a default config path.
inline constexpr const char* kConfigEnvVar = "BELLCTX_CONFIG";

}  // namespace bellctx
