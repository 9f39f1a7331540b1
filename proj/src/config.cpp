#include "bellctx/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bellctx/errors.hpp"

namespace bellctx {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& section, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& [key, value] : section.items()) {
    bool found = false;
    for (const char* k : known) {
      if (key == k) {
        found = true;
        break;
      }
    }
    if (!found) throw ParseError("unknown config key '" + where + "." + key + "'");
  }
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("config root must be a JSON object");
  reject_unknown_keys(root, {"optimizer", "sampler", "output"}, "config");

  RunConfig cfg;
  try {
    if (root.contains("optimizer")) {
      const json& o = root["optimizer"];
      reject_unknown_keys(o, {"restarts", "tolerance", "max_evals", "seed"}, "optimizer");
      cfg.optimizer.restarts = o.value("restarts", cfg.optimizer.restarts);
      cfg.optimizer.tolerance = o.value("tolerance", cfg.optimizer.tolerance);
      cfg.optimizer.max_evals = o.value("max_evals", cfg.optimizer.max_evals);
      cfg.optimizer.seed = o.value("seed", cfg.optimizer.seed);
    }
    if (root.contains("sampler")) {
      const json& s = root["sampler"];
      reject_unknown_keys(s, {"shots", "seed"}, "sampler");
      cfg.sampler.shots = s.value("shots", cfg.sampler.shots);
      cfg.sampler.seed = s.value("seed", cfg.sampler.seed);
    }
    if (root.contains("output")) {
      const json& o = root["output"];
      reject_unknown_keys(o, {"format", "path", "precision"}, "output");
      if (o.contains("format")) {
        cfg.output.format = output_format_from_name(o["format"].get<std::string>());
      }
      cfg.output.path = o.value("path", cfg.output.path);
      cfg.output.precision = o.value("precision", cfg.output.precision);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("config field has the wrong type: ") + e.what());
  }

  validate_config(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate_config(const RunConfig& cfg) {
  if (!(cfg.optimizer.tolerance > 0.0)) {
    throw ParseError("optimizer.tolerance must be > 0");
  }
  if (cfg.optimizer.restarts < 1) throw ParseError("optimizer.restarts must be >= 1");
  if (cfg.optimizer.max_evals < 10) throw ParseError("optimizer.max_evals must be >= 10");
  if (cfg.sampler.shots < 1) throw ParseError("sampler.shots must be >= 1");
  if (cfg.output.precision < 6 || cfg.output.precision > 17) {
    throw ParseError("output.precision must be in [6, 17]");
  }
}

OutputFormat output_format_from_name(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ParseError("output format must be 'csv' or 'json', got '" + name + "'");
}

}  // namespace bellctx
