#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "axcheck/formula.hpp"
#include "axcheck/isomorphism.hpp"
#include "axcheck/metatheory.hpp"
#include "axcheck/universe.hpp"

namespace axcheck {

using Json = nlohmann::ordered_json;

enum class OutputFormat { text, json };

struct RunConfig {
  std::uint32_t n = 2;
  IsoMode mode = IsoMode::tarski;
  std::uint64_t cap = 16;
  std::size_t bound = 9;
  std::size_t limit = 50;
  unsigned parallelism = 1;
  OutputFormat format = OutputFormat::text;
  bool deterministic = false;

  // Throws std::invalid_argument on unknown keys or malformed values.
  void apply(std::string_view key, std::string_view value);
  // `key=value` lines; `#` starts a comment.
  void apply_config_text(std::string_view text);
  void validate() const;
};

RunConfig load_config_file(const std::string& path, RunConfig base = {});

// Lowercase hex SHA-256.
std::string content_hash(std::string_view bytes);

Json evidence_json(const Universe& universe, const Signature& signature, const EvidenceValue& value);
Json judgment_json(const Universe& universe, const Signature& signature, const Judgment& judgment);

struct ModelListing {
  std::uint64_t count = 0;
  std::vector<std::string> shown;
};

struct Report {
  std::string command;
  RunConfig config;
  std::string system_name;
  std::string system_hash;
  std::optional<ModelListing> models;
  std::vector<Json> judgments;
  std::optional<double> timing_ms;
};

// The record; timing and parallelism are left out when config.deterministic.
Json to_json(const Report& report);
// Text view rendered from the same record.
std::string render_text(const Json& record);

}  // namespace axcheck
