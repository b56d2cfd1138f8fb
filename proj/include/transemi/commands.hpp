#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "transemi/instance_io.hpp"
#include "transemi/report.hpp"

namespace transemi {

enum class OutputFormat { text, machine };

struct CommandOptions {
  std::uint64_t seed = 1;
  std::size_t cap = 256;
  OutputFormat format = OutputFormat::text;
  bool oracle = false;
  bool pairs_parallel = false;
  bool timings = false;
  // generate
  std::string kind = "transformations";
  std::size_t points = 3;
  std::size_t maps = 2;
  std::size_t size = 2;
};

struct CommandResult {
  Report report;
  std::string body;  // command-specific payload (instance text, summaries, maps)
  nlohmann::json body_json;
  int exit_code() const { return report.ok() ? 0 : 1; }
};

CommandResult cmd_analyze(const InstanceFile& inst, const CommandOptions& opts);
CommandResult cmd_check(const InstanceFile& inst, const CommandOptions& opts);
CommandResult cmd_represent(const InstanceFile& inst, const CommandOptions& opts);
// Input must hold transformations; closes them, encodes, verifies the theorem.
CommandResult cmd_roundtrip(const InstanceFile& inst, const CommandOptions& opts);
CommandResult cmd_generate(const CommandOptions& opts);

// Text or JSON rendering of a command result under the given format.
std::string render(const std::string& command, const CommandResult& result, OutputFormat format);

}  // namespace transemi
