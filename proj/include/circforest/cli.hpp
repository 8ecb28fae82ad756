// cli.hpp — batch command execution behind the circforest binary.
#pragma once

#include <optional>
#include <string>

namespace circforest {

struct CommandRequest {
  std::string command;      // poly | count | oracle | verify | mahler | converge | expand
  std::string family_text;  // DSL descriptor
  std::optional<long> n;
  std::optional<std::string> range_text;  // "a..b", inclusive
  long n_max = 0;                         // converge only
  int precision_digits = 12;
  std::string format = "json";              // json | csv | table
  std::string expand_format = "edge-list";  // expand only: edge-list | graph-text
  bool allow_disconnected = false;
};

struct RunResult {
  int status = 0;           // 0 ok; 1 domain error; 2 falsified count identity
  std::string output;       // complete document; empty when status != 0
  std::string diagnostics;  // warnings (status 0) or the error report
};

// Executes the request; never writes partial output (the document is built in
// memory first). Exceptions are mapped to statuses via exit_status_for.
RunResult run(const CommandRequest& request);

// StructureViolation -> 2, everything else -> 1.
int exit_status_for(const std::exception& error);

}  // namespace circforest
