#ifndef AFFGROW_ARTIFACTS_HPP_
#define AFFGROW_ARTIFACTS_HPP_

#include <string>
#include <vector>

#include "affgrow/serialize.hpp"

namespace affgrow {

// Every artifact is {"v": "v1", "kind": ..., "input": {...}, "status": ...,
// "result": {...}}. The input block is complete (defaults filled in), so
// re-running it reproduces the result byte for byte.
enum class ArtifactStatus { Ok, Unknown, Failed };
std::string to_string(ArtifactStatus s);

struct Artifact {
  json doc;
  ArtifactStatus status = ArtifactStatus::Ok;
  std::string csv;  // growth only
};

// Kinds: decide, growth, dplus, mahler, verify-ct, classify, lehmer.
// Errors: whatever the engines raise on bad input (Parse, NonMonic, ...).
Artifact run_artifact(const std::string& kind, json input, unsigned workers = 0);

std::vector<std::string> artifact_kinds();

struct CheckReport {
  bool ok = true;
  std::vector<std::string> problems;
  std::size_t certificates = 0;
  std::size_t witnesses = 0;
};

// Re-runs the recorded input and compares the result exactly, then
// re-validates every certificate and relation witness found in the result
// on its own.
CheckReport check_artifact(const json& artifact, unsigned workers = 0);

}  // namespace affgrow

#endif  // AFFGROW_ARTIFACTS_HPP_
