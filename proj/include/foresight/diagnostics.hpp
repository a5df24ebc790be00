#pragma once

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace foresight {

// Source position, 1-based. line == 0 means "no position" (whole-file issues).
struct SourcePos {
  int line = 0;
  int col = 0;
};

enum class Severity { Error, Warning };

// A single parser/validator finding.  Formatting follows the usual
// "file:line:col: severity: message" convention so editors can jump to it.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string file;
  SourcePos pos;
  std::string code;     // stable machine-readable id, e.g. "SyntaxError"
  std::string message;  // human-readable description

  std::string str() const {
    std::string out = file.empty() ? std::string("<input>") : file;
    if (pos.line > 0) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), ":%d:%d", pos.line, pos.col);
      out += buf;
    }
    out += ": ";
    out += severity == Severity::Error ? "error" : "warning";
    out += ": ";
    out += message;
    out += " [";
    out += code;
    out += "]";
    return out;
  }
};

inline std::string join_diagnostics(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    out += d.str();
    out += '\n';
  }
  return out;
}

inline bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::Error) return true;
  return false;
}

// Total-function parse result: either a value or at least one error
// diagnostic, never an exception.  Warnings may accompany a value.
template <typename T>
struct Result {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value() && !has_errors(diagnostics); }
  explicit operator bool() const { return ok(); }

  T& operator*() { return *value; }
  const T& operator*() const { return *value; }
  T* operator->() { return &*value; }
  const T* operator->() const { return &*value; }
};

// --- Runtime errors (non-parse operations throw; parsing never does) ---

struct RuntimeIssue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Action preconditions not satisfied in the given state.
struct InapplicableAction : RuntimeIssue {
  using RuntimeIssue::RuntimeIssue;
};

// Goal analysis found a goal literal with no possible achiever.
struct UnreachableGoal : RuntimeIssue {
  using RuntimeIssue::RuntimeIssue;
};

// Model fitting was asked to learn from zero trajectories.
struct EmptyTrajectorySet : RuntimeIssue {
  using RuntimeIssue::RuntimeIssue;
};

// Grounding would exceed the configured ground-fluent budget.
struct CombinatorialLimitExceeded : RuntimeIssue {
  using RuntimeIssue::RuntimeIssue;
};

// An asset file (JSON/RDDL shipped with the tool) is missing or malformed.
struct AssetLoadError : RuntimeIssue {
  using RuntimeIssue::RuntimeIssue;
};

// A remote predictor endpoint failed or returned an unusable payload.
struct PredictorError : RuntimeIssue {
  using RuntimeIssue::RuntimeIssue;
};

}  // namespace foresight
