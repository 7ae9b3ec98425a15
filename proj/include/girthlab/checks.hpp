#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "girthlab/corpus.hpp"

namespace girthlab {

inline constexpr const char* kToolVersion = "0.1.0";

std::string fingerprint_hex(uint64_t fp);

// One bundled verification: correctness assertions plus a wall-clock budget.
// run throws Error (or any std::exception) to signal failure.
struct CorpusCheck {
  std::string name;
  std::string detail;
  double budget_ms = 0;
  std::function<void(const std::vector<CorpusGroup>&)> run;
};

// The full suite, in fixed order. Checks that need a bundled group look it
// up by name and raise CorpusMissing when absent.
const std::vector<CorpusCheck>& corpus_checks();

struct CheckOutcome {
  std::string name;
  bool passed = false;  // ran clean and stayed within budget
  std::string message;  // failure text; empty when passed
  double elapsed_ms = 0;
  double budget_ms = 0;
};

// Runs the selected checks in suite order (all of them when only is empty).
// Entries in only select by substring, so "genset" picks every genset check;
// an entry that matches no check raises ValidationError.
std::vector<CheckOutcome> run_checks(const std::vector<CorpusGroup>& corpus,
                                     const std::vector<std::string>& only = {});

// What a CLI invocation did, for scripts and CI logs. Serialized form is
// deterministic: keys are sorted and only elapsed_ms varies between runs.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> inputs;
  nlohmann::json results;
  std::string tool = kToolVersion;
  std::string corpus_checksum;  // hex fingerprint of the corpus in use
  double elapsed_ms = 0;
  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

nlohmann::json manifest_json(const RunManifest& m);
// Inverse of manifest_json; ValidationError on missing or mistyped fields.
RunManifest manifest_parse(const nlohmann::json& j);

}  // namespace girthlab
