#pragma once

// Desk-scale verification suites: each suite runs exhaustive instances and reports
// one row per checked claim.

#include <cstdint>
#include <string>
#include <vector>

namespace bijective {

struct VerifyRow {
  std::string theorem;   // short claim id
  std::string instance;  // metric, servers, horizon, start
  std::string bound;     // what must hold
  std::string measured;  // what was observed
  bool pass = false;
};

struct VerifyOptions {
  unsigned workers = 1;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
};

/// Suites in their canonical order.
const std::vector<SuiteInfo>& verify_suites();

/// Runs one suite by name. Throws std::invalid_argument for unknown names.
std::vector<VerifyRow> run_suite(const std::string& name, const VerifyOptions& options = {});

inline bool all_pass(const std::vector<VerifyRow>& rows) {
  for (const VerifyRow& r : rows) {
    if (!r.pass) return false;
  }
  return !rows.empty();
}

}  // namespace bijective
