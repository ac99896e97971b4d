#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewhook/io.hpp"
#include "skewhook/shape.hpp"

namespace skewhook {

struct CaseFailure {
  std::string case_id;
  std::string expected;
  std::string actual;
  friend bool operator==(const CaseFailure&, const CaseFailure&) = default;
};

struct VerificationReport {
  std::string suite;
  std::optional<SkewShape> shape;  // single-shape run
  int sweep_max_size = 0;          // sweep run when shape is empty
  long long checked = 0;
  long long skipped = 0;
  std::vector<CaseFailure> failures;
  long long elapsed_ms = 0;

  bool pass() const { return failures.empty(); }
};

Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

/// Names accepted by run_suite, in the order the CLI lists them.
const std::vector<std::string>& suite_names();

struct SuiteOptions {
  int degree = -1;  // -1 picks the suite default (12, or 15 for littlewood)
  unsigned seed = 20240611;
  int max_entry = 3;  // restricted-hg entry bound
};

/// Runs one suite on a single shape. Shapes a suite cannot handle count as
/// skipped. DomainError for an unknown suite name.
VerificationReport run_suite(const std::string& suite, const SkewShape& s, const SuiteOptions& opts = {});

/// Runs one suite over every shape of the sweep of that suite (outer size
/// 1..max_size; straight shapes only for littlewood). Shapes are processed
/// in parallel but failures are reported in sweep order.
VerificationReport run_suite_sweep(const std::string& suite, int max_size, const SuiteOptions& opts = {});

}  // namespace skewhook
