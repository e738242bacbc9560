#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gau/units.hpp"

namespace gau {

/// Canonical JSON for a structure report.  Key order is fixed and the
/// rendering is stable: equal reports serialize to byte-identical strings,
/// and report_from_json(report_json(r)) == r.
std::string report_json(const UnitReport& r);

/// Parse the canonical form back.  Throws errc::parse on malformed input.
UnitReport report_from_json(const std::string& text);

/// Canonical fields plus "version" and "timing_ms" appended at the end.
std::string record_json(const UnitReport& r, double timing_ms);

/// Human-readable rendering of the same data.
std::string report_text(const UnitReport& r);

struct SuiteCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<SuiteCase> cases;

  bool passed() const;
};

/// The fifteen (p, k) cases covering every row of the reference table.
const std::vector<std::pair<std::uint64_t, int>>& theorem_cases();

/// Full pipeline over every reference-table case; a case passes when both
/// decomposition routes agree with each other and with the table.
SuiteResult run_theorem_suite(std::uint64_t seed);

/// Characteristic-5 step suite over GF(5) and GF(25).
SuiteResult run_p5_suite(std::uint64_t seed);

/// Pipeline unit-group orders against brute-force enumeration for every
/// (group, field) pair small enough to enumerate.
SuiteResult run_oracle_suite(std::uint64_t seed);

/// Deterministic JSON for a suite run (no timing fields).
std::string suite_json(const SuiteResult& s);

/// Per-case pass/fail table.
std::string suite_text(const SuiteResult& s);

}  // namespace gau
