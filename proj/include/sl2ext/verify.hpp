#pragma once

// Self-check suites: each returns a report of named checks with expected and
// actual values, suitable for printing one pass/fail line per check.

#include "sl2ext/engine.hpp"

#include <string>
#include <vector>

namespace sl2ext {

struct CheckResult {
    std::string name;
    bool pass;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t pass_count() const;
};

// Row-by-row comparison of two tables; check names are prefixed with
// `label`. A row-count mismatch produces a single failing check.
std::vector<CheckResult> compare_tables(const std::string& label,
                                        const std::vector<TableRow>& expected,
                                        const std::vector<TableRow>& computed);

// The named suites:
//   tables     recomputes both embedded reference tables (58 rows)
//   towers     self-Ext towers sum to their height, p = 5 and 7, n = 0..8
//   h2-cross   closed-form H^2 equals the engine for all mu up to 2p^3
//   bijection  b-strings match nontrivial traces in count and content,
//              degrees and lengths 1..10
//   stability  twist profiles stabilise at twist r = degree
//   bounds     counting identities, growth bounds, doubling families, and
//              the degree-doubling lower bound
SuiteReport run_verify_suite(const std::string& name, ExtEngine& engine);
const std::vector<std::string>& verify_suite_names();
std::vector<SuiteReport> verify_all(ExtEngine& engine);

}  // namespace sl2ext
