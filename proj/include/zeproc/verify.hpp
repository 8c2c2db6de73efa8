#pragma once

#include <string>
#include <vector>

namespace zeproc {

// Exhaustive exact invariant suites at tiny parameters, shared between the
// CLI `verify` subcommand and the tests. Each case carries what was checked
// and the expected/actual rendering for the report.
struct VerifyCase {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct VerifyOptions {
    // Test hook: deliberately corrupts the negation inside the family
    // closure check so the failure path can be exercised end to end.
    bool inject_negation_fault = false;
};

std::vector<VerifyCase> run_verify(const VerifyOptions& opt = {});

} // namespace zeproc
