#pragma once

#include <string>
#include <vector>

#include "cubewalks/errors.hpp"

namespace cubewalks {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;   // empty on success
};

struct SelftestOptions {
    // extends the cheap cross-route sweep beyond the fixed suite when > 4
    int max_n = 4;
    // appends one deliberately failing check, for exercising failure paths
    bool inject_failure = false;
};

// fixed verification suite over frozen reference values; every check is
// deterministic
std::vector<CheckResult> run_selftest(const SelftestOptions& opts = {});

}
