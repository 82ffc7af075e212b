#pragma once

#include <string>
#include <vector>

namespace young {

struct CheckRow {
    std::string suite;
    std::string property;
    std::string instance;
    bool passed = false;
    std::string detail;
};

/// Suites: orthogonality, norms, eigen, junta, all. Instances range over
/// n <= max_n. Throws InvalidInput on an unknown suite name or max_n < 2.
std::vector<CheckRow> run_checks(const std::string& suite, int max_n);

/// Tab-separated table, one row per check, with a header line.
std::string format_checks(const std::vector<CheckRow>& rows);

}  // namespace young
