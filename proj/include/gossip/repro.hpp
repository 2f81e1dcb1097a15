#pragma once

#include <string>
#include <vector>

namespace gossip {

struct ReproResult {
    std::string target;
    bool ok = false;
    std::string detail;   // one-line summary
    std::string expected; // fixture text (byte targets)
    std::string actual;   // regenerated text
};

// Known targets: example211, table1, table2, table3, appendix-matrix,
// sec511, example431, example411, example511.
ReproResult repro(const std::string& target);
std::vector<std::string> repro_targets();

// Minimal unified-style diff of two line-oriented texts.
std::string unified_diff(const std::string& expected, const std::string& actual);

} // namespace gossip
