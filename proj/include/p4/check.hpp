#pragma once

#include <string>
#include <vector>

namespace p4 {

// Outcome of one verification item.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

using CheckList = std::vector<Check>;

inline bool all_pass(const CheckList& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace p4
