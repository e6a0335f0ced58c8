#pragma once

#include <string>
#include <vector>

namespace coulomb {

/// One verified identity: deterministic id, outcome, and both sides
/// rendered for the report.
struct CheckCase {
    std::string id;
    bool pass = false;
    std::string expected;
    std::string actual;
};

/// Result of a named verification suite. Case order is deterministic.
struct CheckReport {
    std::string name;
    std::vector<CheckCase> cases;
    double wall_ms = 0.0;

    void add(std::string id, bool pass, std::string expected = "", std::string actual = "") {
        cases.push_back({std::move(id), pass, std::move(expected), std::move(actual)});
    }
    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : cases) n += c.pass ? 0 : 1;
        return n;
    }
};

}  // namespace coulomb
