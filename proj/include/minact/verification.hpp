#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minact/bounds.hpp"

namespace minact {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    int criterion = 0; // grouping key for the acceptance suite
};

struct VerificationOptions {
    std::optional<Family> family_filter;
    std::vector<long long> p_filter; // empty = default ranges
    long long bar_budget = kDefaultBarBudget;
    TableSource tables;
    std::filesystem::path facts_path;
};

struct VerificationRun {
    std::vector<CheckResult> checks;
    std::vector<DimensionReport> reports;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

/// The full verification matrix: closed-form/oracle pattern equivalence,
/// bar-resolution fixtures, spectral congruence equivalence, the dimension
/// tables for all four families in both settings, character fixtures, and
/// the elementary abelian arithmetic with the bundled subgroup facts.
/// A family or p filter restricts the run to the dimension tables.
VerificationRun run_verification(const VerificationOptions& options);

} // namespace minact
