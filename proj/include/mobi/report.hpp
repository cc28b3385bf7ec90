#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mobi/vec.hpp"

namespace mobi {

/// One counterexample: the sampled inputs plus both sides of the identity
/// that disagreed (or, for contrapositive checks, collapsed).
struct Witness {
    std::vector<Vec> inputs;
    Vec lhs;
    Vec rhs;
    double dist = 0.0;
};

constexpr std::size_t kMaxWitnesses = 10;

/// Outcome of checking one law on sampled inputs.
struct AxiomReport {
    std::string axiom_id;
    std::size_t samples_tested = 0;
    std::vector<Witness> failures; // first kMaxWitnesses retained
    std::vector<std::string> input_names;
    std::string note;

    bool passed() const { return failures.empty(); }

    void record_failure(Witness w) {
        if (failures.size() < kMaxWitnesses) failures.push_back(std::move(w));
        else if (failures.size() == kMaxWitnesses) failures_truncated = true;
    }

    bool failures_truncated = false;
};

inline bool all_passed(const std::vector<AxiomReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return false;
    return true;
}

/// Separation floor for contrapositive tests of implication-shaped laws
/// (cancellation and the like): inputs at least this far apart must map to
/// outputs that stay distinguishable at the detection tolerance.
constexpr double kSeparationFloor = 1e-3;

} // namespace mobi
