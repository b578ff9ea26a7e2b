#pragma once

#include "flatsaf/involution.hpp"

#include <memory>

namespace flatsaf {

// Replayable record of the reduction performed by the decision procedure.
struct DecisionTree {
    enum class Kind { BaseCP, NotCPLeaf, Budget, Step, Split };
    Kind kind = Kind::Budget;
    std::optional<RauzyStep> step;      // Kind::Step
    int splitTop = 0, splitBottom = 0;  // Kind::Split prefix sizes
    std::vector<DecisionTree> children;

    nlohmann::json to_json() const;
};

struct PeriodicityVerdict {
    enum class Kind { CP, NotCP, Inconclusive };
    Kind kind;
    std::optional<LinearInvolution> certificate; // NotCP: sub-involution with saf != 0
    DecisionTree tree;
    long stepsUsed = 0;

    nlohmann::json to_json() const;
    static const char* kind_name(Kind k);
};

PeriodicityVerdict decideCompletePeriodicity(const LinearInvolution& T, long budget = 10000);

// Re-applies the recorded reduction to T and checks each recorded step and
// leaf condition; returns false on any mismatch.
bool replay(const LinearInvolution& T, const DecisionTree& tree);

} // namespace flatsaf
