#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"
#include "minorlab/history.hpp"

namespace minorlab {

// Certificate that `pattern` is a minor of `host`: one nonempty connected
// branch set of host vertices per pattern vertex, pairwise disjoint, with a
// host edge crossing between the branch sets of every pattern edge.
struct MinorModel {
    Graph host;
    Graph pattern;
    std::vector<Bitset> branch_sets; // indexed by pattern vertex, bits over host vertices
};

struct ModelViolation {
    enum class Kind {
        EmptyBranchSet,
        OverlappingBranchSets,
        DisconnectedBranchSet,
        UncoveredPatternEdge,
    };
    Kind kind;
    int a = -1; // pattern vertex (or edge endpoint)
    int b = -1; // second pattern vertex where relevant
    std::string message() const;
};

// nullopt iff all three model invariants hold; otherwise the first violation
// in a fixed scan order. Malformed input (branch_sets not keyed by V(pattern),
// host vertices out of range) throws std::invalid_argument.
std::optional<ModelViolation> verify_model(const MinorModel& model);

// Maps a model on history.final_graph() to a model on history.initial().
MinorModel lift_model(const ContractionHistory& history, const MinorModel& model);

} // namespace minorlab
