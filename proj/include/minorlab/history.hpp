#pragma once

#include <variant>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

struct DeleteVertexStep { int v; };
struct DeleteEdgeStep   { int u, v; };
struct ContractEdgeStep { int u, v; }; // survivor = min(u,v) after the merge

using Step = std::variant<DeleteVertexStep, DeleteEdgeStep, ContractEdgeStep>;

Graph apply_step(const Graph& g, const Step& step);

// Ordered record of deletions/contractions relating a minor back to its host.
// Replaying the steps on the initial graph reproduces the final graph
// exactly; lift_set maps final-graph vertex sets back to host vertex sets
// (preserving connectivity, since a contracted pair is adjacent in the host).
class ContractionHistory {
public:
    ContractionHistory() = default;
    explicit ContractionHistory(Graph initial)
        : initial_(initial), final_(std::move(initial)) {}

    const Graph& initial() const { return initial_; }
    const Graph& final_graph() const { return final_; }
    const std::vector<Step>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }

    // Applies `step` to the current final graph and appends it.
    void push(const Step& step);

    // Re-applies all steps to the initial graph.
    Graph replay() const;

    // Final-graph vertex set -> initial-graph vertex set.
    Bitset lift_set(const Bitset& s) const;

private:
    Graph initial_;
    Graph final_;
    std::vector<Step> steps_;
};

} // namespace minorlab
