#include "minorlab/minor_model.hpp"

#include <stdexcept>

namespace minorlab {

std::string ModelViolation::message() const {
    switch (kind) {
        case Kind::EmptyBranchSet:
            return "empty branch set for pattern vertex " + std::to_string(a);
        case Kind::OverlappingBranchSets:
            return "branch sets of pattern vertices " + std::to_string(a) + " and " +
                   std::to_string(b) + " overlap";
        case Kind::DisconnectedBranchSet:
            return "branch set of pattern vertex " + std::to_string(a) + " is disconnected";
        case Kind::UncoveredPatternEdge:
            return "pattern edge " + std::to_string(a) + "-" + std::to_string(b) +
                   " has no crossing host edge";
    }
    return "unknown violation";
}

std::optional<ModelViolation> verify_model(const MinorModel& model) {
    const int pn = model.pattern.vertex_count();
    const int hn = model.host.vertex_count();
    if (model.branch_sets.size() != static_cast<std::size_t>(pn))
        throw std::invalid_argument("verify_model: branch_sets must be keyed by V(pattern)");
    for (const Bitset& b : model.branch_sets)
        if (b.size() != static_cast<std::size_t>(hn))
            throw std::invalid_argument("verify_model: branch set cites host vertices out of range");

    for (int x = 0; x < pn; ++x)
        if (model.branch_sets[static_cast<std::size_t>(x)].none())
            return ModelViolation{ModelViolation::Kind::EmptyBranchSet, x, -1};

    for (int x = 0; x < pn; ++x)
        for (int y = x + 1; y < pn; ++y)
            if ((model.branch_sets[static_cast<std::size_t>(x)] & model.branch_sets[static_cast<std::size_t>(y)]).any())
                return ModelViolation{ModelViolation::Kind::OverlappingBranchSets, x, y};

    for (int x = 0; x < pn; ++x)
        if (!model.host.connected_subset(model.branch_sets[static_cast<std::size_t>(x)]))
            return ModelViolation{ModelViolation::Kind::DisconnectedBranchSet, x, -1};

    for (int x = 0; x < pn; ++x) {
        for (int y = x + 1; y < pn; ++y) {
            if (!model.pattern.has_edge(x, y)) continue;
            bool crossed = false;
            const Bitset& bx = model.branch_sets[static_cast<std::size_t>(x)];
            const Bitset& by = model.branch_sets[static_cast<std::size_t>(y)];
            for (auto u = bx.find_first(); u != Bitset::npos && !crossed; u = bx.find_next(u))
                crossed = (model.host.row(static_cast<int>(u)) & by).any();
            if (!crossed)
                return ModelViolation{ModelViolation::Kind::UncoveredPatternEdge, x, y};
        }
    }
    return std::nullopt;
}

MinorModel lift_model(const ContractionHistory& history, const MinorModel& model) {
    if (model.host != history.final_graph())
        throw std::invalid_argument("lift_model: model host is not the history's final graph");
    MinorModel out;
    out.host = history.initial();
    out.pattern = model.pattern;
    out.branch_sets.reserve(model.branch_sets.size());
    for (const Bitset& b : model.branch_sets) out.branch_sets.push_back(history.lift_set(b));
    return out;
}

} // namespace minorlab
