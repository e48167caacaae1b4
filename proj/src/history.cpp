#include "minorlab/history.hpp"

#include <stdexcept>

namespace minorlab {

Graph apply_step(const Graph& g, const Step& step) {
    return std::visit(
        [&](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DeleteVertexStep>) return delete_vertex(g, s.v);
            else if constexpr (std::is_same_v<T, DeleteEdgeStep>) return delete_edge(g, s.u, s.v);
            else return contract_edge(g, s.u, s.v);
        },
        step);
}

void ContractionHistory::push(const Step& step) {
    final_ = apply_step(final_, step);
    steps_.push_back(step);
}

Graph ContractionHistory::replay() const {
    Graph g = initial_;
    for (const Step& s : steps_) g = apply_step(g, s);
    return g;
}

Bitset ContractionHistory::lift_set(const Bitset& s) const {
    if (s.size() != static_cast<std::size_t>(final_.vertex_count()))
        throw std::invalid_argument("lift_set: set sized for the wrong graph");
    Bitset cur = s;
    // walk the steps backwards, undoing one renumbering at a time
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        const Step& step = *it;
        int removed = -1;     // slot removed by this step, in pre-step ids
        int survivor = -1;    // pre-step id absorbing the removed vertex (contractions)
        if (std::holds_alternative<DeleteVertexStep>(step)) {
            removed = std::get<DeleteVertexStep>(step).v;
        } else if (std::holds_alternative<ContractEdgeStep>(step)) {
            auto c = std::get<ContractEdgeStep>(step);
            survivor = std::min(c.u, c.v);
            removed = std::max(c.u, c.v);
        } else {
            continue; // edge deletion keeps ids
        }
        Bitset pre(cur.size() + 1);
        for (auto v = cur.find_first(); v != Bitset::npos; v = cur.find_next(v)) {
            std::size_t p = v < static_cast<std::size_t>(removed) ? v : v + 1;
            pre.set(p);
        }
        if (survivor >= 0 && pre.test(static_cast<std::size_t>(survivor)))
            pre.set(static_cast<std::size_t>(removed));
        cur = std::move(pre);
    }
    return cur;
}

} // namespace minorlab
