#include "minorlab/graph.hpp"

#include <stdexcept>

#include "minorlab/errors.hpp"

namespace minorlab {

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: self-loop at " + std::to_string(u));
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    ++m_;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

Rational Graph::average_degree() const {
    if (n_ == 0) throw degenerate_input_error("average_degree: empty graph");
    return Rational(2 * m_, n_);
}

int Graph::edge_triangle_count(int u, int v) const {
    check_vertex(u, "edge_triangle_count");
    check_vertex(v, "edge_triangle_count");
    if (!has_edge(u, v))
        throw std::invalid_argument("edge_triangle_count: " + std::to_string(u) + "-" +
                                    std::to_string(v) + " is not an edge");
    return static_cast<int>((adj_[static_cast<std::size_t>(u)] & adj_[static_cast<std::size_t>(v)]).count());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (auto v = adj_[static_cast<std::size_t>(u)].find_next(static_cast<std::size_t>(u));
             v != Bitset::npos; v = adj_[static_cast<std::size_t>(u)].find_next(v))
            out.emplace_back(u, static_cast<int>(v));
    return out;
}

Graph Graph::induced(const Bitset& keep, std::vector<int>* out_map) const {
    std::vector<int> map;
    map.reserve(keep.count());
    std::vector<int> inv(static_cast<std::size_t>(n_), -1);
    for (auto v = keep.find_first(); v != Bitset::npos; v = keep.find_next(v)) {
        inv[v] = static_cast<int>(map.size());
        map.push_back(static_cast<int>(v));
    }
    Graph g(static_cast<int>(map.size()));
    for (int i = 0; i < g.n_; ++i) {
        Bitset r = adj_[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] & keep;
        for (auto v = r.find_first(); v != Bitset::npos; v = r.find_next(v)) {
            int j = inv[v];
            if (j > i) g.add_edge(i, j);
        }
    }
    if (has_labels()) {
        std::vector<std::string> lbl;
        lbl.reserve(map.size());
        for (int old : map) lbl.push_back(labels_[static_cast<std::size_t>(old)]);
        g.set_labels(std::move(lbl));
    }
    if (out_map) *out_map = std::move(map);
    return g;
}

bool Graph::connected_subset(const Bitset& s) const {
    auto start = s.find_first();
    if (start == Bitset::npos) return false;
    Bitset seen(static_cast<std::size_t>(n_));
    Bitset frontier(static_cast<std::size_t>(n_));
    seen.set(start);
    frontier.set(start);
    while (frontier.any()) {
        Bitset next(static_cast<std::size_t>(n_));
        for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
            next |= adj_[v];
        next &= s;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen == s;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return connected_subset(full_mask());
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("set_labels: expected " + std::to_string(n_) + " labels");
    labels_ = std::move(labels);
}

namespace {

Graph rebuild_without_vertex(const Graph& g, int gone, const Bitset* merged_row, int survivor) {
    int n = g.vertex_count();
    Graph out(n - 1);
    auto shift = [gone](int v) { return v < gone ? v : v - 1; };
    for (int u = 0; u < n; ++u) {
        if (u == gone) continue;
        const Bitset& r = (merged_row && u == survivor) ? *merged_row : g.row(u);
        for (auto v = r.find_next(static_cast<std::size_t>(u)); v != Bitset::npos; v = r.find_next(v)) {
            if (static_cast<int>(v) == gone) continue;
            out.add_edge(shift(u), shift(static_cast<int>(v)));
        }
        // merged rows may contain neighbours below u
        if (merged_row && u == survivor) {
            for (auto v = r.find_first(); v != Bitset::npos && static_cast<int>(v) < u; v = r.find_next(v)) {
                if (static_cast<int>(v) == gone) continue;
                out.add_edge(shift(u), shift(static_cast<int>(v)));
            }
        }
    }
    if (g.has_labels()) {
        std::vector<std::string> lbl;
        lbl.reserve(static_cast<std::size_t>(n - 1));
        for (int v = 0; v < n; ++v)
            if (v != gone) lbl.push_back(g.label(v));
        out.set_labels(std::move(lbl));
    }
    return out;
}

} // namespace

Graph delete_vertex(const Graph& g, int v) {
    g.check_vertex(v, "delete_vertex");
    return rebuild_without_vertex(g, v, nullptr, -1);
}

Graph delete_edge(const Graph& g, int u, int v) {
    g.check_vertex(u, "delete_edge");
    g.check_vertex(v, "delete_edge");
    if (!g.has_edge(u, v))
        throw std::invalid_argument("delete_edge: " + std::to_string(u) + "-" + std::to_string(v) +
                                    " is not an edge");
    Graph out = g;
    out.adj_[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(v));
    out.adj_[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(u));
    --out.m_;
    return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
    g.check_vertex(u, "contract_edge");
    g.check_vertex(v, "contract_edge");
    if (!g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: " + std::to_string(u) + "-" + std::to_string(v) +
                                    " is not an edge");
    int survivor = std::min(u, v);
    int gone = std::max(u, v);
    Bitset merged = g.row(survivor) | g.row(gone);
    merged.reset(static_cast<std::size_t>(survivor));
    merged.reset(static_cast<std::size_t>(gone));
    return rebuild_without_vertex(g, gone, &merged, survivor);
}

} // namespace minorlab
