#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minorlab/rational.hpp"

namespace minorlab {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Simple undirected graph over dense vertex ids 0..n-1. Bitset adjacency rows
// give O(n/64) neighbourhood operations, which every search kernel here leans
// on. Graphs are value types: the mutating minor operations live in
// history.hpp and return fresh graphs instead of aliasing.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return u != v && adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    void add_edge(int u, int v);

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].count()); }
    const Bitset& row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    // 0 for the empty graph.
    int min_degree() const;

    // 2|E|/n exactly; degenerate_input_error on the empty graph.
    Rational average_degree() const;

    // |N(u) ∩ N(v)|; std::invalid_argument on a non-edge.
    int edge_triangle_count(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

    // Induced subgraph on the set bits of `keep`; `out_map` (optional) gets
    // new id -> old id.
    Graph induced(const Bitset& keep, std::vector<int>* out_map = nullptr) const;

    // Does `s` induce a connected nonempty subgraph?
    bool connected_subset(const Bitset& s) const;
    bool is_connected() const;

    Bitset full_mask() const { Bitset b(static_cast<std::size_t>(n_)); b.set(); return b; }

    // Optional stable labels, preserved across minor operations.
    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    friend Graph delete_vertex(const Graph&, int);
    friend Graph delete_edge(const Graph&, int, int);
    friend Graph contract_edge(const Graph&, int, int);

    void check_vertex(int v, const char* what) const;

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_; // empty or size n_
};

// Single-step minor operations. Deleting vertex v shifts ids > v down by one;
// contracting uv merges into min(u,v) and removes the slot of max(u,v).
Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph contract_edge(const Graph& g, int u, int v);

} // namespace minorlab
