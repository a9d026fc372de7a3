#ifndef PGAUT_GRAPH_HPP
#define PGAUT_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pgaut/bitset.hpp"

namespace pgaut {

// Simple undirected graph, immutable once built. Adjacency is held both as
// dense bitset rows (O(1) queries, mask intersections during refinement)
// and as sorted neighbor lists. The lists can be skipped for bulk scans
// that only ever touch a handful of rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, bool with_lists = true);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            bool with_lists = true);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Bitset& row(int v) const { return rows_[v]; }
    int degree(int v) const { return degree_[v]; }

    bool has_neighbor_lists() const { return !adj_.empty() || n_ == 0; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Construction helpers; graphs are treated as frozen after the builder
    // that owns them returns.
    void add_edge(int u, int v);
    void flip_edge(int u, int v);
    void assign_row(int v, Bitset row);
    void finalize(bool with_lists = true);

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<Bitset> rows_;
    std::vector<int> degree_;
    std::vector<std::vector<int>> adj_;
};

}  // namespace pgaut

#endif
