#include "pgaut/graph.hpp"

#include <stdexcept>

namespace pgaut {

Graph::Graph(int n, bool with_lists) : n_(n), rows_(n, Bitset(n)), degree_(n, 0) {
    (void)with_lists;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: self loop");
    if (rows_[u].test(v)) return;
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::flip_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::invalid_argument("flip_edge: bad vertex pair");
    rows_[u].flip(v);
    rows_[v].flip(u);
}

void Graph::assign_row(int v, Bitset row) {
    if (v < 0 || v >= n_ || row.size() != std::size_t(n_))
        throw std::invalid_argument("assign_row: bad row");
    rows_[v] = std::move(row);
}

void Graph::finalize(bool with_lists) {
    edge_count_ = 0;
    adj_.clear();
    if (with_lists) adj_.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
        degree_[v] = static_cast<int>(rows_[v].count());
        edge_count_ += degree_[v];
        if (with_lists) {
            adj_[v].reserve(degree_[v]);
            rows_[v].for_each_set([&](std::size_t u) { adj_[v].push_back(int(u)); });
        }
    }
    edge_count_ /= 2;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        bool with_lists) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.finalize(with_lists);
    return g;
}

}  // namespace pgaut
