#ifndef PGAUT_POWER_GRAPH_HPP
#define PGAUT_POWER_GRAPH_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "pgaut/graph.hpp"

namespace pgaut {

// Undirected power graph of the additive cyclic group Z_n: distinct u, v
// are adjacent iff one is a positive multiple of the other mod n, which in
// a cyclic group reduces to divisibility of element orders.
struct PowerGraph {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> orders;  // orders[v] = n / gcd(n, v); order of 0 is 1
    Graph graph;
};

struct PowerGraphOptions {
    std::uint64_t max_n = 100000;   // dense-storage guard
    bool with_neighbor_lists = true;
};

PowerGraph build_power_graph(std::uint64_t n, const PowerGraphOptions& opts = {});

// d -> the set of vertices generating the unique subgroup of order d.
// Every vertex appears in exactly one class; |class of d| = phi(d).
std::map<std::uint64_t, std::vector<int>> generator_classes(const PowerGraph& g);

// deg(x_d) = (d - 1) + sum of phi(e) over e | n, d | e, e != d.
std::uint64_t degree_closed_form(std::uint64_t n, std::uint64_t d);

}  // namespace pgaut

#endif
