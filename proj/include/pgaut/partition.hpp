#ifndef PGAUT_PARTITION_HPP
#define PGAUT_PARTITION_HPP

#include <vector>

#include "pgaut/graph.hpp"

namespace pgaut {

// Ordered partition of {0..N-1}: the working state of refinement and the
// individualization search. Refinement only ever splits cells in place, so
// relative cell order is preserved.
struct OrderedPartition {
    std::vector<std::vector<int>> cells;

    static OrderedPartition unit(int n);
    static OrderedPartition discrete(int n);

    int vertex_count() const;
    bool is_discrete() const;
    std::vector<int> cell_sizes() const;
    // Concatenation of cells; for discrete partitions this is the vertex
    // sequence that leaf matchings are read from.
    std::vector<int> vertex_sequence() const;

    bool operator==(const OrderedPartition&) const = default;
};

// Coarsest equitable refinement: in the result, vertices in the same cell
// have equal neighbor counts into every cell. Splits replace a cell by its
// fragments ordered by descending neighbor count into the active splitter;
// the procedure is label-free, so it commutes with graph automorphisms.
OrderedPartition refine(const Graph& g, const OrderedPartition& p);

// Replace cell `cell_index` by [{v}, cell minus v].
OrderedPartition individualize(const OrderedPartition& p, int cell_index, int v);

// Refinement restarted from the two fragments at positions `cell_index` and
// `cell_index + 1`; valid when the partition was equitable before the split.
OrderedPartition refine_from_split(const Graph& g, const OrderedPartition& p,
                                   int cell_index);

}  // namespace pgaut

#endif
