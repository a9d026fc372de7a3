#ifndef PGAUT_SEARCH_HPP
#define PGAUT_SEARCH_HPP

#include <cstdint>

#include "pgaut/bigint.hpp"
#include "pgaut/errors.hpp"
#include "pgaut/graph.hpp"
#include "pgaut/partition.hpp"
#include "pgaut/schreier.hpp"

namespace pgaut {

struct SearchOptions {
    // Every individualize+refine counts as one node; exceeding the budget
    // raises BudgetExceeded rather than returning a wrong answer.
    std::uint64_t node_budget = 10'000'000;
};

inline constexpr int kBruteForceCap = 10;

// Enumerates all N! vertex bijections and keeps the adjacency-preserving
// ones. Generators of the returned group are the full survivor list.
// Throws OracleTooLarge above kBruteForceCap vertices.
PermutationGroup brute_force_aut(const Graph& g);

// Individualization-refinement backtracking with stabilizer-chain counting.
// The returned order is exact.
PermutationGroup automorphism_group(const Graph& g, const SearchOptions& = {});

// Partition of the vertices by equality of closed neighborhoods
// N[v] = N(v) + v; cells ordered by smallest member.
OrderedPartition closed_twin_classes(const Graph& g);

// Product of factorials of closed-twin class sizes; always divides the
// automorphism group order (closed twins may be permuted freely).
BigInt twin_lower_bound_order(const Graph& g);

// True iff applying p to both endpoints preserves the edge relation exactly.
bool is_graph_automorphism(const Graph& g, const Permutation& p);

}  // namespace pgaut

#endif
