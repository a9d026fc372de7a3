#include "pgaut/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace pgaut {

bool is_graph_automorphism(const Graph& g, const Permutation& p) {
    if (p.degree() != g.vertex_count()) return false;
    // A bijection mapping every edge to an edge maps the edge set onto
    // itself, so non-edges are preserved automatically.
    for (int u = 0; u < g.vertex_count(); ++u) {
        bool ok = true;
        g.row(u).for_each_set([&](std::size_t v) {
            if (int(v) > u && !g.adjacent(p(u), p(int(v)))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

PermutationGroup brute_force_aut(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kBruteForceCap) throw OracleTooLarge(n, kBruteForceCap);

    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> survivors;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v) != g.adjacent(im[u], im[v])) {
                    ok = false;
                    break;
                }
        if (ok) survivors.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));

    PermutationGroup group = group_from_generators(n, survivors);
    if (group.chain.order() != survivors.size())
        throw std::logic_error("brute_force_aut: chain order != survivor count");
    return group;
}

namespace {

// Classic individualization-refinement automorphism search. The first
// (leftmost) path fixes the base: its branch vertices become the stabilizer
// chain's base points. Every other branch of a first-path node is either
// pruned because its vertex already lies in the known orbit of the base
// point, or searched for a single automorphism mapping the base point to it
// (one coset representative is enough; the rest of the coset is generated
// by the deeper levels). Nodes are processed deepest-first so the chain is
// as rich as possible when the shallow, expensive levels are swept.
class AutSearch {
public:
    AutSearch(const Graph& g, const SearchOptions& opt) : g_(g), opt_(opt) {}

    PermutationGroup run() {
        const int n = g_.vertex_count();
        OrderedPartition pi = refine(g_, OrderedPartition::unit(n));
        count_node();

        while (!pi.is_discrete()) {
            PathNode node;
            node.partition = pi;
            node.shape = pi.cell_sizes();
            node.target_cell = pick_target_cell(pi);
            int v = *std::min_element(pi.cells[node.target_cell].begin(),
                                      pi.cells[node.target_cell].end());
            node.branch_vertex = v;
            base_.push_back(v);
            pi = descend(pi, node.target_cell, v);
            path_.push_back(std::move(node));
        }
        leaf_seq_ = pi.vertex_sequence();

        chain_ = StabilizerChain(n);
        chain_.prescribe_base(base_);

        for (std::size_t lvl = path_.size(); lvl-- > 0;) {
            const PathNode& node = path_[lvl];
            const auto& cell = node.partition.cells[node.target_cell];
            Bitset orbit = chain_.orbit_bitset(lvl);
            for (int w : cell) {
                if (w == node.branch_vertex || orbit.test(w)) continue;
                OrderedPartition child =
                    descend(node.partition, node.target_cell, w);
                std::optional<Permutation> found = search_subtree(lvl + 1, child);
                if (found) {
                    chain_.add_strong_generator(lvl, std::move(*found));
                    orbit = chain_.orbit_bitset(lvl);
                }
            }
        }

        chain_.rebuild_transversals();
        PermutationGroup group;
        group.degree = n;
        group.generators = chain_.all_generators();
        group.chain = std::move(chain_);
        return group;
    }

private:
    struct PathNode {
        OrderedPartition partition;
        std::vector<int> shape;
        int target_cell = -1;
        int branch_vertex = -1;
    };

    // First largest non-singleton cell.
    static int pick_target_cell(const OrderedPartition& p) {
        int best = -1;
        std::size_t best_size = 1;
        for (std::size_t i = 0; i < p.cells.size(); ++i)
            if (p.cells[i].size() > best_size) {
                best = static_cast<int>(i);
                best_size = p.cells[i].size();
            }
        return best;
    }

    OrderedPartition descend(const OrderedPartition& p, int cell, int v) {
        count_node();
        return refine_from_split(g_, individualize(p, cell, v), cell);
    }

    void count_node() {
        if (++nodes_ > opt_.node_budget) throw BudgetExceeded(nodes_);
    }

    // Searches the subtree whose root partition (already refined) sits at
    // `depth`; returns the first automorphism found, if any.
    std::optional<Permutation> search_subtree(std::size_t depth,
                                              const OrderedPartition& pi) {
        if (depth == path_.size()) {
            if (!pi.is_discrete()) return std::nullopt;
            Permutation cand =
                Permutation::from_two_sequences(leaf_seq_, pi.vertex_sequence());
            if (is_graph_automorphism(g_, cand)) return cand;
            return std::nullopt;
        }
        const PathNode& node = path_[depth];
        if (pi.cell_sizes() != node.shape) return std::nullopt;
        for (int w : pi.cells[node.target_cell]) {
            OrderedPartition child = descend(pi, node.target_cell, w);
            if (auto found = search_subtree(depth + 1, child)) return found;
        }
        return std::nullopt;
    }

    const Graph& g_;
    SearchOptions opt_;
    std::uint64_t nodes_ = 0;
    std::vector<PathNode> path_;
    std::vector<int> base_;
    std::vector<int> leaf_seq_;
    StabilizerChain chain_;
};

}  // namespace

PermutationGroup automorphism_group(const Graph& g, const SearchOptions& opt) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("automorphism_group: empty graph");
    return AutSearch(g, opt).run();
}

OrderedPartition closed_twin_classes(const Graph& g) {
    const int n = g.vertex_count();
    std::map<std::vector<std::uint64_t>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        Bitset closed = g.row(v);
        closed.set(v);
        groups[closed.words()].push_back(v);
    }
    std::vector<std::vector<int>> cells;
    cells.reserve(groups.size());
    for (auto& [key, members] : groups) cells.push_back(std::move(members));
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    OrderedPartition p;
    p.cells = std::move(cells);
    return p;
}

BigInt twin_lower_bound_order(const Graph& g) {
    BigInt r = 1;
    for (const auto& cell : closed_twin_classes(g).cells)
        r *= factorial(cell.size());
    return r;
}

}  // namespace pgaut
