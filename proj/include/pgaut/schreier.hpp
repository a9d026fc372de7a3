#ifndef PGAUT_SCHREIER_HPP
#define PGAUT_SCHREIER_HPP

#include <unordered_map>
#include <vector>

#include "pgaut/bigint.hpp"
#include "pgaut/bitset.hpp"
#include "pgaut/perm.hpp"

namespace pgaut {

// Stabilizer chain with explicitly stored transversals. Base points are
// chosen greedily (smallest point moved by a new generator) unless a base
// is prescribed. The exact group order is the product of the transversal
// sizes along the chain.
class StabilizerChain {
public:
    StabilizerChain() = default;
    explicit StabilizerChain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    std::size_t level_count() const { return levels_.size(); }
    int base_point(std::size_t level) const { return levels_[level].base; }
    std::size_t transversal_size(std::size_t level) const {
        return levels_[level].transversal.size();
    }
    const std::vector<Permutation>& level_generators(std::size_t level) const {
        return levels_[level].gens;
    }
    std::vector<Permutation> all_generators() const;

    // Append base points ahead of the search; levels start with trivial
    // transversals.
    void prescribe_base(const std::vector<int>& base);

    // Deterministic Schreier-Sims insertion: afterwards the chain is a
    // valid BSGS for everything added so far. Returns true if the group grew.
    bool add_generator(const Permutation& g);

    // Trusted insertion used by the IR search: g must fix base points
    // 0..level-1. No closure runs; the search itself guarantees that the
    // accumulated generators are strong. Call rebuild_transversals() before
    // querying order/membership.
    void add_strong_generator(std::size_t level, Permutation g);
    void rebuild_transversals();

    // Orbit of base[level] under all generators at levels >= level.
    Bitset orbit_bitset(std::size_t level) const;

    bool contains(const Permutation& g) const;
    BigInt order() const;

private:
    struct Level {
        int base = -1;
        std::vector<Permutation> gens;
        // point -> (rep, rep^-1) with rep(base) == point
        std::unordered_map<int, std::pair<Permutation, Permutation>> transversal;
        std::vector<int> orbit;  // BFS discovery order, orbit[0] == base
    };

    void push_level(int point);
    void rebuild_level(std::size_t level);
    void close_level(std::size_t level);
    std::vector<const Permutation*> gens_at_or_below(std::size_t level) const;
    // Sift g through levels starting at `from`; returns the level at which
    // sifting stopped and the residue.
    std::pair<std::size_t, Permutation> sift_from(std::size_t from,
                                                  Permutation g) const;

    int degree_ = 0;
    std::vector<Level> levels_;
};

// Generator list plus stabilizer-chain data yielding the exact group order.
struct PermutationGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    StabilizerChain chain;
};

// Builds a BSGS from an arbitrary generator list (full Schreier-Sims).
PermutationGroup group_from_generators(int degree,
                                       const std::vector<Permutation>& gens);

BigInt group_order(const PermutationGroup& g);
bool group_contains(const PermutationGroup& g, const Permutation& p);

}  // namespace pgaut

#endif
