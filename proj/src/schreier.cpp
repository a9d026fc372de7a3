#include "pgaut/schreier.hpp"

#include <stdexcept>

namespace pgaut {

std::vector<Permutation> StabilizerChain::all_generators() const {
    std::vector<Permutation> out;
    for (const auto& L : levels_)
        out.insert(out.end(), L.gens.begin(), L.gens.end());
    return out;
}

void StabilizerChain::push_level(int point) {
    if (point < 0 || point >= degree_)
        throw std::invalid_argument("StabilizerChain: base point out of range");
    Level L;
    L.base = point;
    Permutation id = Permutation::identity(degree_);
    L.transversal.emplace(point, std::make_pair(id, id));
    L.orbit.push_back(point);
    levels_.push_back(std::move(L));
}

void StabilizerChain::prescribe_base(const std::vector<int>& base) {
    for (int b : base) push_level(b);
}

std::vector<const Permutation*> StabilizerChain::gens_at_or_below(
    std::size_t level) const {
    std::vector<const Permutation*> out;
    for (std::size_t i = level; i < levels_.size(); ++i)
        for (const auto& g : levels_[i].gens) out.push_back(&g);
    return out;
}

void StabilizerChain::rebuild_level(std::size_t level) {
    Level& L = levels_[level];
    L.transversal.clear();
    L.orbit.clear();
    Permutation id = Permutation::identity(degree_);
    L.transversal.emplace(L.base, std::make_pair(id, id));
    L.orbit.push_back(L.base);
    auto gens = gens_at_or_below(level);
    for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
        int p = L.orbit[qi];
        for (const Permutation* s : gens) {
            int q = (*s)(p);
            if (L.transversal.count(q)) continue;
            const Permutation& rep_p = L.transversal.at(p).first;
            Permutation rep = compose(*s, rep_p);
            Permutation inv = rep.inverse();
            L.transversal.emplace(q, std::make_pair(std::move(rep), std::move(inv)));
            L.orbit.push_back(q);
        }
    }
}

void StabilizerChain::rebuild_transversals() {
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);
}

std::pair<std::size_t, Permutation> StabilizerChain::sift_from(
    std::size_t from, Permutation g) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
        const Level& L = levels_[i];
        int delta = g(L.base);
        if (delta == L.base) continue;
        auto it = L.transversal.find(delta);
        if (it == L.transversal.end()) return {i, std::move(g)};
        g = compose(it->second.second, g);
    }
    return {levels_.size(), std::move(g)};
}

bool StabilizerChain::add_generator(const Permutation& g) {
    if (g.degree() != degree_)
        throw std::invalid_argument("add_generator: degree mismatch");
    auto [lvl, res] = sift_from(0, g);
    if (res.is_identity()) return false;
    if (lvl == levels_.size()) push_level(res.smallest_moved_point());
    levels_[lvl].gens.push_back(std::move(res));
    for (std::size_t i = lvl + 1; i-- > 0;) close_level(i);
    return true;
}

// Re-establishes the Schreier condition at `level`: every Schreier generator
// of the level's orbit must sift to the identity through the deeper levels.
// Residues are inserted where their sift stops and the affected deeper
// levels are closed before rescanning.
void StabilizerChain::close_level(std::size_t level) {
    if (level >= levels_.size()) return;
    bool again = true;
    while (again) {
        again = false;
        rebuild_level(level);
        auto gens = gens_at_or_below(level);
        Level& L = levels_[level];
        for (std::size_t qi = 0; qi < L.orbit.size() && !again; ++qi) {
            int p = L.orbit[qi];
            for (const Permutation* s : gens) {
                int q = (*s)(p);
                const Permutation& rep_p = L.transversal.at(p).first;
                const Permutation& inv_q = L.transversal.at(q).second;
                Permutation schreier = compose(inv_q, compose(*s, rep_p));
                if (schreier.is_identity()) continue;
                auto [j, res] = sift_from(level + 1, std::move(schreier));
                if (res.is_identity()) continue;
                if (j == levels_.size()) push_level(res.smallest_moved_point());
                levels_[j].gens.push_back(std::move(res));
                for (std::size_t t = j; t > level; --t) close_level(t);
                again = true;
                break;
            }
        }
    }
}

void StabilizerChain::add_strong_generator(std::size_t level, Permutation g) {
    if (level >= levels_.size())
        throw std::invalid_argument("add_strong_generator: bad level");
    levels_[level].gens.push_back(std::move(g));
}

Bitset StabilizerChain::orbit_bitset(std::size_t level) const {
    Bitset seen(degree_);
    std::vector<int> stack{levels_[level].base};
    seen.set(levels_[level].base);
    auto gens = gens_at_or_below(level);
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (const Permutation* s : gens) {
            int q = (*s)(p);
            if (!seen.test(q)) {
                seen.set(q);
                stack.push_back(q);
            }
        }
    }
    return seen;
}

bool StabilizerChain::contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [lvl, res] = sift_from(0, g);
    (void)lvl;
    return res.is_identity();
}

BigInt StabilizerChain::order() const {
    BigInt r = 1;
    for (const auto& L : levels_) r *= std::uint64_t(L.transversal.size());
    return r;
}

PermutationGroup group_from_generators(int degree,
                                       const std::vector<Permutation>& gens) {
    PermutationGroup g;
    g.degree = degree;
    g.generators = gens;
    g.chain = StabilizerChain(degree);
    for (const auto& p : gens) g.chain.add_generator(p);
    return g;
}

BigInt group_order(const PermutationGroup& g) { return g.chain.order(); }

bool group_contains(const PermutationGroup& g, const Permutation& p) {
    return g.chain.contains(p);
}

}  // namespace pgaut
