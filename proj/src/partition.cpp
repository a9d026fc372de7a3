#include "pgaut/partition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace pgaut {

OrderedPartition OrderedPartition::unit(int n) {
    OrderedPartition p;
    if (n > 0) {
        p.cells.emplace_back(n);
        std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
    }
    return p;
}

OrderedPartition OrderedPartition::discrete(int n) {
    OrderedPartition p;
    p.cells.reserve(n);
    for (int v = 0; v < n; ++v) p.cells.push_back({v});
    return p;
}

int OrderedPartition::vertex_count() const {
    int n = 0;
    for (const auto& c : cells) n += static_cast<int>(c.size());
    return n;
}

bool OrderedPartition::is_discrete() const {
    for (const auto& c : cells)
        if (c.size() != 1) return false;
    return true;
}

std::vector<int> OrderedPartition::cell_sizes() const {
    std::vector<int> s;
    s.reserve(cells.size());
    for (const auto& c : cells) s.push_back(static_cast<int>(c.size()));
    return s;
}

std::vector<int> OrderedPartition::vertex_sequence() const {
    std::vector<int> seq;
    seq.reserve(vertex_count());
    for (const auto& c : cells) seq.insert(seq.end(), c.begin(), c.end());
    return seq;
}

namespace {

// Worklist refinement. Cells carry stable ids so queue entries survive
// splits of other cells; a stale id (cell already split) is simply skipped,
// which is sound because every fragment is re-enqueued.
class Refiner {
public:
    Refiner(const Graph& g, const OrderedPartition& p) : g_(g) {
        cells_.reserve(p.cells.size() * 2);
        for (const auto& members : p.cells) {
            if (members.empty())
                throw std::invalid_argument("refine: empty cell");
            cells_.push_back({next_id_++, members});
        }
    }

    void enqueue_all() {
        for (const auto& c : cells_) queue_.push_back(c.id);
    }

    void enqueue_position(int pos) { queue_.push_back(cells_[pos].id); }

    OrderedPartition run() {
        const int n = g_.vertex_count();
        Bitset mask(n);
        std::vector<std::pair<std::size_t, int>> keyed;  // (count, vertex)
        while (!queue_.empty()) {
            int splitter_id = queue_.front();
            queue_.pop_front();
            int spos = position_of(splitter_id);
            if (spos < 0) continue;  // splitter itself was split; fragments queued

            mask.clear();
            for (int v : cells_[spos].members) mask.set(v);

            for (std::size_t i = 0; i < cells_.size(); ++i) {
                auto& members = cells_[i].members;
                if (members.size() == 1) continue;
                keyed.clear();
                bool uniform = true;
                for (int v : members) {
                    std::size_t c = Bitset::and_count(g_.row(v), mask);
                    if (!keyed.empty() && c != keyed.front().first) uniform = false;
                    keyed.emplace_back(c, v);
                }
                if (uniform) continue;

                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) {
                                     return a.first > b.first;
                                 });
                std::vector<Cell> fragments;
                std::size_t run_begin = 0;
                for (std::size_t j = 1; j <= keyed.size(); ++j) {
                    if (j == keyed.size() || keyed[j].first != keyed[run_begin].first) {
                        Cell frag{next_id_++, {}};
                        frag.members.reserve(j - run_begin);
                        for (std::size_t t = run_begin; t < j; ++t)
                            frag.members.push_back(keyed[t].second);
                        fragments.push_back(std::move(frag));
                        run_begin = j;
                    }
                }
                for (const auto& f : fragments) queue_.push_back(f.id);
                cells_.erase(cells_.begin() + i);
                cells_.insert(cells_.begin() + i,
                              std::make_move_iterator(fragments.begin()),
                              std::make_move_iterator(fragments.end()));
                i += fragments.size() - 1;
            }
        }
        OrderedPartition out;
        out.cells.reserve(cells_.size());
        for (auto& c : cells_) out.cells.push_back(std::move(c.members));
        return out;
    }

private:
    struct Cell {
        int id;
        std::vector<int> members;
    };

    int position_of(int id) const {
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (cells_[i].id == id) return static_cast<int>(i);
        return -1;
    }

    const Graph& g_;
    std::vector<Cell> cells_;
    std::deque<int> queue_;
    int next_id_ = 0;
};

}  // namespace

OrderedPartition refine(const Graph& g, const OrderedPartition& p) {
    Refiner r(g, p);
    r.enqueue_all();
    return r.run();
}

OrderedPartition individualize(const OrderedPartition& p, int cell_index, int v) {
    if (cell_index < 0 || cell_index >= static_cast<int>(p.cells.size()))
        throw std::invalid_argument("individualize: bad cell index");
    const auto& cell = p.cells[cell_index];
    if (cell.size() < 2)
        throw std::invalid_argument("individualize: cell must have >= 2 vertices");
    OrderedPartition out;
    out.cells.reserve(p.cells.size() + 1);
    for (int i = 0; i < static_cast<int>(p.cells.size()); ++i) {
        if (i != cell_index) {
            out.cells.push_back(p.cells[i]);
            continue;
        }
        std::vector<int> rest;
        rest.reserve(cell.size() - 1);
        bool found = false;
        for (int u : cell) {
            if (u == v)
                found = true;
            else
                rest.push_back(u);
        }
        if (!found) throw std::invalid_argument("individualize: v not in cell");
        out.cells.push_back({v});
        out.cells.push_back(std::move(rest));
    }
    return out;
}

OrderedPartition refine_from_split(const Graph& g, const OrderedPartition& p,
                                   int cell_index) {
    Refiner r(g, p);
    r.enqueue_position(cell_index);
    r.enqueue_position(cell_index + 1);
    return r.run();
}

}  // namespace pgaut
