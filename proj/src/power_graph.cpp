#include "pgaut/power_graph.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "pgaut/arithmetic.hpp"

namespace pgaut {

PowerGraph build_power_graph(std::uint64_t n, const PowerGraphOptions& opts) {
    if (n == 0) throw std::invalid_argument("build_power_graph: n must be positive");
    if (n > opts.max_n)
        throw std::invalid_argument("build_power_graph: n exceeds size cap (" +
                                    std::to_string(opts.max_n) + ")");
    const int N = static_cast<int>(n);

    PowerGraph pg;
    pg.n = n;
    pg.orders.resize(N);
    for (int v = 0; v < N; ++v)
        pg.orders[v] = n / std::gcd(n, std::uint64_t(v));

    // Vertices of equal order have identical rows up to the self bit, so
    // adjacency is assembled per order class: class d is adjacent to class e
    // iff d | e or e | d.
    const auto ds = divisors(n);
    std::unordered_map<std::uint64_t, int> divisor_index;
    for (std::size_t i = 0; i < ds.size(); ++i) divisor_index[ds[i]] = int(i);

    std::vector<Bitset> class_mask(ds.size(), Bitset(N));
    for (int v = 0; v < N; ++v) class_mask[divisor_index.at(pg.orders[v])].set(v);

    std::vector<Bitset> order_row(ds.size(), Bitset(N));
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = 0; j < ds.size(); ++j)
            if (ds[i] % ds[j] == 0 || ds[j] % ds[i] == 0)
                order_row[i] |= class_mask[j];

    pg.graph = Graph(N);
    for (int v = 0; v < N; ++v) {
        Bitset row = order_row[divisor_index.at(pg.orders[v])];
        row.reset(v);
        pg.graph.assign_row(v, std::move(row));
    }
    pg.graph.finalize(opts.with_neighbor_lists);
    return pg;
}

std::map<std::uint64_t, std::vector<int>> generator_classes(const PowerGraph& g) {
    std::map<std::uint64_t, std::vector<int>> classes;
    for (int v = 0; v < g.graph.vertex_count(); ++v)
        classes[g.orders[v]].push_back(v);
    return classes;
}

std::uint64_t degree_closed_form(std::uint64_t n, std::uint64_t d) {
    if (n == 0 || d == 0 || n % d != 0)
        throw std::invalid_argument("degree_closed_form: d must divide n");
    std::uint64_t deg = d - 1;
    for (std::uint64_t e : divisors(n))
        if (e != d && e % d == 0) deg += euler_phi(e);
    return deg;
}

}  // namespace pgaut
