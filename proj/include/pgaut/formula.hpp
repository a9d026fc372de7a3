#ifndef PGAUT_FORMULA_HPP
#define PGAUT_FORMULA_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pgaut/bigint.hpp"

namespace pgaut {

// Closed form for |Aut(P(Z_n))|. For n with at least two distinct prime
// factors the group is the direct sum of symmetric groups on the generator
// classes X_d (d | n, d != 1, n) together with one symmetric factor of
// degree phi(n)+1 on the universal vertices (generators plus 0). For prime
// powers the graph is complete and the order is n!.
struct AutDecomposition {
    std::uint64_t n = 0;
    bool prime_power = false;
    // (d, phi(d)) for d | n, d != 1, n — empty on the prime-power branch.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
    // phi(n)+1 on the general branch, n on the prime-power branch; the
    // factorial multiplicities together with this always partition n.
    std::uint64_t top_factor = 0;
    BigInt order;
};

AutDecomposition aut_order_formula(std::uint64_t n);

}  // namespace pgaut

#endif
