#include "pgaut/formula.hpp"

#include <stdexcept>

#include "pgaut/arithmetic.hpp"

namespace pgaut {

AutDecomposition aut_order_formula(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("aut_order_formula: n must be positive");
    AutDecomposition dec;
    dec.n = n;
    Factorization f = factorize(n);
    if (f.is_prime_power()) {
        dec.prime_power = true;
        dec.top_factor = n;
        dec.order = factorial(n);
        return dec;
    }
    dec.prime_power = false;
    dec.order = 1;
    for (std::uint64_t d : divisors(f)) {
        if (d == 1 || d == n) continue;
        std::uint64_t phi = euler_phi(d);
        dec.factors.emplace_back(d, phi);
        dec.order *= factorial(phi);
    }
    dec.top_factor = euler_phi(f) + 1;
    dec.order *= factorial(dec.top_factor);
    return dec;
}

}  // namespace pgaut
