#ifndef PGAUT_ARITHMETIC_HPP
#define PGAUT_ARITHMETIC_HPP

#include <cstdint>
#include <vector>

namespace pgaut {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;
    bool operator==(const PrimePower&) const = default;
};

// Prime-exponent decomposition of n, primes strictly ascending.
// n = 1 has an empty factor list.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    std::size_t distinct_primes() const { return factors.size(); }
    bool is_prime_power() const { return factors.size() <= 1; }
    bool is_squarefree() const {
        for (const auto& f : factors)
            if (f.exponent > 1) return false;
        return true;
    }
};

// Trial division by sieved primes up to sqrt(n); intended range n <= 10^9.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t d);
std::uint64_t euler_phi(const Factorization& f);

// All divisors of n in ascending order, including 1 and n.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

}  // namespace pgaut

#endif
