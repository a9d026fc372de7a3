#include "pgaut/arithmetic.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgaut {

namespace {

// Primes up to 31623 cover trial division for n <= 10^9.
const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 31650;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> ps;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
                composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

}  // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::uint64_t rest = n;
    for (std::uint32_t p : small_primes()) {
        if (std::uint64_t(p) * p > rest) break;
        if (rest % p != 0) continue;
        std::uint32_t e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

std::uint64_t euler_phi(const Factorization& f) {
    std::uint64_t r = f.n;
    for (const auto& pp : f.factors) r = r / pp.prime * (pp.prime - 1);
    return r;
}

std::uint64_t euler_phi(std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("euler_phi: d must be positive");
    return euler_phi(factorize(d));
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> ds{1};
    for (const auto& pp : f.factors) {
        std::size_t old = ds.size();
        std::uint64_t q = 1;
        for (std::uint32_t e = 1; e <= pp.exponent; ++e) {
            q *= pp.prime;
            for (std::size_t i = 0; i < old; ++i) ds.push_back(ds[i] * q);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    return divisors(factorize(n));
}

}  // namespace pgaut
