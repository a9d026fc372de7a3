#ifndef PGAUT_BIGINT_HPP
#define PGAUT_BIGINT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgaut {

// Group orders exceed 64 bits early (n=120 already involves 33!), so all
// order arithmetic is done on arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(std::uint64_t k) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= k; ++i) r *= i;
    return r;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace pgaut

#endif
