#ifndef PGAUT_INJECTION_HPP
#define PGAUT_INJECTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pgaut/bigint.hpp"

namespace pgaut {

// Instance of the subset-injection construction: for strictly decreasing
// positive integers m_1 > ... > m_n and an arbitrary positive integer m,
// every nonempty subset S_B of B = {m_2..m_n} is associated with a proper
// subset S_A of A = {m_1..m_n; m} containing m_1 and m such that
// prod(S_B) < prod(S_A \ {m}).
//
// A is a sequence of n value slots plus one distinguished marker slot for
// m, so the construction stays well-defined when m numerically collides
// with some m_i; products multiply values, membership tracks slots.
struct InjectionInstance {
    std::vector<std::uint64_t> ms;  // m_1..m_n, strictly decreasing, n >= 2
    std::uint64_t m = 0;
};

inline constexpr int kInjectionCap = 20;  // 2^(n-1)-1 subsets stay enumerable

struct Association {
    std::uint32_t from_indices = 0;  // bit i (1-based) = m_i chosen from B
    std::uint32_t image_slots = 0;   // bit 0 = marker slot, bit i = slot of m_i
    std::vector<std::uint64_t> from;          // values of S_B, ascending
    std::vector<std::uint64_t> to_without_m;  // values of S_A minus the marker
    BigInt lhs;                               // prod(S_B)
    BigInt rhs;                               // prod(S_A \ {m})
};

// Validates ms strictly decreasing positive, m positive, n in [2, cap].
void validate_instance(const InjectionInstance& inst);

// Image of one nonempty subset of B, given by values.
Association associate(const InjectionInstance& inst,
                      const std::vector<std::uint64_t>& s_b);

// The complete association, ordered by ascending index bitmask of the
// domain subset. Bijective onto its image; both sides have 2^(n-1)-1
// elements.
std::vector<Association> full_map(const InjectionInstance& inst);

// Re-checks every guarantee of the construction on a concrete instance:
// cardinality, slot-level injectivity, m_1 and marker in every image,
// properness, and the strict product inequality. Returns false and fills
// `why` on the first violation.
bool verify_injection_guarantees(const InjectionInstance& inst, std::string* why);

}  // namespace pgaut

#endif
