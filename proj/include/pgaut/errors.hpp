#ifndef PGAUT_ERRORS_HPP
#define PGAUT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pgaut {

// Search-tree node budget exhausted. Deliberately distinct from invalid
// input: the CLI maps it to the resource-cap exit code, never to a wrong
// answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t nodes)
        : std::runtime_error("automorphism search exceeded node budget (" +
                             std::to_string(nodes) + " nodes)"),
          nodes_(nodes) {}
    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_;
};

// Brute-force enumeration requested beyond its hard cap.
class OracleTooLarge : public std::runtime_error {
public:
    explicit OracleTooLarge(int n, int cap)
        : std::runtime_error("brute-force oracle limited to " +
                             std::to_string(cap) + " vertices, got " +
                             std::to_string(n)) {}
};

}  // namespace pgaut

#endif
