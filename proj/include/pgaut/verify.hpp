#ifndef PGAUT_VERIFY_HPP
#define PGAUT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pgaut/search.hpp"

namespace pgaut {

inline const std::vector<std::string> kVerifyMethods = {"formula", "twin", "ir",
                                                        "brute"};

// Testing hook: flip one adjacency bit of the built graph for value n
// before the graph-based methods run. The formula method is unaffected, so
// a corruption must surface as a disagreement.
struct CorruptSpec {
    std::uint64_t n = 0;
    int u = 0;
    int v = 1;
};

struct MethodRun {
    std::string order;  // decimal string, or "skipped" / "budget-exceeded"
    double elapsed_ms = 0.0;
    bool ran() const { return !order.empty() && order != "skipped" &&
                              order != "budget-exceeded"; }
};

struct VerifyEntry {
    std::uint64_t n = 0;
    std::string branch;  // "prime-power" | "general"
    std::vector<std::pair<std::string, MethodRun>> methods;  // requested order
    bool agree = true;
};

struct VerificationReport {
    std::vector<VerifyEntry> entries;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct VerifyOptions {
    int jobs = 1;
    SearchOptions search;
    std::optional<CorruptSpec> corrupt;
};

// Computes |Aut(P(Z_n))| for every n in [from, to] by each requested
// method; methods whose caps exclude an n are marked "skipped". Agreement
// is evaluated over the methods that ran.
VerificationReport run_verification(std::uint64_t from, std::uint64_t to,
                                    const std::vector<std::string>& methods,
                                    const VerifyOptions& opts = {});

nlohmann::json report_to_json(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);

}  // namespace pgaut

#endif
