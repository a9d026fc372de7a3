#include "pgaut/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pgaut/arithmetic.hpp"
#include "pgaut/formula.hpp"
#include "pgaut/power_graph.hpp"

namespace pgaut {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

VerifyEntry verify_one(std::uint64_t n, const std::vector<std::string>& methods,
                       const VerifyOptions& opts) {
    VerifyEntry entry;
    entry.n = n;
    entry.branch = factorize(n).is_prime_power() ? "prime-power" : "general";

    const bool needs_graph = std::any_of(
        methods.begin(), methods.end(),
        [](const std::string& m) { return m != "formula"; });
    Graph graph;
    if (needs_graph) {
        graph = build_power_graph(n).graph;
        if (opts.corrupt && opts.corrupt->n == n) {
            graph.flip_edge(opts.corrupt->u, opts.corrupt->v);
            graph.finalize();
        }
    }

    for (const std::string& m : methods) {
        MethodRun run;
        auto t0 = std::chrono::steady_clock::now();
        if (m == "formula") {
            run.order = to_decimal(aut_order_formula(n).order);
        } else if (m == "twin") {
            run.order = to_decimal(twin_lower_bound_order(graph));
        } else if (m == "ir") {
            try {
                run.order = to_decimal(automorphism_group(graph, opts.search)
                                           .chain.order());
            } catch (const BudgetExceeded&) {
                run.order = "budget-exceeded";
            }
        } else if (m == "brute") {
            if (graph.vertex_count() > kBruteForceCap)
                run.order = "skipped";
            else
                run.order = to_decimal(brute_force_aut(graph).chain.order());
        }
        run.elapsed_ms = ms_since(t0);
        entry.methods.emplace_back(m, std::move(run));
    }

    entry.agree = true;
    const std::string* first = nullptr;
    for (const auto& [name, run] : entry.methods) {
        if (!run.ran()) continue;
        if (!first)
            first = &run.order;
        else if (run.order != *first)
            entry.agree = false;
    }
    return entry;
}

}  // namespace

VerificationReport run_verification(std::uint64_t from, std::uint64_t to,
                                    const std::vector<std::string>& methods,
                                    const VerifyOptions& opts) {
    if (from < 2 || from > to)
        throw std::invalid_argument("verify: need 2 <= from <= to");
    if (methods.empty())
        throw std::invalid_argument("verify: no methods requested");
    for (const auto& m : methods)
        if (std::find(kVerifyMethods.begin(), kVerifyMethods.end(), m) ==
            kVerifyMethods.end())
            throw std::invalid_argument("verify: unknown method " + m);

    const std::size_t count = to - from + 1;
    VerificationReport report;
    report.entries.resize(count);

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i)
            report.entries[i] = verify_one(from + i, methods, opts);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= count) return;
                    report.entries[i] = verify_one(from + i, methods, opts);
                }
            });
        for (auto& th : pool) th.join();
    }

    report.total = count;
    for (const auto& e : report.entries)
        e.agree ? ++report.passed : ++report.failed;
    return report;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json orders, elapsed;
        for (const auto& [name, run] : e.methods) {
            orders[name] = run.order;
            elapsed[name] = run.elapsed_ms;
        }
        entries.push_back({{"n", e.n},
                           {"branch", e.branch},
                           {"method_orders", std::move(orders)},
                           {"elapsed_ms", std::move(elapsed)},
                           {"agree", e.agree}});
    }
    return {{"entries", std::move(entries)},
            {"summary",
             {{"total", r.total}, {"passed", r.passed}, {"failed", r.failed}}}};
}

std::string report_to_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "n,branch,method,order,elapsed_ms,agree\n";
    for (const auto& e : r.entries)
        for (const auto& [name, run] : e.methods)
            out << e.n << ',' << e.branch << ',' << name << ',' << run.order
                << ',' << run.elapsed_ms << ',' << (e.agree ? "true" : "false")
                << '\n';
    return out.str();
}

}  // namespace pgaut
