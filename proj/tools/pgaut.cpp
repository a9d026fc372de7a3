// pgaut: build power graphs of cyclic groups, compute graph automorphism
// groups by independent methods, and cross-check the closed-form order.
//
// Exit codes: 0 = success / all checks agree, 1 = mathematical disagreement
// or lemma violation, 2 = usage error, 3 = resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgaut/formula.hpp"
#include "pgaut/graph_io.hpp"
#include "pgaut/injection.hpp"
#include "pgaut/lemmas.hpp"
#include "pgaut/power_graph.hpp"
#include "pgaut/search.hpp"
#include "pgaut/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct BuildArgs {
    std::uint64_t n = 0;
    std::string format = "edgelist";
    std::string out;
    std::uint64_t max_n = 100000;
};

int cmd_build(const BuildArgs& a) {
    pgaut::PowerGraphOptions opts;
    opts.max_n = a.max_n;
    auto pg = pgaut::build_power_graph(a.n, opts);
    write_output(pgaut::export_graph(pg, pgaut::parse_graph_format(a.format)),
                 a.out);
    return kExitOk;
}

struct AutArgs {
    std::uint64_t n = 0;
    std::string graph_file;
    std::string graph_format = "edgelist";
    std::string method;
    std::uint64_t budget = pgaut::SearchOptions{}.node_budget;
    std::uint64_t max_n = 100000;
};

int cmd_aut(const AutArgs& a) {
    nlohmann::json out;
    out["method"] = a.method;

    if (a.method == "formula") {
        if (!a.graph_file.empty())
            throw std::invalid_argument(
                "formula needs the group modulus; it cannot run on --graph");
        auto dec = pgaut::aut_order_formula(a.n);
        out["n"] = dec.n;
        out["order"] = pgaut::to_decimal(dec.order);
        out["decomposition"] = {
            {"branch", dec.prime_power ? "prime-power" : "general"},
            {"factors", dec.factors},
            {"top", dec.top_factor}};
        std::cout << out.dump() << '\n';
        return kExitOk;
    }

    pgaut::Graph graph;
    if (!a.graph_file.empty()) {
        graph = pgaut::import_graph(read_file(a.graph_file),
                                    pgaut::parse_graph_format(a.graph_format));
    } else {
        pgaut::PowerGraphOptions opts;
        opts.max_n = a.max_n;
        graph = pgaut::build_power_graph(a.n, opts).graph;
    }
    out["n"] = graph.vertex_count();

    if (a.method == "twin") {
        out["order"] = pgaut::to_decimal(pgaut::twin_lower_bound_order(graph));
    } else if (a.method == "ir") {
        pgaut::SearchOptions sopts;
        sopts.node_budget = a.budget;
        out["order"] = pgaut::to_decimal(
            pgaut::automorphism_group(graph, sopts).chain.order());
    } else if (a.method == "brute") {
        out["order"] =
            pgaut::to_decimal(pgaut::brute_force_aut(graph).chain.order());
    } else {
        throw std::invalid_argument("unknown method: " + a.method);
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
}

struct VerifyArgs {
    std::uint64_t from = 0, to = 0;
    std::string methods = "formula,twin,ir";
    std::string report = "json";
    std::string out;
    int jobs = 1;
    std::uint64_t budget = pgaut::SearchOptions{}.node_budget;
    std::string corrupt;  // "n,u,v" testing hook
};

int cmd_verify(const VerifyArgs& a) {
    pgaut::VerifyOptions opts;
    opts.jobs = a.jobs;
    opts.search.node_budget = a.budget;
    if (!a.corrupt.empty()) {
        auto parts = split_csv(a.corrupt);
        if (parts.size() != 3)
            throw std::invalid_argument("--corrupt expects n,u,v");
        pgaut::CorruptSpec c;
        c.n = std::stoull(parts[0]);
        c.u = std::stoi(parts[1]);
        c.v = std::stoi(parts[2]);
        opts.corrupt = c;
    }
    if (a.report != "json" && a.report != "csv")
        throw std::invalid_argument("--report must be json or csv");

    auto report =
        pgaut::run_verification(a.from, a.to, split_csv(a.methods), opts);
    if (a.report == "json")
        write_output(pgaut::report_to_json(report).dump(2) + "\n", a.out);
    else
        write_output(pgaut::report_to_csv(report), a.out);
    return report.failed == 0 ? kExitOk : kExitDisagreement;
}

struct LemmaArgs {
    std::string which;
    std::uint64_t n = 0;
    std::string ms;
    std::uint64_t m = 0;
    std::uint64_t budget = pgaut::SearchOptions{}.node_budget;
};

int cmd_lemmas(const LemmaArgs& a) {
    if (a.which == "2.2") {
        if (a.ms.empty() || a.m == 0)
            throw std::invalid_argument("lemma 2.2 needs --ms and --m");
        pgaut::InjectionInstance inst;
        for (const auto& tok : split_csv(a.ms))
            inst.ms.push_back(std::stoull(tok));
        inst.m = a.m;
        auto map = pgaut::full_map(inst);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& assoc : map) {
            auto to = assoc.to_without_m;
            to.push_back(inst.m);
            std::sort(to.begin(), to.end());
            arr.push_back({{"from", assoc.from},
                           {"to", to},
                           {"lhs", pgaut::to_decimal(assoc.lhs)},
                           {"rhs", pgaut::to_decimal(assoc.rhs)}});
        }
        std::cout << arr.dump() << '\n';
        std::string why;
        if (!pgaut::verify_injection_guarantees(inst, &why)) {
            std::cerr << "violation: " << why << '\n';
            return kExitDisagreement;
        }
        return kExitOk;
    }

    if (a.n == 0) throw std::invalid_argument("lemma " + a.which + " needs --n");
    pgaut::CheckReport rep;
    if (a.which == "2.3") {
        rep = pgaut::check_lemma_2_3(a.n);
    } else if (a.which == "2.4") {
        rep = pgaut::check_lemma_2_4(a.n);
    } else if (a.which == "2.5") {
        pgaut::Lemma25Options opts;
        opts.search.node_budget = a.budget;
        rep = pgaut::check_class_preservation(a.n, opts);
    } else {
        throw std::invalid_argument("--which must be one of 2.2|2.3|2.4|2.5");
    }
    std::cout << rep.to_json().dump() << '\n';
    return rep.ok() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power graphs of cyclic groups and their automorphism groups"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "write P(Z_n) in a graph format");
    build->add_option("n", build_args.n, "group modulus")->required();
    build->add_option("--format", build_args.format,
                      "edgelist|dot|dimacs|json (default edgelist)");
    build->add_option("--out", build_args.out, "output file (default stdout)");
    build->add_option("--max-n", build_args.max_n, "vertex-count cap");

    AutArgs aut_args;
    auto* aut = app.add_subcommand("aut", "automorphism group order of P(Z_n) "
                                          "or of an external graph");
    aut->add_option("n", aut_args.n, "group modulus");
    aut->add_option("--graph", aut_args.graph_file, "read graph from file");
    aut->add_option("--graph-format", aut_args.graph_format,
                    "edgelist|dimacs|json (default edgelist)");
    aut->add_option("--method", aut_args.method, "formula|twin|ir|brute")
        ->required();
    aut->add_option("--budget", aut_args.budget, "search node budget");
    aut->add_option("--max-n", aut_args.max_n, "vertex-count cap");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "cross-check methods for every n in a range");
    verify->add_option("--from", verify_args.from, "range start (>= 2)")
        ->required();
    verify->add_option("--to", verify_args.to, "range end")->required();
    verify->add_option("--methods", verify_args.methods,
                       "comma list of formula,twin,ir,brute");
    verify->add_option("--report", verify_args.report, "json|csv");
    verify->add_option("--out", verify_args.out, "report file (default stdout)");
    verify->add_option("--jobs", verify_args.jobs, "parallel workers");
    verify->add_option("--budget", verify_args.budget, "search node budget");
    verify
        ->add_option("--corrupt", verify_args.corrupt,
                     "testing hook: flip adjacency bit, format n,u,v")
        ->group("");  // hidden

    LemmaArgs lemma_args;
    auto* lemmas = app.add_subcommand("lemmas", "run one structural check");
    lemmas->add_option("--which", lemma_args.which, "2.2|2.3|2.4|2.5")
        ->required();
    lemmas->add_option("--n", lemma_args.n, "group modulus (2.3/2.4/2.5)");
    lemmas->add_option("--ms", lemma_args.ms,
                       "strictly decreasing values, comma separated (2.2)");
    lemmas->add_option("--m", lemma_args.m, "the adjoined value (2.2)");
    lemmas->add_option("--budget", lemma_args.budget, "search node budget (2.5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) return cmd_build(build_args);
        if (aut->parsed()) return cmd_aut(aut_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (lemmas->parsed()) return cmd_lemmas(lemma_args);
        return kExitUsage;
    } catch (const pgaut::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const pgaut::OracleTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
