#include "pgaut/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pgaut/injection.hpp"
#include "pgaut/power_graph.hpp"

namespace pgaut {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::vacuous: return "vacuous";
        case CheckStatus::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "?";
}

nlohmann::json CheckReport::to_json() const {
    return {{"n", n}, {"check", check}, {"status", to_string(status)},
            {"details", details}};
}

namespace {

std::uint64_t upow(std::uint64_t p, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= p;
    return r;
}

}  // namespace

CheckReport check_lemma_2_3(const Factorization& f, const Lemma23Options& opts) {
    CheckReport rep;
    rep.n = f.n;
    rep.check = "lemma-2.3";
    if (!f.is_squarefree() || f.distinct_primes() < 2) {
        rep.status = CheckStatus::hypothesis_not_met;
        rep.details["reason"] = "n must be squarefree with >= 2 prime factors";
        return rep;
    }

    const int k = static_cast<int>(f.distinct_primes());
    std::vector<std::uint64_t> asc(k);
    for (int i = 0; i < k; ++i) asc[i] = f.factors[i].prime;
    std::vector<std::uint64_t> desc(asc.rbegin(), asc.rend());

    // Degrees of every divisor's class, via the closed form
    // deg(x_d) = (d-1) + sum phi(e) over divisor multiples e of d.
    // Divisors of squarefree n are subsets of the prime set.
    const std::uint32_t full = (1u << k) - 1;
    std::vector<std::uint64_t> dval(full + 1, 1), dphi(full + 1, 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int b = std::countr_zero(mask);
        dval[mask] = dval[mask & (mask - 1)] * asc[b];
        dphi[mask] = dphi[mask & (mask - 1)] * (asc[b] - 1);
    }
    std::vector<std::uint64_t> deg(full + 1, 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        std::uint64_t d = dval[mask] - 1;
        for (std::uint32_t sup = mask;; sup = (sup + 1) | mask) {
            if (sup != mask) d += dphi[sup];
            if (sup == full) break;
        }
        deg[mask] = d;
    }

    std::uint64_t checked = 0, violations = 0;
    nlohmann::json comparisons = nlohmann::json::array();
    for (std::uint32_t dmask = 1; dmask < full; ++dmask) {
        if (std::popcount(dmask) < 2) continue;
        const int max_bit = 31 - std::countl_zero(dmask);
        for (int qi = max_bit; qi < k; ++qi) {
            const bool ok = deg[1u << qi] > deg[dmask];
            ++checked;
            if (!ok) ++violations;
            if (opts.collect_comparisons || !ok)
                comparisons.push_back({{"prime", asc[qi]},
                                       {"divisor", dval[dmask]},
                                       {"deg_prime", deg[1u << qi]},
                                       {"deg_divisor", deg[dmask]},
                                       {"ok", ok}});
        }
    }

    rep.details["primes_ascending"] = asc;
    rep.details["primes_descending"] = desc;
    rep.details["comparisons_checked"] = checked;
    rep.details["violations"] = violations;
    if (opts.collect_comparisons || violations > 0)
        rep.details["comparisons"] = std::move(comparisons);

    bool spot_ran = false, spot_ok = true;
    if (opts.injection_spot_check && k >= 3) {
        // The proof instantiates the injection on A = {p_1-1,...,p_k-1},
        // B = {p_2-1,...,p_{k-1}-1} with primes labeled descending.
        InjectionInstance inst;
        for (int i = 0; i + 1 < k; ++i) inst.ms.push_back(desc[i] - 1);
        inst.m = desc[k - 1] - 1;
        std::string why;
        spot_ran = true;
        spot_ok = verify_injection_guarantees(inst, &why);
        rep.details["injection_spot_check"] = spot_ok ? "pass" : why;
    }

    if (violations > 0 || !spot_ok)
        rep.status = CheckStatus::fail;
    else if (checked == 0 && !spot_ran)
        rep.status = CheckStatus::vacuous;
    else
        rep.status = CheckStatus::pass;
    return rep;
}

CheckReport check_lemma_2_3(std::uint64_t n, const Lemma23Options& opts) {
    if (n == 0) throw std::invalid_argument("check_lemma_2_3: n must be positive");
    return check_lemma_2_3(factorize(n), opts);
}

namespace {

struct NeighborhoodTable {
    const PowerGraph& pg;
    std::vector<Bitset> closed;  // by vertex, on demand would be overkill here

    explicit NeighborhoodTable(const PowerGraph& g) : pg(g) {}

    int rep(std::uint64_t d) const {
        return d == 1 ? 0 : static_cast<int>(pg.n / d);
    }

    Bitset closed_nbhd(std::uint64_t d) const {
        int v = rep(d);
        Bitset b = pg.graph.row(v);
        b.set(v);
        return b;
    }

    std::uint64_t diff_count(std::uint64_t d_left, std::uint64_t d_right) const {
        return Bitset::andnot_count(closed_nbhd(d_left), closed_nbhd(d_right));
    }
};

}  // namespace

CheckReport check_lemma_2_4(const Factorization& f, const Lemma24Options& opts) {
    CheckReport rep;
    rep.n = f.n;
    rep.check = "lemma-2.4";
    if (f.distinct_primes() < 2) {
        rep.status = CheckStatus::hypothesis_not_met;
        rep.details["reason"] = "n must have >= 2 distinct prime factors";
        return rep;
    }
    if (f.n > opts.max_n)
        throw std::invalid_argument("check_lemma_2_4: n exceeds cap");

    PowerGraphOptions gopts;
    gopts.max_n = opts.max_n;
    gopts.with_neighbor_lists = false;
    const PowerGraph pg = build_power_graph(f.n, gopts);
    const NeighborhoodTable nb(pg);
    const std::uint64_t n = f.n;
    const int k = static_cast<int>(f.distinct_primes());

    std::uint64_t checked = 0, violations = 0;
    nlohmann::json configs = nlohmann::json::array();
    auto record = [&](nlohmann::json cfg, bool ok) {
        ++checked;
        if (!ok) ++violations;
        cfg["ok"] = ok;
        if (opts.collect_configs || !ok) configs.push_back(std::move(cfg));
    };

    // Pivot identity: d has full exponents except one deficient prime; for
    // any other prime p in d, |N[x_d] \ N[x_p]| equals the p-free part of d
    // minus one.
    for (int j = 0; j < k; ++j) {
        const auto [pj, mj] = f.factors[j];
        for (std::uint32_t r = 1; r < mj; ++r) {
            const std::uint64_t d = n / upow(pj, mj - r);
            for (int t = 0; t < k; ++t) {
                if (t == j) continue;
                const auto [pt, mt] = f.factors[t];
                const std::uint64_t expected = d / upow(pt, mt) - 1;
                const std::uint64_t observed = nb.diff_count(d, pt);
                record({{"family", "pivot-count"},
                        {"pivot", pt},
                        {"deficient", pj},
                        {"r", r},
                        {"divisor", d},
                        {"observed", observed},
                        {"expected", expected}},
                       observed == expected);
            }
        }
    }

    // Component ordering used by the remaining families: prime powers
    // descending.
    std::vector<int> byp(k);
    for (int i = 0; i < k; ++i) byp[i] = i;
    std::sort(byp.begin(), byp.end(), [&](int a, int b) {
        return upow(f.factors[a].prime, f.factors[a].exponent) >
               upow(f.factors[b].prime, f.factors[b].exponent);
    });

    if (k >= 3) {
        const auto [p1, m1] = f.factors[byp[0]];
        const auto [p2, m2] = f.factors[byp[1]];
        for (std::uint32_t r = 1; r < m2; ++r) {
            const std::uint64_t d = n / upow(p2, m2 - r);
            std::uint64_t middle = 1, tail = 1;
            for (int i = 2; i < k; ++i) {
                const auto [pp, mm] = f.factors[byp[i]];
                tail *= upow(pp, mm);
                if (i < k - 1) middle *= upow(pp, mm);
            }
            const std::uint64_t first_count = upow(p2, r) * tail - 1;
            const std::uint64_t lower_bound =
                (upow(p1, m1) - 1) * (upow(p2, m2) - upow(p2, r)) * middle;
            const std::uint64_t observed = nb.diff_count(p1, d);
            const bool bound_ok = observed >= lower_bound;
            const bool strict_ok = lower_bound > first_count + 1;
            const bool deg_ok =
                degree_closed_form(n, p1) > degree_closed_form(n, d);
            record({{"family", "three-prime-bound"},
                    {"r", r},
                    {"divisor", d},
                    {"observed", observed},
                    {"lower_bound", lower_bound},
                    {"opposing_count", first_count},
                    {"strict_ok", strict_ok},
                    {"deg_ok", deg_ok}},
                   bound_ok && strict_ok && deg_ok);
        }
    }

    if (k == 2) {
        const auto [p, a] = f.factors[byp[0]];
        const auto [q, b] = f.factors[byp[1]];
        if (a > 1) {
            for (std::uint32_t m = 1; m <= a; ++m) {
                const std::uint64_t d = upow(p, m) * upow(q, b);
                const std::uint64_t a_cf = upow(q, b) - 1;
                const std::uint64_t b_cf =
                    (upow(p, a) - upow(p, m)) * upow(q, b - 1);
                const std::uint64_t a_obs = nb.diff_count(d, p);
                const std::uint64_t b_obs = nb.diff_count(p, d);
                bool ok = a_obs == a_cf && b_obs == b_cf;
                if (b > 1) ok = ok && a_cf != b_cf;
                record({{"family", "two-prime-full-q"},
                        {"m", m},
                        {"divisor", d},
                        {"observed", {a_obs, b_obs}},
                        {"expected", {a_cf, b_cf}}},
                       ok);
            }
            if (b == 1) {
                for (std::uint32_t s = 2; s <= a; ++s) {
                    const std::uint64_t a_cf = upow(p, a) - 1;
                    const std::uint64_t b_cf = (q - 1) * upow(p, s - 1);
                    const std::uint64_t a_obs = nb.diff_count(upow(p, s), q);
                    const std::uint64_t b_obs = nb.diff_count(q, upow(p, s));
                    const bool ok =
                        a_obs == a_cf && b_obs == b_cf && a_cf != b_cf;
                    record({{"family", "two-prime-b1"},
                            {"s", s},
                            {"observed", {a_obs, b_obs}},
                            {"expected", {a_cf, b_cf}}},
                           ok);
                }
            }
        }
    }

    rep.details["configs_checked"] = checked;
    rep.details["violations"] = violations;
    if (opts.collect_configs || violations > 0)
        rep.details["configs"] = std::move(configs);
    if (violations > 0)
        rep.status = CheckStatus::fail;
    else
        rep.status = checked == 0 ? CheckStatus::vacuous : CheckStatus::pass;
    return rep;
}

CheckReport check_lemma_2_4(std::uint64_t n, const Lemma24Options& opts) {
    if (n == 0) throw std::invalid_argument("check_lemma_2_4: n must be positive");
    return check_lemma_2_4(factorize(n), opts);
}

CheckReport check_class_preservation(std::uint64_t n, const Lemma25Options& opts) {
    if (n == 0)
        throw std::invalid_argument("check_class_preservation: n must be positive");
    CheckReport rep;
    rep.n = n;
    rep.check = "lemma-2.5";
    const Factorization f = factorize(n);
    if (f.is_prime_power()) {
        rep.status = CheckStatus::hypothesis_not_met;
        rep.details["reason"] = "n must not be a prime power";
        return rep;
    }
    if (n > opts.max_n)
        throw std::invalid_argument("check_class_preservation: n exceeds cap of " +
                                    std::to_string(opts.max_n));

    const PowerGraph pg = build_power_graph(n);
    const PermutationGroup aut = automorphism_group(pg.graph, opts.search);
    const auto classes = generator_classes(pg);

    const int N = static_cast<int>(n);
    std::vector<std::pair<std::uint64_t, Bitset>> masks;
    Bitset universal(N);
    for (const auto& [d, members] : classes) {
        Bitset mask(N);
        for (int v : members) mask.set(v);
        if (d == 1 || d == n) {
            universal |= mask;
            continue;
        }
        masks.emplace_back(d, std::move(mask));
    }
    masks.emplace_back(0, universal);  // d = 0 marks X_1 + X_n

    std::uint64_t violations = 0;
    nlohmann::json bad = nlohmann::json::array();
    for (std::size_t gi = 0; gi < aut.generators.size(); ++gi) {
        const Permutation& sigma = aut.generators[gi];
        for (const auto& [d, mask] : masks) {
            bool fixed = true;
            mask.for_each_set([&](std::size_t v) {
                if (!mask.test(sigma(int(v)))) fixed = false;
            });
            if (!fixed) {
                ++violations;
                bad.push_back({{"generator", sigma.cycle_string()},
                               {"divisor", d == 0 ? "X_1+X_n" : std::to_string(d)}});
            }
        }
    }

    rep.details["order"] = to_decimal(aut.chain.order());
    rep.details["generators"] = aut.generators.size();
    rep.details["classes_checked"] = masks.size();
    rep.details["violations"] = violations;
    if (violations > 0) {
        rep.details["failures"] = std::move(bad);
        rep.status = CheckStatus::fail;
    } else {
        rep.status = CheckStatus::pass;
    }
    return rep;
}

}  // namespace pgaut
