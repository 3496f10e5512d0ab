// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gfib/golden.hpp"
#include "gfib/identities.hpp"
#include "gfib/modular.hpp"
#include "gfib/report.hpp"
#include "gfib/verifier.hpp"
#include "matrix_oracle.hpp"

using namespace gfib;

namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kMultDivSweepSeconds = 60.0;
constexpr double kEquivSweepSeconds = 120.0;
constexpr double kBatchSeconds = 5.0;
constexpr int kSweepWorkers = 4;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

SweepConfig base_grid() {
    SweepConfig config;
    config.p_range = {-8, 8};
    config.q_range = {-8, 8};
    config.s_source = SSource::divisors_of_r();
    config.k_max = 3;
    return config;
}

SweepConfig crit2_config(int workers) {
    auto config = base_grid();
    config.n_max = 40;
    config.t_max = 40;
    config.mode = EvalMode::Exact;
    config.worker_count = workers;
    return config;
}

SweepConfig crit3_config(int workers) {
    auto config = base_grid();
    config.n_max = 2000;
    config.t_max = 2000;
    config.mode = EvalMode::Modular;
    config.worker_count = workers;
    return config;
}

struct DeepPoint {
    ClaimId claim;
    std::int64_t p, q, s;
};

const DeepPoint kDeepPoints[] = {
    {ClaimId::Cor_Fibonacci, 1, 1, 5},
    {ClaimId::Cor_Pell, 2, 1, 2},
    {ClaimId::Cor_Jacobsthal, 1, 2, 3},
};

SweepConfig crit4_config(const DeepPoint& point, int workers) {
    SweepConfig config;
    config.p_range = {point.p, point.p};
    config.q_range = {point.q, point.q};
    config.s_source = SSource::explicit_list({point.s});
    config.k_max = 5;
    config.n_max = 5000;
    config.t_max = 5000;
    config.mode = EvalMode::Modular;
    config.worker_count = workers;
    return config;
}

struct Rediscovery {
    std::string example;
    ClaimId claim;
    std::string relax;
    std::int64_t p, q, s;
    std::uint64_t k, n;
};

const std::vector<Rediscovery>& rediscoveries() {
    static const std::vector<Rediscovery> list = {
        {"2.2", ClaimId::Thm1_1_Equiv, "gcd-pq", 3, 9, 3, 1, 2},
        {"2.2", ClaimId::Cor_Square, "gcd-pq", 3, 9, 3, 1, 2},
        {"2.3", ClaimId::Thm1_1_Equiv, "p-odd", 4, 1, 20, 1, 10},
        {"2.3", ClaimId::Thm1_1_Equiv, "s-div-r4", 4, 1, 20, 1, 10},
        {"2.3", ClaimId::Thm1_1_Equiv, "s-prime", 4, 1, 20, 1, 10},
        {"2.3", ClaimId::Thm1_1_Equiv, "s-ge-3", 4, 1, 2, 2, 2},
        {"2.3", ClaimId::Cor_Square, "p-odd", 4, 1, 2, 2, 2},
        {"2.4", ClaimId::Thm1_1_Equiv, "gcd-halfp-q", 4, 4, 4, 1, 2},
        {"2.4", ClaimId::Cor_Square, "gcd-halfp-q", 4, 4, 2, 1, 3},
        {"2.5", ClaimId::Thm1_1_Equiv, "mod3-clause", 5, 2, 3, 2, 3},
        {"2.5", ClaimId::Cor_Square, "s2-div-r", 5, 2, 3, 2, 3},
        {"2.6", ClaimId::Thm1_1_Equiv, "mod3-clause", 2, 5, 3, 2, 3},
        {"2.6", ClaimId::Cor_Square, "s2-div-r4", 2, 5, 3, 2, 3},
        {"2.6", ClaimId::Cor_P1P2, "mod3-clause", 2, 5, 3, 2, 3},
        {"2.7", ClaimId::Cor_PrimeR, "r-prime", 2, 2, 12, 1, 6},
        {"2.7", ClaimId::Cor_P1P2, "s-div-q1", 2, 2, 2, 1, 3},
        {"2.8", ClaimId::Cor_PrimeRover4, "r4-prime", 4, 2, 6, 1, 3},
        {"2.9", ClaimId::Cor_P1P2, "mod3-clause", 1, 8, 3, 2, 3},
        {"2.10", ClaimId::Cor_PrimeRover4, "p-nonzero", 0, 2, 2, 1, 3},
        {"2.11", ClaimId::Cor_PrimeR, "q-positive", 5, -5, 5, 1, 2},
        {"2.12", ClaimId::Cor_PrimeRover4, "q-positive", 4, -2, 2, 1, 3},
    };
    return list;
}

SweepConfig crit6_bounds(int workers) {
    SweepConfig bounds;
    bounds.p_range = {-10, 10};
    bounds.q_range = {-10, 10};
    bounds.s_source = SSource::up_to(20);
    bounds.k_max = 3;
    bounds.n_max = 12;
    bounds.t_max = 12;
    bounds.worker_count = workers;
    return bounds;
}

IdentityReport crit5_identity(std::int64_t p, std::int64_t q) {
    static const std::int64_t s_list[] = {2, 3, 5, 7};
    return identity_suite(SequenceParams(p, q), 30, s_list);
}

Outcome criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const auto outcomes = reproduce_examples();
    const double elapsed = seconds_since(start);
    std::size_t passed = 0;
    std::string failed;
    for (const auto& o : outcomes) {
        if (o.pass()) {
            ++passed;
        } else {
            failed += " " + o.id;
        }
    }
    const bool ok = outcomes.size() == 12 && passed == 12 && elapsed < kGoldenSeconds;
    return {ok, std::to_string(passed) + "/" + std::to_string(outcomes.size()) + " examples reproduced" +
                    (failed.empty() ? "" : " (failed:" + failed + ")") + ", " + fmt_seconds(elapsed) + " < 1 s"};
}

Outcome criterion2() {
    const auto start = std::chrono::steady_clock::now();
    const auto report = verify_claim(ClaimId::Thm1_1_MultDiv, crit2_config(1));
    const double elapsed = seconds_since(start);
    const bool ok = report.violations.empty() && report.verdict == Verdict::AllPass && elapsed < kMultDivSweepSeconds;
    return {ok, std::to_string(report.violations.size()) + " violations over " + std::to_string(report.points_checked) +
                    " points, 1 worker, " + fmt_seconds(elapsed) + " < 60 s"};
}

Outcome criterion3() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t violations = 0;
    std::uint64_t points = 0;
    bool all_pass = true;
    for (ClaimId id : {ClaimId::Thm1_1_Equiv, ClaimId::Thm1_2_BaseEquiv}) {
        const auto report = verify_claim(id, crit3_config(kSweepWorkers));
        violations += report.violations.size();
        points += report.points_checked;
        all_pass = all_pass && report.verdict == Verdict::AllPass;
    }
    const double elapsed = seconds_since(start);
    return {all_pass && violations == 0 && elapsed < kEquivSweepSeconds,
            std::to_string(violations) + " violations over " + std::to_string(points) + " points, " +
                std::to_string(kSweepWorkers) + " workers, " + fmt_seconds(elapsed) + " < 120 s"};
}

Outcome criterion4() {
    std::size_t violations = 0;
    std::uint64_t points = 0;
    bool all_pass = true;
    for (const auto& point : kDeepPoints) {
        const auto report = verify_claim(point.claim, crit4_config(point, 1));
        violations += report.violations.size();
        points += report.points_checked;
        all_pass = all_pass && report.verdict == Verdict::AllPass;
    }
    return {all_pass && violations == 0,
            std::to_string(violations) + " violations over " + std::to_string(points) +
                " points at (1,1,5), (2,1,2), (1,2,3), k <= 5, n <= 5000"};
}

Outcome criterion5() {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first;
    for (std::int64_t p = -8; p <= 8; ++p) {
        for (std::int64_t q = -8; q <= 8; ++q) {
            for (const auto& r : crit5_identity(p, q).results) {
                checks += r.checked;
                failures += r.failures;
                if (r.failures && first.empty()) {
                    first = " first: " + r.name + " at (" + std::to_string(p) + "," + std::to_string(q) + ") " +
                            r.first_failure;
                }
            }
        }
    }
    return {failures == 0, std::to_string(failures) + " failures in " + std::to_string(checks) + " exact checks" + first};
}

Outcome criterion6() {
    std::size_t found = 0;
    std::string missing;
    for (const auto& item : rediscoveries()) {
        const auto set = counterexample_set(item.claim, item.relax, crit6_bounds(1));
        const bool hit = std::any_of(set.begin(), set.end(), [&](const Counterexample& c) {
            return c.p == item.p && c.q == item.q && c.s == item.s && c.k == item.k && c.n == item.n;
        });
        if (hit) {
            ++found;
        } else {
            missing += " " + item.example + ":" + std::string(claim_info(item.claim).alias) + "/" + item.relax;
        }
    }
    return {found == rediscoveries().size(),
            std::to_string(found) + "/" + std::to_string(rediscoveries().size()) +
                " relaxed searches contain the published witness" + (missing.empty() ? "" : " (missing:" + missing + ")")};
}

Outcome criterion7() {
    // Frozen from tests/oracle/derive_values.py.
    struct Frozen {
        std::int64_t p, q;
        std::uint64_t m, expected;
    };
    const Frozen frozen[] = {{22, 5, 590893859, 115101669},
                             {17, 12, 129303305, 125662139},
                             {27, -19, 613744046, 516666849},
                             {-21, -28, 795428080, 186447515},
                             {-7, -34, 784280299, 78649747}};
    constexpr std::uint64_t kN = 1'000'000'000'000'000'000ULL;
    std::size_t agree = 0;
    std::size_t total = 0;
    for (const auto& f : frozen) {
        ++total;
        agree += g_mod(SequenceParams(f.p, f.q), kN, f.m) == f.expected ? 1 : 0;
    }
    std::mt19937_64 rng(1018);
    for (int i = 0; i < 100; ++i) {
        const auto p = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
        const auto q = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
        const std::uint64_t m = 1 + rng() % 1'000'000'000ULL;
        ++total;
        agree += g_mod(SequenceParams(p, q), kN, m) == oracle::matrix_g_mod(p, q, kN, m) ? 1 : 0;
    }

    std::vector<ModQuery> queries(100'000);
    for (auto& query : queries) {
        query.p = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
        query.q = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
        query.n = rng() % (kN + 1);
        query.m = 1 + rng() % 1'000'000'000ULL;
    }
    std::vector<std::uint64_t> results(queries.size());
    const auto start = std::chrono::steady_clock::now();
    g_mod_batch_serial(queries, results);
    const double elapsed = seconds_since(start);
    std::size_t spot_ok = 0;
    for (std::size_t i = 0; i < queries.size(); i += 1000) {
        const auto& query = queries[i];
        spot_ok += results[i] == oracle::matrix_g_mod(query.p, query.q, query.n, query.m) ? 1 : 0;
    }
    const bool ok = agree == total && spot_ok == 100 && elapsed < kBatchSeconds;
    return {ok, std::to_string(agree) + "/" + std::to_string(total) + " agree with the matrix oracle at n = 10^18; " +
                    "10^5 queries in " + fmt_seconds(elapsed) + " < 5 s"};
}

Outcome criterion8() {
    std::size_t same = 0;
    std::size_t total = 0;
    std::string differing;
    auto grid = crit3_config(kSweepWorkers);
    auto small = grid;
    small.p_range = {-4, 4};
    small.q_range = {-4, 4};
    small.k_max = 2;
    small.n_max = 2000;
    const std::pair<ClaimId, SweepConfig> runs[] = {
        {ClaimId::Thm1_1_Equiv, grid},
        {ClaimId::Thm1_2_BaseEquiv, grid},
        {ClaimId::Cor_Square, grid},
        {ClaimId::Thm1_1_MultDiv, small},
    };
    for (const auto& [id, config] : runs) {
        auto exact = config;
        exact.mode = EvalMode::Exact;
        auto modular = config;
        modular.mode = EvalMode::Modular;
        const auto a = to_json(verify_claim(id, exact));
        const auto b = to_json(verify_claim(id, modular));
        ++total;
        const bool equal = a["verdict"] == b["verdict"] && a["violations"] == b["violations"] &&
                           a["points_checked"] == b["points_checked"];
        if (equal) {
            ++same;
        } else {
            differing += " " + std::string(claim_info(id).alias);
        }
    }
    return {same == total, std::to_string(same) + "/" + std::to_string(total) + " claims give identical verdicts" +
                               (differing.empty() ? "" : " (differ:" + differing + ")")};
}

Outcome criterion9() {
    auto documents = [](int workers) {
        std::vector<std::string> out;
        out.push_back(to_json(verify_claim(ClaimId::Thm1_1_MultDiv, crit2_config(workers))).dump());
        for (ClaimId id : {ClaimId::Thm1_1_Equiv, ClaimId::Thm1_2_BaseEquiv}) {
            out.push_back(to_json(verify_claim(id, crit3_config(workers))).dump());
        }
        for (const auto& point : kDeepPoints) {
            out.push_back(to_json(verify_claim(point.claim, crit4_config(point, workers))).dump());
        }
        for (std::int64_t p = -8; p <= 8; ++p) {
            for (std::int64_t q = -8; q <= 8; ++q) out.push_back(to_json(crit5_identity(p, q)).dump());
        }
        for (const auto& item : rediscoveries()) {
            const auto bounds = crit6_bounds(workers);
            const auto set = counterexample_set(item.claim, item.relax, bounds);
            std::optional<Counterexample> first;
            if (!set.empty()) first = set.front();
            out.push_back(search_json(item.claim, item.relax, bounds, first, set).dump());
        }
        return out;
    };
    const auto reference = documents(1);
    std::string differing;
    for (int workers : {1, 2, 8}) {
        if (documents(workers) != reference) differing += " " + std::to_string(workers);
    }
    return {differing.empty(), std::to_string(reference.size()) +
                                   " JSON reports byte-identical across repeated runs with 1, 2, 8 workers" +
                                   (differing.empty() ? "" : " (differ at workers:" + differing + ")")};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"golden examples", criterion1},
        {"Thm1_1_MultDiv sweep", criterion2},
        {"Thm1_1_Equiv and Thm1_2_BaseEquiv sweeps", criterion3},
        {"Fibonacci/Pell/Jacobsthal deep checks", criterion4},
        {"identity suite", criterion5},
        {"counterexample rediscovery", criterion6},
        {"g_mod kernel", criterion7},
        {"exact/modular cross-validation", criterion8},
        {"determinism", criterion9},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("[%s] %d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index, name, outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
