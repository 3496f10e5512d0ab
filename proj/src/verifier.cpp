#include "gfib/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "gfib/errors.hpp"
#include "gfib/modular.hpp"
#include "gfib/number_theory.hpp"

namespace gfib {

namespace {

// Keeps r = p^2 + 4q inside int64 for divisor enumeration.
constexpr std::int64_t kMaxCoefficient = 1'000'000'000;

std::int64_t r_as_i64(const SequenceParams& params) {
    if (!params.r().fits_slong_p()) throw InputError("discriminant does not fit 64 bits");
    return params.r().get_si();
}

std::uint64_t claim_k_limit(ClaimId claim, std::uint64_t k_max) {
    const auto& info = claim_info(claim);
    return info.max_k ? std::min(k_max, *info.max_k) : k_max;
}

bool needs_lift(ClaimId claim) {
    const auto conditions = hypothesis_conditions(claim);
    return std::find(conditions.begin(), conditions.end(), Condition::LiftCondition) != conditions.end();
}

std::uint64_t exact_limit_for(const SweepConfig& config) { return std::max(kExactIndexLimit, config.n_max); }

Counterexample make_counterexample(ClaimId claim, std::string_view relaxed, const Cell& cell, std::int64_t s,
                                   std::uint64_t k, std::uint64_t n, Witness witness) {
    return Counterexample{claim, std::string(relaxed), cell.p, cell.q, s, k, n, std::move(witness)};
}

struct CellOutcome {
    std::uint64_t points = 0;
    std::uint64_t triples = 0;
    std::vector<Counterexample> violations;
};

}  // namespace

SSource SSource::explicit_list(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return {Kind::Explicit, std::move(values), 0};
}

std::vector<std::int64_t> SSource::values_for(const SequenceParams& params) const {
    switch (kind) {
        case Kind::Explicit:
            return values;
        case Kind::UpTo: {
            std::vector<std::int64_t> out;
            for (std::int64_t s = 1; s <= max; ++s) out.push_back(s);
            return out;
        }
        case Kind::DivisorsOfR: {
            const std::int64_t r = r_as_i64(params);
            if (r == 0) return {};
            return positive_divisors(r);
        }
        case Kind::DivisorsOfRQuarter: {
            const std::int64_t r = r_as_i64(params);
            if (r == 0 || r % 4 != 0) return {};
            return positive_divisors(r / 4);
        }
    }
    return {};
}

void validate(const SweepConfig& config) {
    auto check_range = [](IntRange range, const char* name) {
        if (range.lo > range.hi) throw InputError(std::string(name) + " range is empty");
        if (std::llabs(range.lo) > kMaxCoefficient || std::llabs(range.hi) > kMaxCoefficient) {
            throw InputError(std::string(name) + " range exceeds |value| <= 10^9");
        }
    };
    check_range(config.p_range, "p");
    check_range(config.q_range, "q");
    if (config.n_max < 1) throw InputError("n_max must be positive");
    if (config.t_max < 1) throw InputError("t_max must be positive");
    if (config.worker_count < 1) throw InputError("worker count must be positive");
    if (config.s_source.kind == SSource::Kind::Explicit) {
        if (config.s_source.values.empty()) throw InputError("explicit s list is empty");
        for (std::int64_t s : config.s_source.values) {
            if (s < 1) throw InputError("s values must be >= 1");
        }
    }
    if (config.s_source.kind == SSource::Kind::UpTo && config.s_source.max < 1) {
        throw InputError("s upper bound must be >= 1");
    }
}

VerificationReport verify_claim(ClaimId claim, const SweepConfig& config) {
    validate(config);
    const auto started = std::chrono::steady_clock::now();
    const auto cells = scan_order_cells(config.p_range, config.q_range);
    const Deadline deadline(config.time_budget_seconds);
    const bool lift = needs_lift(claim);
    const std::uint64_t k_limit = claim_k_limit(claim, config.k_max);
    const ConclusionOptions conclusion{config.alphas};

    auto task = [&](const Cell& cell) {
        const SequenceParams params(cell.p, cell.q);
        TermEvaluator eval(params, config.mode, exact_limit_for(config));
        CellOutcome out;
        for (std::int64_t s : config.s_source.values_for(params)) {
            const ConditionTable table(params, s, lift, config.t_max);
            if (!hypothesis_holds(claim, table)) continue;
            ++out.triples;
            for (std::uint64_t n = 0; n <= config.n_max; ++n) {
                deadline.check();
                for (std::uint64_t k = 0; k <= k_limit; ++k) {
                    ++out.points;
                    Witness witness;
                    if (!evaluate_conclusion(claim, eval, s, k, n, conclusion, &witness)) {
                        out.violations.push_back(make_counterexample(claim, "", cell, s, k, n, std::move(witness)));
                    }
                }
            }
        }
        return out;
    };

    VerificationReport report;
    report.claim = claim;
    report.config = config;
    for (auto& outcome : map_cells(cells, task, config.worker_count)) {
        report.points_checked += outcome.points;
        report.applicable_triples += outcome.triples;
        std::move(outcome.violations.begin(), outcome.violations.end(), std::back_inserter(report.violations));
    }
    if (report.points_checked == 0) {
        report.verdict = Verdict::HypothesisNeverApplicable;
    } else {
        report.verdict = report.violations.empty() ? Verdict::AllPass : Verdict::Violations;
    }
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

namespace {

Condition relaxable_condition(ClaimId claim, std::string_view name) {
    const auto condition = condition_from_name(name);
    const auto allowed = hypothesis_conditions(claim);
    if (!condition || std::find(allowed.begin(), allowed.end(), *condition) == allowed.end()) {
        std::string names;
        for (Condition c : allowed) names += (names.empty() ? "" : ", ") + std::string(condition_name(c));
        throw InputError("'" + std::string(name) + "' is not a hypothesis condition of " +
                         std::string(claim_info(claim).alias) + " (expected one of: " + names + ")");
    }
    return *condition;
}

// Scans one cell; stops after the first counterexample when `first_only`.
std::vector<Counterexample> scan_relaxed_cell(ClaimId claim, Condition relaxed, const SweepConfig& bounds,
                                              const Cell& cell, bool first_only, const Deadline& deadline) {
    const SequenceParams params(cell.p, cell.q);
    TermEvaluator eval(params, bounds.mode, exact_limit_for(bounds));
    const bool lift = needs_lift(claim);
    const std::uint64_t k_limit = claim_k_limit(claim, bounds.k_max);
    const ConclusionOptions conclusion{bounds.alphas};
    std::vector<Counterexample> out;
    for (std::int64_t s : bounds.s_source.values_for(params)) {
        const ConditionTable table(params, s, lift, bounds.t_max);
        if (table.holds(relaxed) || !hypothesis_holds(claim, table, relaxed) || hypothesis_holds(claim, table)) {
            continue;
        }
        for (std::uint64_t n = 0; n <= bounds.n_max; ++n) {
            deadline.check();
            for (std::uint64_t k = 0; k <= k_limit; ++k) {
                Witness witness;
                if (evaluate_conclusion(claim, eval, s, k, n, conclusion, &witness)) continue;
                out.push_back(make_counterexample(claim, condition_name(relaxed), cell, s, k, n, std::move(witness)));
                if (first_only) return out;
            }
        }
    }
    return out;
}

}  // namespace

std::optional<Counterexample> search_counterexample(ClaimId claim, std::string_view relaxed_condition,
                                                    const SweepConfig& bounds) {
    validate(bounds);
    const Condition relaxed = relaxable_condition(claim, relaxed_condition);
    const Deadline deadline(bounds.time_budget_seconds);
    for (const Cell& cell : scan_order_cells(bounds.p_range, bounds.q_range)) {
        auto found = scan_relaxed_cell(claim, relaxed, bounds, cell, true, deadline);
        if (!found.empty()) return std::move(found.front());
    }
    return std::nullopt;
}

std::vector<Counterexample> counterexample_set(ClaimId claim, std::string_view relaxed_condition,
                                               const SweepConfig& bounds) {
    validate(bounds);
    const Condition relaxed = relaxable_condition(claim, relaxed_condition);
    const Deadline deadline(bounds.time_budget_seconds);
    const auto cells = scan_order_cells(bounds.p_range, bounds.q_range);
    auto per_cell = map_cells(
        cells, [&](const Cell& cell) { return scan_relaxed_cell(claim, relaxed, bounds, cell, false, deadline); },
        bounds.worker_count);
    std::vector<Counterexample> out;
    for (auto& part : per_cell) std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

std::optional<std::uint64_t> rank_of_apparition(const SequenceParams& params, std::int64_t s,
                                                std::uint64_t n_bound) {
    if (s < 2) throw DomainError("rank of apparition needs s >= 2");
    using i128 = __int128;
    auto reduce = [s](i128 v) {
        const i128 rem = v % s;
        return static_cast<std::int64_t>(rem < 0 ? rem + s : rem);
    };
    const std::int64_t p = reduce(params.p());
    const std::int64_t q = reduce(params.q());
    std::int64_t u = 0;
    std::int64_t u_next = 1;
    for (std::uint64_t n = 1; n <= n_bound; ++n) {
        const std::int64_t advanced = reduce(static_cast<i128>(p) * u_next + static_cast<i128>(q) * u);
        u = u_next;
        u_next = advanced;
        if (u == 0) return n;
    }
    return std::nullopt;
}

namespace {

constexpr Condition kSurveyConditions[] = {
    Condition::POdd,   Condition::GcdPQ,  Condition::GcdHalfPQ,  Condition::SDivR4,    Condition::SPrime,
    Condition::SGe3,   Condition::S2DivR, Condition::S2DivR4,    Condition::Mod3Clause, Condition::QPositive,
};

}  // namespace

SurveyReport converse_survey(const SweepConfig& bounds) {
    validate(bounds);
    const auto cells = scan_order_cells(bounds.p_range, bounds.q_range);
    const Deadline deadline(bounds.time_budget_seconds);
    const std::uint64_t k_max = std::max<std::uint64_t>(bounds.k_max, 1);

    struct CellSurvey {
        std::uint64_t triples = 0;
        std::vector<SurveyRow> rows;
    };
    auto task = [&](const Cell& cell) {
        const SequenceParams params(cell.p, cell.q);
        CellSurvey out;
        if (sgn(params.r()) == 0) return out;
        TermEvaluator eval(params, EvalMode::Modular);
        for (std::int64_t s : bounds.s_source.values_for(params)) {
            if (s < 2) continue;
            ++out.triples;
            std::optional<std::pair<std::uint64_t, std::uint64_t>> failure;
            for (std::uint64_t k = 1; k <= k_max && !failure; ++k) {
                mpz_class sk;
                mpz_pow_ui(sk.get_mpz_t(), mpz_class(static_cast<long>(s)).get_mpz_t(), k);
                for (std::uint64_t n = 1; n <= bounds.n_max; ++n) {
                    deadline.check();
                    const bool index_side = divides(sk, mpz_class(static_cast<unsigned long>(n)));
                    if (index_side != eval.term_divisible(sk, n)) {
                        failure.emplace(k, n);
                        break;
                    }
                }
            }
            if (!failure) continue;
            const ConditionTable table(params, s, true, bounds.t_max);
            SurveyRow row;
            row.p = cell.p;
            row.q = cell.q;
            row.r = params.r();
            row.s = s;
            row.s_divides_r_quarter = table.holds(Condition::SDivR4);
            row.k = failure->first;
            row.n = failure->second;
            for (Condition c : kSurveyConditions) {
                if (!table.holds(c)) row.failing_conditions.push_back(c);
            }
            for (ClaimId id : kAllClaims) {
                if (hypothesis_holds(id, table)) row.applicable.push_back(id);
            }
            out.rows.push_back(std::move(row));
        }
        return out;
    };

    SurveyReport report;
    report.config = bounds;
    report.note =
        "Exploratory catalog: (p, q, s) with s dividing the discriminant where s^k | n <=> s^k | G_n fails "
        "within the searched bounds. Necessary and sufficient conditions for the equivalence remain open; "
        "no characterization is asserted.";
    for (auto& part : map_cells(cells, task, bounds.worker_count)) {
        report.triples_examined += part.triples;
        std::move(part.rows.begin(), part.rows.end(), std::back_inserter(report.rows));
    }
    return report;
}

}  // namespace gfib
