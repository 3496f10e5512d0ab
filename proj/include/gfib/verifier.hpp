#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gfib/claims.hpp"
#include "gfib/evaluator.hpp"
#include "gfib/sweep.hpp"

namespace gfib {

/// Where the s values of a sweep come from.
struct SSource {
    enum class Kind { Explicit, DivisorsOfR, DivisorsOfRQuarter, UpTo };

    Kind kind = Kind::DivisorsOfR;
    std::vector<std::int64_t> values;  // Explicit
    std::int64_t max = 0;              // UpTo: 1..max

    static SSource explicit_list(std::vector<std::int64_t> values);
    static SSource divisors_of_r() { return {}; }
    static SSource divisors_of_r_quarter() { return {Kind::DivisorsOfRQuarter, {}, 0}; }
    static SSource up_to(std::int64_t max) { return {Kind::UpTo, {}, max}; }

    /// Ascending s values for one cell. Divisor sources yield nothing when r (or r/4) is 0
    /// or when 4 does not divide r.
    std::vector<std::int64_t> values_for(const SequenceParams& params) const;
};

struct SweepConfig {
    IntRange p_range{-8, 8};
    IntRange q_range{-8, 8};
    SSource s_source;
    std::uint64_t k_max = 3;
    std::uint64_t n_max = 40;
    std::uint64_t t_max = 50;
    EvalMode mode = EvalMode::Exact;
    int worker_count = 1;
    std::vector<std::int64_t> alphas = {-3, -1, 2, 5};
    std::optional<double> time_budget_seconds;
};

/// Throws InputError on an inconsistent configuration.
void validate(const SweepConfig& config);

struct Counterexample {
    ClaimId claim;
    std::string relaxed_condition;  // empty for plain verification violations
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t s = 0;
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    Witness witness;
};

enum class Verdict { AllPass, Violations, HypothesisNeverApplicable };

struct VerificationReport {
    ClaimId claim;
    SweepConfig config;
    std::uint64_t points_checked = 0;
    std::uint64_t applicable_triples = 0;  // (p, q, s) with the hypothesis satisfied
    std::vector<Counterexample> violations;
    std::chrono::duration<double> elapsed{};
    Verdict verdict = Verdict::HypothesisNeverApplicable;
};

/// Sweeps every applicable (p, q, s) and every (k, n) with k <= k_max (clamped to the claim's
/// own exponent range) and n <= n_max. Violations come back in scan order.
VerificationReport verify_claim(ClaimId claim, const SweepConfig& config);

/// First counterexample in scan order among points that violate `relaxed_condition`, satisfy the
/// hypothesis with that condition forced true, and fail the actual hypothesis.
/// Throws InputError if the condition is not part of the claim's hypothesis.
std::optional<Counterexample> search_counterexample(ClaimId claim, std::string_view relaxed_condition,
                                                    const SweepConfig& bounds);

/// Every such counterexample, in scan order.
std::vector<Counterexample> counterexample_set(ClaimId claim, std::string_view relaxed_condition,
                                               const SweepConfig& bounds);

/// Smallest n in [1, n_bound] with s | G_n via a residue scan mod s. Throws DomainError for s < 2.
std::optional<std::uint64_t> rank_of_apparition(const SequenceParams& params, std::int64_t s,
                                                std::uint64_t n_bound);

struct SurveyRow {
    std::int64_t p = 0;
    std::int64_t q = 0;
    mpz_class r;
    std::int64_t s = 0;
    bool s_divides_r_quarter = false;
    std::uint64_t k = 1;  // exponent of the first failure (1 is the base equivalence)
    std::uint64_t n = 0;  // smallest violating n at that exponent
    std::vector<Condition> failing_conditions;
    std::vector<ClaimId> applicable;
};

struct SurveyReport {
    SweepConfig config;
    std::uint64_t triples_examined = 0;
    std::vector<SurveyRow> rows;
    std::string note;
};

/// Catalog of (p, q, s), s >= 2 from the configured source, where s^k | n <=> s^k | G_n fails
/// for some k in [1, k_max], n in [1, n_max]. Data only; no characterization is claimed.
SurveyReport converse_survey(const SweepConfig& bounds);

}  // namespace gfib
