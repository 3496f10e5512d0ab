#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gfib/evaluator.hpp"
#include "gfib/sequence.hpp"

namespace gfib {

enum class ClaimId {
    Thm1_1_MultDiv,
    Thm1_1_Equiv,
    Thm1_2_BaseEquiv,
    Thm1_2_LiftedEquiv,
    Cor_Square,
    Cor_Fibonacci,
    Cor_Pell,
    Cor_Jacobsthal,
    Cor_Q1,
    Cor_P1P2,
    Cor_PrimeR,
    Cor_PrimeRover4,
    Remark_Scaled,
};

inline constexpr std::array kAllClaims = {
    ClaimId::Thm1_1_MultDiv,  ClaimId::Thm1_1_Equiv, ClaimId::Thm1_2_BaseEquiv, ClaimId::Thm1_2_LiftedEquiv,
    ClaimId::Cor_Square,      ClaimId::Cor_Fibonacci, ClaimId::Cor_Pell,       ClaimId::Cor_Jacobsthal,
    ClaimId::Cor_Q1,          ClaimId::Cor_P1P2,      ClaimId::Cor_PrimeR,     ClaimId::Cor_PrimeRover4,
    ClaimId::Remark_Scaled,
};

/// Atomic hypothesis conditions on (p, q, s).
enum class Condition {
    RNonzero,
    POdd,
    PEven,
    GcdPQ,
    GcdHalfPQ,
    SDivR,
    SDivR4,
    FourDivR,
    SPrime,
    SGe3,
    S2DivR,
    S2DivR4,
    Mod3Clause,
    QPositive,
    PNonzero,
    RPrime,
    R4Prime,
    SDiv4Q1,
    SDivQ1,
    PIs1,
    PIs2,
    QIs1,
    FibonacciPoint,
    PellPoint,
    JacobsthalPoint,
    SEqR,
    SEqR4,
    LiftCondition,
};

inline constexpr std::size_t kConditionCount = static_cast<std::size_t>(Condition::LiftCondition) + 1;

std::string_view condition_name(Condition c);
std::string_view condition_text(Condition c);
std::optional<Condition> condition_from_name(std::string_view name);

enum class ConclusionForm {
    MultipleDivides,         // s^k G_n | G_{s^k n}
    PowerEquivalence,        // s^k | n  <=>  s^k | G_n
    BaseEquivalence,         // s | n  <=>  s | G_n  (exponent clamped to 1)
    MultipleAndEquivalence,  // both of the above
    ScaledMultipleDivides,   // s^k a G_n | a G_{s^k n} for each configured a
};

struct ClaimInfo {
    ClaimId id;
    std::string_view key;       // "Thm1_1_MultDiv"
    std::string_view alias;     // "thm1.1-multdiv"
    std::string_view citation;  // "Theorem 1.1(1)"
    std::string_view statement;
    ConclusionForm form;
    std::vector<Condition> global;              // all must hold
    std::vector<std::vector<Condition>> cases;  // at least one case must hold (if any)
    std::optional<std::uint64_t> max_k;         // largest exponent the statement speaks about
};

const ClaimInfo& claim_info(ClaimId id);
/// Accepts either the key or the kebab-case alias.
std::optional<ClaimId> claim_from_name(std::string_view name);
/// Distinct atomic conditions of the hypothesis formula, in first-appearance order.
std::vector<Condition> hypothesis_conditions(ClaimId id);

struct LiftCheck {
    bool holds = true;
    std::optional<std::uint64_t> first_failure;
    std::uint64_t t_max = 0;
};

/// Bounded check of "s does not divide t implies s^2 does not divide G_{st}" for t in [1, t_max].
/// Throws DomainError for s < 2.
LiftCheck thm12_lift_condition(const SequenceParams& params, std::int64_t s, std::uint64_t t_max);

struct HypothesisOptions {
    std::uint64_t lift_t_max = 50;
};

/// Truth values of all atomic conditions at one (p, q, s).
class ConditionTable {
public:
    ConditionTable(const SequenceParams& params, std::int64_t s, bool with_lift, std::uint64_t lift_t_max);

    bool holds(Condition c) const { return values_[static_cast<std::size_t>(c)]; }
    bool lift_evaluated() const { return lift_evaluated_; }
    const LiftCheck& lift() const { return lift_; }

private:
    std::array<bool, kConditionCount> values_{};
    bool lift_evaluated_ = false;
    LiftCheck lift_;
};

/// Evaluates the claim's hypothesis formula. `forced_true` is treated as holding regardless of the table.
bool hypothesis_holds(ClaimId id, const ConditionTable& table, std::optional<Condition> forced_true = std::nullopt);

struct ConditionValue {
    Condition condition;
    bool holds;
};

struct HypothesisReport {
    ClaimId claim;
    std::vector<ConditionValue> conditions;
    bool applicable = false;
    std::string note;

    std::optional<bool> holds(Condition c) const;
};

HypothesisReport hypothesis_check(ClaimId id, const SequenceParams& params, std::int64_t s,
                                  const HypothesisOptions& options = {});

std::vector<ClaimId> applicable_claims(const SequenceParams& params, std::int64_t s,
                                       const HypothesisOptions& options = {});

struct ConclusionOptions {
    std::vector<std::int64_t> alphas = {-3, -1, 2, 5};
};

/// Concrete values behind one conclusion evaluation.
struct Witness {
    std::string relation;
    mpz_class divisor;  // s^k, or s^k G_n (times alpha for the scaled remark)
    mpz_class index;    // index of the term tested against `divisor`
    std::optional<bool> index_divisible;  // s^k | n, equivalence forms only
    bool term_divisible = false;
    mpz_class g_n;
    std::optional<std::int64_t> alpha;
};

/// Evaluates the conclusion at (s, k, n); hypotheses are not consulted. On failure `witness`
/// (if given) receives the failing relation.
bool evaluate_conclusion(ClaimId id, TermEvaluator& eval, std::int64_t s, std::uint64_t k, std::uint64_t n,
                         const ConclusionOptions& options = {}, Witness* witness = nullptr);

bool conclusion_holds(ClaimId id, const SequenceParams& params, std::int64_t s, std::uint64_t k, std::uint64_t n,
                      const ConclusionOptions& options = {});

}  // namespace gfib
