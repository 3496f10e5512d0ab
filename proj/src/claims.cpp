#include "gfib/claims.hpp"

#include <algorithm>
#include <map>

#include "gfib/errors.hpp"
#include "gfib/modular.hpp"
#include "gfib/number_theory.hpp"

namespace gfib {

namespace {

struct ConditionMeta {
    Condition condition;
    std::string_view name;
    std::string_view text;
};

constexpr std::array<ConditionMeta, kConditionCount> kConditionMeta = {{
    {Condition::RNonzero, "r-nonzero", "r != 0"},
    {Condition::POdd, "p-odd", "p is odd"},
    {Condition::PEven, "p-even", "p is even"},
    {Condition::GcdPQ, "gcd-pq", "gcd(p, q) = 1"},
    {Condition::GcdHalfPQ, "gcd-halfp-q", "p even and gcd(p/2, q) = 1"},
    {Condition::SDivR, "s-div-r", "s | r"},
    {Condition::SDivR4, "s-div-r4", "4 | r and s | r/4"},
    {Condition::FourDivR, "4-div-r", "4 | r"},
    {Condition::SPrime, "s-prime", "s is prime"},
    {Condition::SGe3, "s-ge-3", "s >= 3"},
    {Condition::S2DivR, "s2-div-r", "s^2 | r"},
    {Condition::S2DivR4, "s2-div-r4", "4 | r and s^2 | r/4"},
    {Condition::Mod3Clause, "mod3-clause", "3 does not divide q+1, or 3 does not divide s"},
    {Condition::QPositive, "q-positive", "q >= 1"},
    {Condition::PNonzero, "p-nonzero", "p != 0"},
    {Condition::RPrime, "r-prime", "r is prime"},
    {Condition::R4Prime, "r4-prime", "4 | r and r/4 is prime"},
    {Condition::SDiv4Q1, "s-div-4q1", "s | 4q+1"},
    {Condition::SDivQ1, "s-div-q1", "s | q+1"},
    {Condition::PIs1, "p-is-1", "p = 1"},
    {Condition::PIs2, "p-is-2", "p = 2"},
    {Condition::QIs1, "q-is-1", "q = 1"},
    {Condition::FibonacciPoint, "fibonacci-point", "(p, q, s) = (1, 1, 5)"},
    {Condition::PellPoint, "pell-point", "(p, q, s) = (2, 1, 2)"},
    {Condition::JacobsthalPoint, "jacobsthal-point", "(p, q, s) = (1, 2, 3)"},
    {Condition::SEqR, "s-eq-r", "s = r"},
    {Condition::SEqR4, "s-eq-r4", "4 | r and s = r/4"},
    {Condition::LiftCondition, "lift-condition", "for all t: s does not divide t implies s^2 does not divide G_{st}"},
}};

using C = Condition;

std::vector<ClaimInfo> build_registry() {
    const std::vector<std::vector<C>> equiv_cases = {
        {C::POdd, C::GcdPQ, C::SDivR}, {C::PEven, C::GcdHalfPQ, C::SDivR4}, {C::GcdPQ, C::SGe3, C::SPrime, C::SDivR}};
    const std::vector<std::vector<C>> base_cases = {
        {C::POdd, C::GcdPQ, C::SDivR}, {C::PEven, C::GcdHalfPQ, C::SDivR4}, {C::GcdPQ, C::SPrime, C::SDivR}};

    std::vector<ClaimInfo> out;
    out.push_back({ClaimId::Thm1_1_MultDiv, "Thm1_1_MultDiv", "thm1.1-multdiv", "Theorem 1.1(1)",
                   "r != 0 and s | r imply s^k G_n | G_{s^k n} for all k, n >= 0",
                   ConclusionForm::MultipleDivides, {C::RNonzero, C::SDivR}, {}, std::nullopt});
    out.push_back({ClaimId::Thm1_1_Equiv, "Thm1_1_Equiv", "thm1.1-equiv", "Theorem 1.1(2)",
                   "r != 0 and [p odd, (p,q)=1, s | r] or [p even, (p/2,q)=1, s | r/4] or [(p,q)=1, s >= 3 prime, "
                   "s | r], together with (3 does not divide q+1 or 3 does not divide s), imply s^k | n <=> "
                   "s^k | G_n for all k, n >= 0",
                   ConclusionForm::PowerEquivalence, {C::RNonzero, C::Mod3Clause}, equiv_cases, std::nullopt});
    out.push_back({ClaimId::Thm1_2_BaseEquiv, "Thm1_2_BaseEquiv", "thm1.2-base", "Theorem 1.2(1)",
                   "r != 0 and [p odd, (p,q)=1, s | r] or [p even, (p/2,q)=1, s | r/4] or [(p,q)=1, s prime, "
                   "s | r] imply s | n <=> s | G_n for all n >= 0",
                   ConclusionForm::BaseEquivalence, {C::RNonzero}, base_cases, 1});
    out.push_back({ClaimId::Thm1_2_LiftedEquiv, "Thm1_2_LiftedEquiv", "thm1.2-lifted", "Theorem 1.2(2)",
                   "the hypotheses of the base equivalence plus (s does not divide t implies s^2 does not divide "
                   "G_{st} for all t) imply s^k | n <=> s^k | G_n for all k, n >= 0",
                   ConclusionForm::PowerEquivalence, {C::RNonzero, C::LiftCondition}, base_cases, std::nullopt});
    out.push_back({ClaimId::Cor_Square, "Cor_Square", "cor-square", "Corollary 1.3",
                   "r != 0 and [p odd, (p,q)=1, s^2 | r] or [p even, (p/2,q)=1, s^2 | r/4] imply s^k | n <=> "
                   "s^k | G_n for all k, n >= 0",
                   ConclusionForm::PowerEquivalence, {C::RNonzero},
                   {{C::POdd, C::GcdPQ, C::S2DivR}, {C::PEven, C::GcdHalfPQ, C::S2DivR4}}, std::nullopt});
    out.push_back({ClaimId::Cor_Fibonacci, "Cor_Fibonacci", "cor-fibonacci", "Corollary 1.4(1)",
                   "Fibonacci numbers: 5^k F_n | F_{5^k n} and 5^k | n <=> 5^k | F_n for all k, n >= 0",
                   ConclusionForm::MultipleAndEquivalence, {C::FibonacciPoint}, {}, std::nullopt});
    out.push_back({ClaimId::Cor_Pell, "Cor_Pell", "cor-pell", "Corollary 1.4(2)",
                   "Pell numbers: 2^k P_n | P_{2^k n} and 2^k | n <=> 2^k | P_n for all k, n >= 0",
                   ConclusionForm::MultipleAndEquivalence, {C::PellPoint}, {}, std::nullopt});
    out.push_back({ClaimId::Cor_Jacobsthal, "Cor_Jacobsthal", "cor-jacobsthal", "Corollary 1.4(3)",
                   "Jacobsthal numbers: 3^k J_n | J_{3^k n} and 3^k | n <=> 3^k | J_n for all k, n >= 0",
                   ConclusionForm::MultipleAndEquivalence, {C::JacobsthalPoint}, {}, std::nullopt});
    out.push_back({ClaimId::Cor_Q1, "Cor_Q1", "cor-q1", "Corollary 1.5",
                   "q = 1 and [p odd, s | r] or [p even, s | r/4] or [s >= 3 prime, s | r] imply s^k | n <=> "
                   "s^k | G_n for all k, n >= 0",
                   ConclusionForm::PowerEquivalence, {C::QIs1},
                   {{C::POdd, C::SDivR}, {C::PEven, C::SDivR4}, {C::SGe3, C::SPrime, C::SDivR}}, std::nullopt});
    out.push_back({ClaimId::Cor_P1P2, "Cor_P1P2", "cor-p1p2", "Corollary 1.6",
                   "[p = 1, s | 4q+1] or [p = 2, s | q+1] imply s | n <=> s | G_n; with (3 does not divide q+1 or "
                   "3 does not divide s) also s^k | n <=> s^k | G_n for all k, n >= 0",
                   ConclusionForm::PowerEquivalence, {C::Mod3Clause},
                   {{C::PIs1, C::SDiv4Q1}, {C::PIs2, C::SDivQ1}}, std::nullopt});
    out.push_back({ClaimId::Cor_PrimeR, "Cor_PrimeR", "cor-prime-r", "Corollary 1.7(1)",
                   "q >= 1 and r prime imply r^k | n <=> r^k | G_n for all k, n >= 0 (s = r)",
                   ConclusionForm::PowerEquivalence, {C::QPositive, C::RPrime, C::SEqR}, {}, std::nullopt});
    out.push_back({ClaimId::Cor_PrimeRover4, "Cor_PrimeRover4", "cor-prime-r4", "Corollary 1.7(2)",
                   "q >= 1, r/4 prime and p != 0 imply (r/4)^k | n <=> (r/4)^k | G_n for all k, n >= 0 (s = r/4)",
                   ConclusionForm::PowerEquivalence, {C::QPositive, C::R4Prime, C::PNonzero, C::SEqR4}, {},
                   std::nullopt});
    out.push_back({ClaimId::Remark_Scaled, "Remark_Scaled", "remark-scaled", "Remark 1.8",
                   "for the sequence with seeds (0, a): r != 0 and s | r imply s^k a G_n | a G_{s^k n}",
                   ConclusionForm::ScaledMultipleDivides, {C::RNonzero, C::SDivR}, {}, std::nullopt});
    return out;
}

const std::vector<ClaimInfo>& registry() {
    static const std::vector<ClaimInfo> claims = build_registry();
    return claims;
}

mpz_class mpz_of(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

mpz_class power(std::int64_t base, std::uint64_t exponent) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), mpz_of(base).get_mpz_t(), exponent);
    return out;
}

bool gcd_is_one(const mpz_class& a, const mpz_class& b) {
    if (sgn(a) == 0 && sgn(b) == 0) return false;
    return gcd(a, b) == 1;
}

}  // namespace

std::string_view condition_name(Condition c) { return kConditionMeta[static_cast<std::size_t>(c)].name; }

std::string_view condition_text(Condition c) { return kConditionMeta[static_cast<std::size_t>(c)].text; }

std::optional<Condition> condition_from_name(std::string_view name) {
    for (const auto& meta : kConditionMeta) {
        if (meta.name == name) return meta.condition;
    }
    return std::nullopt;
}

const ClaimInfo& claim_info(ClaimId id) { return registry()[static_cast<std::size_t>(id)]; }

std::optional<ClaimId> claim_from_name(std::string_view name) {
    for (const auto& info : registry()) {
        if (info.key == name || info.alias == name) return info.id;
    }
    return std::nullopt;
}

std::vector<Condition> hypothesis_conditions(ClaimId id) {
    const auto& info = claim_info(id);
    std::vector<Condition> out;
    auto add = [&](Condition c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    for (Condition c : info.global) add(c);
    for (const auto& block : info.cases) {
        for (Condition c : block) add(c);
    }
    return out;
}

LiftCheck thm12_lift_condition(const SequenceParams& params, std::int64_t s, std::uint64_t t_max) {
    if (s < 2) throw DomainError("lift condition needs s >= 2");
    LiftCheck out;
    out.t_max = t_max;
    const mpz_class s2 = mpz_of(s) * mpz_of(s);
    const auto su = static_cast<std::uint64_t>(s);
    const bool small = s2.fits_ulong_p();
    const std::uint64_t s2u = small ? s2.get_ui() : 0;
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        if (t % su == 0) continue;
        const mpz_class index = mpz_of(s) * mpz_class(static_cast<unsigned long>(t));
        const bool divisible = small ? g_mod(params, index, s2u) == 0 : sgn(g_mod(params, index, s2)) == 0;
        if (divisible) {
            out.holds = false;
            out.first_failure = t;
            return out;
        }
    }
    return out;
}

ConditionTable::ConditionTable(const SequenceParams& params, std::int64_t s, bool with_lift,
                               std::uint64_t lift_t_max) {
    const mpz_class p = mpz_of(params.p());
    const mpz_class q = mpz_of(params.q());
    const mpz_class& r = params.r();
    const mpz_class sm = mpz_of(s);
    const mpz_class s2 = sm * sm;
    const bool p_even = mpz_even_p(p.get_mpz_t()) != 0;
    const bool four_div_r = divides(mpz_class(4), r);
    const mpz_class r4 = four_div_r ? mpz_class(r / 4) : mpz_class(0);
    const mpz_class q1 = q + 1;

    auto set = [&](Condition c, bool v) { values_[static_cast<std::size_t>(c)] = v; };
    set(C::RNonzero, sgn(r) != 0);
    set(C::POdd, !p_even);
    set(C::PEven, p_even);
    set(C::GcdPQ, gcd_is_one(p, q));
    set(C::GcdHalfPQ, p_even && gcd_is_one(p / 2, q));
    set(C::SDivR, divides(sm, r));
    set(C::FourDivR, four_div_r);
    set(C::SDivR4, four_div_r && divides(sm, r4));
    set(C::SPrime, s >= 2 && is_prime(static_cast<std::uint64_t>(s)));
    set(C::SGe3, s >= 3);
    set(C::S2DivR, divides(s2, r));
    set(C::S2DivR4, four_div_r && divides(s2, r4));
    set(C::Mod3Clause, !divides(mpz_class(3), q1) || !divides(mpz_class(3), sm));
    set(C::QPositive, params.q() >= 1);
    set(C::PNonzero, params.p() != 0);
    set(C::RPrime, is_prime(r));
    set(C::R4Prime, four_div_r && is_prime(r4));
    set(C::SDiv4Q1, divides(sm, 4 * q + 1));
    set(C::SDivQ1, divides(sm, q1));
    set(C::PIs1, params.p() == 1);
    set(C::PIs2, params.p() == 2);
    set(C::QIs1, params.q() == 1);
    set(C::FibonacciPoint, params.p() == 1 && params.q() == 1 && s == 5);
    set(C::PellPoint, params.p() == 2 && params.q() == 1 && s == 2);
    set(C::JacobsthalPoint, params.p() == 1 && params.q() == 2 && s == 3);
    set(C::SEqR, sm == r);
    set(C::SEqR4, four_div_r && sm == r4);
    if (with_lift) {
        lift_evaluated_ = true;
        if (s >= 2) {
            lift_ = thm12_lift_condition(params, s, lift_t_max);
        } else {
            lift_.t_max = lift_t_max;  // s = 1 never fails to divide t: vacuous
        }
        set(C::LiftCondition, lift_.holds);
    }
}

bool hypothesis_holds(ClaimId id, const ConditionTable& table, std::optional<Condition> forced_true) {
    const auto& info = claim_info(id);
    auto holds = [&](Condition c) { return (forced_true && *forced_true == c) || table.holds(c); };
    if (!std::all_of(info.global.begin(), info.global.end(), holds)) return false;
    if (info.cases.empty()) return true;
    return std::any_of(info.cases.begin(), info.cases.end(),
                       [&](const auto& block) { return std::all_of(block.begin(), block.end(), holds); });
}

std::optional<bool> HypothesisReport::holds(Condition c) const {
    for (const auto& value : conditions) {
        if (value.condition == c) return value.holds;
    }
    return std::nullopt;
}

HypothesisReport hypothesis_check(ClaimId id, const SequenceParams& params, std::int64_t s,
                                  const HypothesisOptions& options) {
    const auto needed = hypothesis_conditions(id);
    const bool with_lift = std::find(needed.begin(), needed.end(), C::LiftCondition) != needed.end();
    const ConditionTable table(params, s, with_lift, options.lift_t_max);

    HypothesisReport report;
    report.claim = id;
    for (const auto& meta : kConditionMeta) {
        if (meta.condition == C::LiftCondition && !with_lift) continue;
        report.conditions.push_back({meta.condition, table.holds(meta.condition)});
    }
    report.applicable = hypothesis_holds(id, table);
    if (with_lift) {
        report.note = "lift-condition verified up to t_max=" + std::to_string(options.lift_t_max);
        if (table.lift().first_failure) {
            report.note += ", fails at t=" + std::to_string(*table.lift().first_failure);
        }
    }
    return report;
}

std::vector<ClaimId> applicable_claims(const SequenceParams& params, std::int64_t s,
                                       const HypothesisOptions& options) {
    const ConditionTable table(params, s, true, options.lift_t_max);
    std::vector<ClaimId> out;
    for (ClaimId id : kAllClaims) {
        if (hypothesis_holds(id, table)) out.push_back(id);
    }
    return out;
}

namespace {

bool power_equivalence(TermEvaluator& eval, std::int64_t s, std::uint64_t e, std::uint64_t n, Witness* witness) {
    if (e == 0) return true;
    const mpz_class divisor = power(s, e);
    const mpz_class index(static_cast<unsigned long>(n));
    const bool index_divisible = divides(divisor, index);
    const bool term_divisible = eval.term_divisible(divisor, index);
    if (index_divisible == term_divisible) return true;
    if (witness != nullptr) {
        *witness = Witness{"s^k | n <=> s^k | G_n", divisor, index, index_divisible, term_divisible,
                           eval.term(n), std::nullopt};
    }
    return false;
}

bool multiple_divides(TermEvaluator& eval, std::int64_t s, std::uint64_t k, std::uint64_t n,
                      std::optional<std::int64_t> alpha, Witness* witness) {
    if (k == 0 || n == 0 || s == 1) return true;
    const mpz_class sk = power(s, k);
    const mpz_class g_n = eval.term(n);
    const mpz_class index = sk * mpz_class(static_cast<unsigned long>(n));
    bool ok = false;
    mpz_class divisor;
    if (alpha) {
        divisor = sk * mpz_of(*alpha) * g_n;
        ok = eval.scaled_term_divisible(divisor, *alpha, index);
    } else {
        divisor = sk * g_n;
        ok = eval.term_divisible(divisor, index);
    }
    if (!ok && witness != nullptr) {
        *witness = Witness{alpha ? "s^k*a*G_n | a*G_(s^k*n)" : "s^k*G_n | G_(s^k*n)", divisor, index, std::nullopt,
                           false, g_n, alpha};
    }
    return ok;
}

}  // namespace

bool evaluate_conclusion(ClaimId id, TermEvaluator& eval, std::int64_t s, std::uint64_t k, std::uint64_t n,
                         const ConclusionOptions& options, Witness* witness) {
    switch (claim_info(id).form) {
        case ConclusionForm::MultipleDivides:
            return multiple_divides(eval, s, k, n, std::nullopt, witness);
        case ConclusionForm::PowerEquivalence:
            return power_equivalence(eval, s, k, n, witness);
        case ConclusionForm::BaseEquivalence:
            return power_equivalence(eval, s, std::min<std::uint64_t>(k, 1), n, witness);
        case ConclusionForm::MultipleAndEquivalence:
            return multiple_divides(eval, s, k, n, std::nullopt, witness) &&
                   power_equivalence(eval, s, k, n, witness);
        case ConclusionForm::ScaledMultipleDivides:
            return std::all_of(options.alphas.begin(), options.alphas.end(), [&](std::int64_t alpha) {
                return multiple_divides(eval, s, k, n, alpha, witness);
            });
    }
    return false;
}

bool conclusion_holds(ClaimId id, const SequenceParams& params, std::int64_t s, std::uint64_t k, std::uint64_t n,
                      const ConclusionOptions& options) {
    TermEvaluator eval(params, EvalMode::Exact);
    return evaluate_conclusion(id, eval, s, k, n, options);
}

}  // namespace gfib
