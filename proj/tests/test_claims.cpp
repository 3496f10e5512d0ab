#include <doctest.h>

#include <set>

#include "gfib/claims.hpp"
#include "gfib/errors.hpp"

using namespace gfib;

TEST_CASE("catalog") {
    CHECK(kAllClaims.size() >= 13);
    std::set<std::string_view> keys;
    std::set<std::string_view> aliases;
    for (ClaimId id : kAllClaims) {
        const auto& info = claim_info(id);
        CHECK(info.id == id);
        keys.insert(info.key);
        aliases.insert(info.alias);
        CHECK(claim_from_name(info.key) == id);
        CHECK(claim_from_name(info.alias) == id);
        CHECK_FALSE(info.statement.empty());
        CHECK_FALSE(hypothesis_conditions(id).empty());
    }
    CHECK(keys.size() == kAllClaims.size());
    CHECK(aliases.size() == kAllClaims.size());
    CHECK(claim_from_name("Thm1_1_MultDiv") == ClaimId::Thm1_1_MultDiv);
    CHECK(claim_info(ClaimId::Cor_Jacobsthal).citation == "Corollary 1.4(3)");
    CHECK_FALSE(claim_from_name("thm9").has_value());
}

TEST_CASE("condition names round-trip") {
    for (std::size_t i = 0; i < kConditionCount; ++i) {
        const auto c = static_cast<Condition>(i);
        CHECK(condition_from_name(condition_name(c)) == c);
        CHECK_FALSE(condition_text(c).empty());
    }
}

TEST_CASE("hypotheses at published points") {
    CHECK(hypothesis_check(ClaimId::Thm1_1_Equiv, SequenceParams(1, 1), 5).applicable);
    CHECK_FALSE(hypothesis_check(ClaimId::Thm1_1_Equiv, SequenceParams(3, 9), 3).applicable);
    CHECK(hypothesis_check(ClaimId::Thm1_1_Equiv, SequenceParams(3, 9), 3).holds(Condition::GcdPQ) == false);
    CHECK(hypothesis_check(ClaimId::Thm1_1_MultDiv, SequenceParams(2, 1), 2).applicable);
    CHECK(hypothesis_check(ClaimId::Cor_Fibonacci, SequenceParams(1, 1), 5).applicable);
    CHECK(hypothesis_check(ClaimId::Cor_Pell, SequenceParams(2, 1), 2).applicable);
    CHECK(hypothesis_check(ClaimId::Cor_Jacobsthal, SequenceParams(1, 2), 3).applicable);
    CHECK_FALSE(hypothesis_check(ClaimId::Cor_Jacobsthal, SequenceParams(1, 1), 3).applicable);
    // (5, 2, 3): 3 | q + 1 and 3 | s, so the mod-3 clause fails.
    CHECK_FALSE(hypothesis_check(ClaimId::Thm1_1_Equiv, SequenceParams(5, 2), 3).applicable);
    CHECK(hypothesis_check(ClaimId::Thm1_1_Equiv, SequenceParams(5, 2), 3).holds(Condition::Mod3Clause) == false);
    // r = 0 is outside every discriminant-based claim.
    CHECK_FALSE(hypothesis_check(ClaimId::Thm1_1_MultDiv, SequenceParams(2, -1), 1).applicable);
}

TEST_CASE("lift condition") {
    const auto fib = thm12_lift_condition(SequenceParams(1, 1), 5, 50);
    CHECK(fib.holds);
    CHECK_FALSE(fib.first_failure.has_value());
    const auto a = thm12_lift_condition(SequenceParams(5, 2), 3, 50);
    CHECK_FALSE(a.holds);
    CHECK(a.first_failure == 1);
    const auto b = thm12_lift_condition(SequenceParams(2, 5), 3, 50);
    CHECK(b.first_failure == 1);
    CHECK_THROWS_AS(thm12_lift_condition(SequenceParams(1, 1), 1, 10), DomainError);
    const auto report = hypothesis_check(ClaimId::Thm1_2_LiftedEquiv, SequenceParams(1, 1), 5, {30});
    CHECK(report.applicable);
    CHECK(report.note == "lift-condition verified up to t_max=30");
}

TEST_CASE("conclusions at known points") {
    CHECK(conclusion_holds(ClaimId::Thm1_1_MultDiv, SequenceParams(1, 1), 5, 2, 3));
    CHECK(conclusion_holds(ClaimId::Thm1_1_Equiv, SequenceParams(1, 1), 5, 2, 25));
    CHECK(conclusion_holds(ClaimId::Thm1_1_Equiv, SequenceParams(1, 1), 5, 2, 10));
    // 20 | G_10 = 416020 but 20 does not divide 10.
    CHECK_FALSE(conclusion_holds(ClaimId::Thm1_1_Equiv, SequenceParams(4, 1), 20, 1, 10));
    // G_2 = 3 for (3, 9), so 3 | G_2 while 3 does not divide 2.
    CHECK_FALSE(conclusion_holds(ClaimId::Thm1_1_Equiv, SequenceParams(3, 9), 3, 1, 2));
    // The base equivalence ignores k > 1.
    CHECK(conclusion_holds(ClaimId::Thm1_2_BaseEquiv, SequenceParams(1, 1), 5, 3, 5));
}

TEST_CASE("witness carries the failing relation") {
    TermEvaluator eval(SequenceParams(4, 1), EvalMode::Exact);
    Witness w;
    REQUIRE_FALSE(evaluate_conclusion(ClaimId::Thm1_1_Equiv, eval, 20, 1, 10, {}, &w));
    CHECK(w.divisor == 20);
    CHECK(w.index == 10);
    CHECK(w.index_divisible == false);
    CHECK(w.term_divisible);
    CHECK(w.g_n == 416020);
}

TEST_CASE("multiple-divides claim holds wherever its hypothesis does, small grid") {
    for (std::int64_t p = -5; p <= 5; ++p) {
        for (std::int64_t q = -5; q <= 5; ++q) {
            const SequenceParams params(p, q);
            if (params.r() == 0) continue;
            TermEvaluator eval(params, EvalMode::Exact);
            const long r = std::abs(params.r().get_si());
            for (long s = 1; s <= r; ++s) {
                if (r % s != 0) continue;
                REQUIRE(hypothesis_check(ClaimId::Thm1_1_MultDiv, params, s).applicable);
                for (std::uint64_t k = 0; k <= 2; ++k) {
                    for (std::uint64_t n = 0; n <= 12; ++n) {
                        CHECK(evaluate_conclusion(ClaimId::Thm1_1_MultDiv, eval, s, k, n));
                    }
                }
            }
        }
    }
}
