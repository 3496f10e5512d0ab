#include "gfib/golden.hpp"

#include <algorithm>

#include <gmpxx.h>

#include "gfib/number_theory.hpp"
#include "gfib/sequence.hpp"

namespace gfib {

namespace {

struct TermFact {
    std::uint64_t n;
    long value;
};

// divisor | G_n (on_term) or divisor | n, expected truth value
struct DivFact {
    long divisor;
    std::uint64_t n;
    bool on_term;
    bool expected;
};

struct ExampleData {
    const char* id;
    std::int64_t p;
    std::int64_t q;
    std::optional<std::int64_t> s;
    std::optional<long> r;
    std::vector<TermFact> terms;
    std::vector<DivFact> divisibility;
};

const std::vector<ExampleData>& example_data() {
    static const std::vector<ExampleData> data = {
        {"2.1", 1, 1, 3, 5, {{3, 2}}, {{3, 3, true, false}, {3, 3, false, true}}},
        {"2.2", 3, 9, 3, 45, {{2, 3}}, {{3, 2, true, true}, {3, 2, false, false}}},
        {"2.3", 4, 1, std::nullopt, 20, {{10, 416020}, {2, 4}},
         {{20, 10, true, true}, {20, 10, false, false}, {4, 2, true, true}, {4, 2, false, false}}},
        {"2.4", 4, 4, std::nullopt, 32, {{2, 4}, {3, 20}},
         {{4, 2, true, true}, {4, 2, false, false}, {2, 3, true, true}, {2, 3, false, false}}},
        {"2.5", 5, 2, 3, 33, {{3, 27}}, {{9, 3, true, true}, {9, 3, false, false}}},
        {"2.6", 2, 5, 3, 24, {{3, 9}}, {{9, 3, true, true}, {9, 3, false, false}}},
        {"2.7", 2, 2, std::nullopt, 12, {{6, 120}, {3, 6}},
         {{12, 6, true, true}, {12, 6, false, false}, {2, 3, true, true}, {2, 3, false, false}}},
        {"2.8", 4, 2, std::nullopt, 24, {{3, 18}}, {{6, 3, true, true}, {6, 3, false, false}}},
        {"2.9", 1, 8, 3, std::nullopt, {{3, 9}}, {{9, 3, true, true}, {9, 3, false, false}}},
        {"2.10", 0, 2, std::nullopt, 8, {{3, 2}}, {{2, 3, true, true}, {2, 3, false, false}}},
        {"2.11", 5, -5, std::nullopt, 5, {{2, 5}}, {{5, 2, true, true}, {5, 2, false, false}}},
        {"2.12", 4, -2, std::nullopt, 8, {{3, 14}}, {{2, 3, true, true}, {2, 3, false, false}}},
    };
    return data;
}

const char* truth(bool v) { return v ? "true" : "false"; }

}  // namespace

bool ExampleOutcome::pass() const {
    return !facts.empty() && std::all_of(facts.begin(), facts.end(), [](const ExampleFact& f) { return f.pass; });
}

std::vector<ExampleOutcome> reproduce_examples() {
    std::vector<ExampleOutcome> out;
    for (const auto& ex : example_data()) {
        const SequenceParams params(ex.p, ex.q);
        ExampleOutcome outcome{ex.id, ex.p, ex.q, ex.s, {}};
        if (ex.r) {
            const std::string observed = params.r().get_str();
            const std::string expected = std::to_string(*ex.r);
            outcome.facts.push_back({"r", expected, observed, observed == expected});
        }
        for (const auto& term : ex.terms) {
            const std::string observed = g_exact(params, term.n).get_str();
            const std::string expected = std::to_string(term.value);
            outcome.facts.push_back({"G_" + std::to_string(term.n), expected, observed, observed == expected});
        }
        for (const auto& fact : ex.divisibility) {
            const mpz_class dividend =
                fact.on_term ? g_exact(params, fact.n) : mpz_class(static_cast<unsigned long>(fact.n));
            const bool observed = divides(mpz_class(fact.divisor), dividend);
            const std::string target = fact.on_term ? "G_" + std::to_string(fact.n) : std::to_string(fact.n);
            outcome.facts.push_back({std::to_string(fact.divisor) + " | " + target, truth(fact.expected),
                                     truth(observed), observed == fact.expected});
        }
        out.push_back(std::move(outcome));
    }
    return out;
}

}  // namespace gfib
