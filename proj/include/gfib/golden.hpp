#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfib {

struct ExampleFact {
    std::string description;  // e.g. "G_10", "20 | G_10", "20 | 10"
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct ExampleOutcome {
    std::string id;  // "2.1" .. "2.12"
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::optional<std::int64_t> s;
    std::vector<ExampleFact> facts;

    bool pass() const;
};

/// Recomputes the twelve published hypothesis-dropping examples: quoted term values,
/// discriminants and divisibility facts, all exactly.
std::vector<ExampleOutcome> reproduce_examples();

}  // namespace gfib
