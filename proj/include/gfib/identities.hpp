#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gfib/sequence.hpp"

namespace gfib {

struct IdentityResult {
    std::string name;
    std::string relation;
    bool applicable = true;  // even-p expansions are skipped for odd p
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

struct IdentityReport {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::uint64_t n_max = 0;
    std::vector<std::int64_t> s_list;
    std::vector<IdentityResult> results;

    bool all_pass() const;
};

/// Exact cross-checks between the production recurrences and the closed algebraic
/// expansions of A_n, B_n and G_n in Z[sqrt r], each reported independently.
/// Throws InputError for n_max < 1 or an s < 1.
IdentityReport identity_suite(const SequenceParams& params, std::uint64_t n_max, std::span<const std::int64_t> s_list);

}  // namespace gfib
