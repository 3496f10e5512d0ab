#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include <gmpxx.h>

#include "gfib/sequence.hpp"

namespace gfib {

/// Parses a nonnegative decimal index of any length. Throws InputError when malformed.
mpz_class parse_index(std::string_view decimal);

// G_n mod m by fast doubling over the bits of n:
//   U_{2k}   = U_k (2 U_{k+1} - p U_k)
//   U_{2k+1} = U_{k+1}^2 + q U_k^2
// All overloads throw DomainError for m = 0 and return a residue in [0, m).
std::uint64_t g_mod(const SequenceParams& params, std::string_view n, std::uint64_t m);
std::uint64_t g_mod(const SequenceParams& params, const mpz_class& n, std::uint64_t m);
std::uint64_t g_mod(const SequenceParams& params, std::uint64_t n, std::uint64_t m);
mpz_class g_mod(const SequenceParams& params, const mpz_class& n, const mpz_class& m);

struct ABResidue {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    bool operator==(const ABResidue&) const = default;
};

/// (A_n mod m, B_n mod m). B is the <2p, 4q> sequence, so the same doubling kernel
/// gives (B_n, B_{n+1}) and A_n = B_{n+1} - p B_n.
ABResidue ab_mod(const SequenceParams& params, std::string_view n, std::uint64_t m);
ABResidue ab_mod(const SequenceParams& params, const mpz_class& n, std::uint64_t m);

struct ModQuery {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::uint64_t n = 0;
    std::uint64_t m = 1;
};

/// Reference implementation: one query after another.
void g_mod_batch_serial(std::span<const ModQuery> queries, std::span<std::uint64_t> out);

/// OpenMP-parallel version of g_mod_batch_serial with identical results.
void g_mod_batch(std::span<const ModQuery> queries, std::span<std::uint64_t> out, int workers);

}  // namespace gfib
