#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "gfib/sequence.hpp"

namespace gfib {

enum class EvalMode { Exact, Modular };

/// Largest index served from the exact term table.
inline constexpr std::uint64_t kExactIndexLimit = 2000;

/// Answers "d | G_N" questions for one (p, q) cell.
///
/// Exact mode reads exact terms from a lazily grown table for N <= exact_limit and
/// otherwise reduces G_N modulo |d| with the arbitrary-precision doubling kernel.
/// Modular mode always goes through g_mod (64-bit kernel when |d| fits).
/// Not thread-safe: use one evaluator per worker/cell.
class TermEvaluator {
public:
    TermEvaluator(SequenceParams params, EvalMode mode, std::uint64_t exact_limit = kExactIndexLimit);

    const SequenceParams& params() const { return params_; }
    EvalMode mode() const { return mode_; }

    /// Exact G_n.
    mpz_class term(std::uint64_t n);

    /// G_index mod m in [0, m). Precondition: m >= 1.
    mpz_class term_residue(const mpz_class& m, const mpz_class& index);

    /// d | G_index, with 0 | 0.
    bool term_divisible(const mpz_class& d, const mpz_class& index);
    bool term_divisible(const mpz_class& d, std::uint64_t index);

    /// d | alpha * G_index.
    bool scaled_term_divisible(const mpz_class& d, std::int64_t alpha, const mpz_class& index);

private:
    void extend_table(std::uint64_t n);

    SequenceParams params_;
    EvalMode mode_;
    std::uint64_t exact_limit_;
    std::vector<mpz_class> table_;
};

}  // namespace gfib
