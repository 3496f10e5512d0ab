#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace gfib {

/// Coefficients of G_n = p G_{n-1} + q G_{n-2} with the exact discriminant r = p^2 + 4q.
class SequenceParams {
public:
    SequenceParams(std::int64_t p, std::int64_t q);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    const mpz_class& r() const { return r_; }

    bool operator==(const SequenceParams& other) const { return p_ == other.p_ && q_ == other.q_; }

private:
    std::int64_t p_;
    std::int64_t q_;
    mpz_class r_;
};

/// (A_n, B_n) with A_n + B_n sqrt(r) = (p + sqrt(r))^n.
struct ABPair {
    std::uint64_t n = 0;
    mpz_class a;
    mpz_class b;
};

inline constexpr std::uint64_t kDefaultRangeCeiling = 1'000'000;

mpz_class g_exact(const SequenceParams& params, std::uint64_t n);

/// G_0 .. G_{n_max} in one linear pass. Throws ResourceError when n_max + 1 exceeds `ceiling` terms.
std::vector<mpz_class> g_range(const SequenceParams& params, std::uint64_t n_max,
                               std::uint64_t ceiling = kDefaultRangeCeiling);

/// Linear recurrence X_n = 2p X_{n-1} + 4q X_{n-2}; A_0 = 1, A_1 = p, B_0 = 0, B_1 = 1.
ABPair ab_exact(const SequenceParams& params, std::uint64_t n);

/// (A_i, B_i) for i = 0 .. n_max, same recurrence as ab_exact.
std::vector<ABPair> ab_range(const SequenceParams& params, std::uint64_t n_max,
                             std::uint64_t ceiling = kDefaultRangeCeiling);

/// True iff G_n = 0, decided without evaluating G_n.
///
/// For q != 0 the zero set of G on n >= 1 is the set of multiples of the order of the
/// root ratio alpha/beta, which is one of 2, 3, 4, 6 when it is a root of unity, so the
/// first six terms settle it. For q = 0, G_n = p^(n-1).
bool term_vanishes(const SequenceParams& params, const mpz_class& n);
bool term_vanishes(const SequenceParams& params, std::uint64_t n);

}  // namespace gfib
