#include "gfib/sequence.hpp"

#include <string>

#include "gfib/errors.hpp"

namespace gfib {

namespace {

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

SequenceParams::SequenceParams(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    const mpz_class pp = to_mpz(p);
    r_ = pp * pp + 4 * to_mpz(q);
}

mpz_class g_exact(const SequenceParams& params, std::uint64_t n) {
    const mpz_class p = to_mpz(params.p());
    const mpz_class q = to_mpz(params.q());
    mpz_class prev = 0;
    mpz_class cur = 1;
    if (n == 0) return prev;
    for (std::uint64_t i = 1; i < n; ++i) {
        mpz_class next = p * cur + q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<mpz_class> g_range(const SequenceParams& params, std::uint64_t n_max,
                               std::uint64_t ceiling) {
    if (n_max >= ceiling) {
        throw ResourceError("g_range: " + std::to_string(n_max + 1) + " terms exceeds the ceiling of " +
                            std::to_string(ceiling));
    }
    const mpz_class p = to_mpz(params.p());
    const mpz_class q = to_mpz(params.q());
    std::vector<mpz_class> out;
    out.reserve(n_max + 1);
    out.emplace_back(0);
    if (n_max >= 1) out.emplace_back(1);
    for (std::uint64_t i = 2; i <= n_max; ++i) {
        out.emplace_back(p * out[i - 1] + q * out[i - 2]);
    }
    return out;
}

ABPair ab_exact(const SequenceParams& params, std::uint64_t n) {
    const mpz_class c1 = 2 * to_mpz(params.p());
    const mpz_class c2 = 4 * to_mpz(params.q());
    mpz_class a_prev = 1, a_cur = to_mpz(params.p());
    mpz_class b_prev = 0, b_cur = 1;
    if (n == 0) return {0, a_prev, b_prev};
    for (std::uint64_t i = 1; i < n; ++i) {
        mpz_class a_next = c1 * a_cur + c2 * a_prev;
        mpz_class b_next = c1 * b_cur + c2 * b_prev;
        a_prev = std::move(a_cur);
        a_cur = std::move(a_next);
        b_prev = std::move(b_cur);
        b_cur = std::move(b_next);
    }
    return {n, a_cur, b_cur};
}

std::vector<ABPair> ab_range(const SequenceParams& params, std::uint64_t n_max, std::uint64_t ceiling) {
    if (n_max >= ceiling) {
        throw ResourceError("ab_range: " + std::to_string(n_max + 1) + " terms exceeds the ceiling of " +
                            std::to_string(ceiling));
    }
    const mpz_class c1 = 2 * to_mpz(params.p());
    const mpz_class c2 = 4 * to_mpz(params.q());
    std::vector<ABPair> out;
    out.reserve(n_max + 1);
    out.push_back({0, 1, 0});
    if (n_max >= 1) out.push_back({1, to_mpz(params.p()), 1});
    for (std::uint64_t i = 2; i <= n_max; ++i) {
        out.push_back({i, c1 * out[i - 1].a + c2 * out[i - 2].a, c1 * out[i - 1].b + c2 * out[i - 2].b});
    }
    return out;
}

bool term_vanishes(const SequenceParams& params, const mpz_class& n) {
    if (sgn(n) == 0) return true;
    if (params.q() == 0) return params.p() == 0 && n >= 2;
    const auto head = g_range(params, 6);
    for (unsigned order = 1; order <= 6; ++order) {
        if (sgn(head[order]) == 0) return mpz_divisible_ui_p(n.get_mpz_t(), order) != 0;
    }
    return false;
}

bool term_vanishes(const SequenceParams& params, std::uint64_t n) {
    return term_vanishes(params, mpz_class(static_cast<unsigned long>(n)));
}

}  // namespace gfib
