#include "gfib/modular.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include <omp.h>

#include "gfib/errors.hpp"

namespace gfib {

namespace {

using u128 = unsigned __int128;

struct Ring64 {
    std::uint64_t m;

    std::uint64_t from(std::int64_t v) const {
        if (v >= 0) return static_cast<std::uint64_t>(v) % m;
        const std::uint64_t rem = (0 - static_cast<std::uint64_t>(v)) % m;
        return rem == 0 ? 0 : m - rem;
    }
    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return 1 % m; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t s = a + b;
        return (s < a || s >= m) ? s - m : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (m - b); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
    }
};

struct RingBig {
    mpz_class m;

    mpz_class reduce(mpz_class v) const {
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        return v;
    }
    mpz_class from(std::int64_t v) const { return reduce(mpz_class(static_cast<long>(v))); }
    mpz_class zero() const { return 0; }
    mpz_class one() const { return reduce(1); }
    mpz_class add(const mpz_class& a, const mpz_class& b) const { return reduce(a + b); }
    mpz_class sub(const mpz_class& a, const mpz_class& b) const { return reduce(a - b); }
    mpz_class mul(const mpz_class& a, const mpz_class& b) const { return reduce(a * b); }
};

// Returns (U_n, U_{n+1}) of the <p,q> sequence in `ring`, scanning the bits of n from the top.
// p and q are ring elements (already reduced).
template <class Ring, class Elem, class BitAt>
auto lucas_u_pair(const Ring& ring, const Elem& p, const Elem& q, std::size_t bit_count, BitAt bit_at) {
    auto u = ring.zero();
    auto u_next = ring.one();
    for (std::size_t i = bit_count; i-- > 0;) {
        const auto two_next = ring.add(u_next, u_next);
        auto u_even = ring.mul(u, ring.sub(two_next, ring.mul(p, u)));
        auto u_odd = ring.add(ring.mul(u_next, u_next), ring.mul(q, ring.mul(u, u)));
        if (bit_at(i)) {
            auto advanced = ring.add(ring.mul(p, u_odd), ring.mul(q, u_even));
            u = std::move(u_odd);
            u_next = std::move(advanced);
        } else {
            u = std::move(u_even);
            u_next = std::move(u_odd);
        }
    }
    return std::pair{std::move(u), std::move(u_next)};
}

template <class Ring, class Elem>
auto lucas_u_pair(const Ring& ring, const Elem& p, const Elem& q, std::uint64_t n) {
    const std::size_t bits = n == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(n));
    return lucas_u_pair(ring, p, q, bits, [n](std::size_t i) { return ((n >> i) & 1) != 0; });
}

template <class Ring, class Elem>
auto lucas_u_pair(const Ring& ring, const Elem& p, const Elem& q, const mpz_class& n) {
    const std::size_t bits = sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
    return lucas_u_pair(ring, p, q, bits, [&n](std::size_t i) { return mpz_tstbit(n.get_mpz_t(), i) != 0; });
}

template <class Ring, class Index>
auto g_pair(const Ring& ring, std::int64_t p, std::int64_t q, const Index& n) {
    return lucas_u_pair(ring, ring.from(p), ring.from(q), n);
}

void require_modulus(std::uint64_t m) {
    if (m == 0) throw DomainError("modulus must be >= 1");
}

void require_index(const mpz_class& n) {
    if (sgn(n) < 0) throw InputError("index must be nonnegative");
}

}  // namespace

mpz_class parse_index(std::string_view decimal) {
    if (decimal.empty()) throw InputError("empty index");
    if (!std::all_of(decimal.begin(), decimal.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw InputError("index is not a nonnegative decimal integer: '" + std::string(decimal) + "'");
    }
    return mpz_class(std::string(decimal), 10);
}

std::uint64_t g_mod(const SequenceParams& params, std::string_view n, std::uint64_t m) {
    return g_mod(params, parse_index(n), m);
}

std::uint64_t g_mod(const SequenceParams& params, const mpz_class& n, std::uint64_t m) {
    require_modulus(m);
    require_index(n);
    return g_pair(Ring64{m}, params.p(), params.q(), n).first;
}

std::uint64_t g_mod(const SequenceParams& params, std::uint64_t n, std::uint64_t m) {
    require_modulus(m);
    return g_pair(Ring64{m}, params.p(), params.q(), n).first;
}

mpz_class g_mod(const SequenceParams& params, const mpz_class& n, const mpz_class& m) {
    if (sgn(m) == 0) throw DomainError("modulus must be nonzero");
    require_index(n);
    return g_pair(RingBig{abs(m)}, params.p(), params.q(), n).first;
}

ABResidue ab_mod(const SequenceParams& params, std::string_view n, std::uint64_t m) {
    return ab_mod(params, parse_index(n), m);
}

ABResidue ab_mod(const SequenceParams& params, const mpz_class& n, std::uint64_t m) {
    require_modulus(m);
    require_index(n);
    const Ring64 ring{m};
    const std::uint64_t p = ring.from(params.p());
    const std::uint64_t q = ring.from(params.q());
    const auto [b, b_next] = lucas_u_pair(ring, ring.mul(ring.from(2), p), ring.mul(ring.from(4), q), n);
    const std::uint64_t a = ring.sub(b_next, ring.mul(p, b));
    return {a, b};
}

void g_mod_batch_serial(std::span<const ModQuery> queries, std::span<std::uint64_t> out) {
    if (out.size() < queries.size()) throw InputError("output span shorter than query span");
    for (std::size_t i = 0; i < queries.size(); ++i) {
        const auto& query = queries[i];
        out[i] = g_mod(SequenceParams(query.p, query.q), query.n, query.m);
    }
}

void g_mod_batch(std::span<const ModQuery> queries, std::span<std::uint64_t> out, int workers) {
    if (out.size() < queries.size()) throw InputError("output span shorter than query span");
    for (const auto& query : queries) require_modulus(query.m);
    const auto count = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(static) num_threads(std::max(1, workers))
    for (std::int64_t i = 0; i < count; ++i) {
        const auto& query = queries[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] =
            g_pair(Ring64{query.m}, query.p, query.q, query.n).first;
    }
}

}  // namespace gfib
