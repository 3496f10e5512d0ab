#include <doctest.h>

#include <random>
#include <vector>

#include "gfib/errors.hpp"
#include "gfib/modular.hpp"
#include "gfib/sequence.hpp"
#include "matrix_oracle.hpp"

using namespace gfib;

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 reduce(std::int64_t v, u64 m) {
    const auto r = static_cast<__int128>(v) % static_cast<__int128>(m);
    return static_cast<u64>(r < 0 ? r + m : r);
}

}  // namespace

TEST_CASE("frozen residues") {
    CHECK(g_mod(SequenceParams(1, 1), u64{10}, 8) == 7);
    CHECK(g_mod(SequenceParams(1, 1), "1000000000000000000", 12) == 3);
    CHECK(g_mod(SequenceParams(22, 5), u64{1'000'000'000'000'000'000}, 590893859) == 115101669);
    CHECK(g_mod(SequenceParams(17, 12), u64{1'000'000'000'000'000'000}, 129303305) == 125662139);
    CHECK(g_mod(SequenceParams(27, -19), u64{1'000'000'000'000'000'000}, 613744046) == 516666849);
    CHECK(g_mod(SequenceParams(-21, -28), u64{1'000'000'000'000'000'000}, 795428080) == 186447515);
    CHECK(g_mod(SequenceParams(-7, -34), u64{1'000'000'000'000'000'000}, 784280299) == 78649747);
    CHECK(ab_mod(SequenceParams(3, 9), "6", 7) == ABResidue{2, 6});
    CHECK(ab_mod(SequenceParams(2, 5), "20", 9) == ABResidue{1, 4});
}

TEST_CASE("modulus one and input errors") {
    CHECK(g_mod(SequenceParams(3, 4), u64{12345}, 1) == 0);
    CHECK_THROWS_AS(g_mod(SequenceParams(1, 1), u64{5}, 0), DomainError);
    CHECK_THROWS_AS(parse_index(""), InputError);
    CHECK_THROWS_AS(parse_index("-3"), InputError);
    CHECK_THROWS_AS(parse_index("12a"), InputError);
    CHECK(parse_index("000123") == 123);
}

TEST_CASE("g_mod reduces the exact term") {
    for (std::int64_t p = -8; p <= 8; ++p) {
        for (std::int64_t q = -8; q <= 8; ++q) {
            const SequenceParams params(p, q);
            const auto g = g_range(params, 70);
            for (u64 m : {u64{1}, u64{2}, u64{7}, u64{12}, u64{1'000'000'007}, u64{18446744073709551557ULL}}) {
                for (u64 n = 0; n <= 70; ++n) {
                    mpz_class expected = g[n] % mpz_class(std::to_string(m));
                    if (expected < 0) expected += mpz_class(std::to_string(m));
                    CHECK(mpz_class(std::to_string(g_mod(params, n, m))) == expected);
                }
            }
            const mpz_class big_m("340282366920938463463374607431768211507");
            for (u64 n = 0; n <= 70; n += 7) {
                mpz_class expected = g[n] % big_m;
                if (expected < 0) expected += big_m;
                CHECK(g_mod(params, mpz_class(static_cast<unsigned long>(n)), big_m) == expected);
            }
        }
    }
}

TEST_CASE("ab_mod reduces the exact companions") {
    for (std::int64_t p = -6; p <= 6; ++p) {
        for (std::int64_t q = -6; q <= 6; ++q) {
            const SequenceParams params(p, q);
            const auto ab = ab_range(params, 30);
            for (u64 m : {u64{1}, u64{9}, u64{1'000'003}}) {
                const mpz_class mz(static_cast<unsigned long>(m));
                for (u64 n = 0; n <= 30; ++n) {
                    mpz_class a = ab[n].a % mz;
                    mpz_class b = ab[n].b % mz;
                    if (a < 0) a += mz;
                    if (b < 0) b += mz;
                    const auto got = ab_mod(params, std::to_string(n), m);
                    CHECK(got.a == a.get_ui());
                    CHECK(got.b == b.get_ui());
                }
            }
        }
    }
}

TEST_CASE("random large indices agree with the matrix-power oracle") {
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 500; ++i) {
        const auto p = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const auto q = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const u64 m = 1 + rng() % (i % 2 ? 1'000'000'000ULL : ~0ULL);
        const u64 n = rng() % 1'000'000'000'000'000'001ULL;
        CHECK(g_mod(SequenceParams(p, q), n, m) == oracle::matrix_g_mod(p, q, n, m));
    }
}

TEST_CASE("addition formula G_{a+b} = G_a G_{b+1} + q G_{a-1} G_b mod m") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const auto p = static_cast<std::int64_t>(rng() % 41) - 20;
        const auto q = static_cast<std::int64_t>(rng() % 41) - 20;
        const u64 m = 2 + rng() % 1'000'000'000;
        const u64 a = 1 + rng() % 1'000'000'000'000ULL;
        const u64 b = 1 + rng() % 1'000'000'000'000ULL;
        const SequenceParams params(p, q);
        const u128 lhs = g_mod(params, a + b, m);
        const u128 t1 = static_cast<u128>(g_mod(params, a, m)) * g_mod(params, b + 1, m) % m;
        const u128 t2 = static_cast<u128>(reduce(q, m)) * g_mod(params, a - 1, m) % m * g_mod(params, b, m) % m;
        CHECK(lhs == (t1 + t2) % m);
    }
}

TEST_CASE("index beyond 64 bits") {
    const SequenceParams params(1, 1);
    const mpz_class period("60");  // Pisano period of 10
    const mpz_class huge("123456789012345678901234567890123456789");
    const mpz_class reduced = huge % period;
    CHECK(g_mod(params, huge, 10) == g_mod(params, reduced.get_ui(), 10));
}

TEST_CASE("parallel batch equals the serial reference") {
    std::mt19937_64 rng(5);
    std::vector<ModQuery> queries(4000);
    for (auto& query : queries) {
        query.p = static_cast<std::int64_t>(rng() % 200) - 100;
        query.q = static_cast<std::int64_t>(rng() % 200) - 100;
        query.n = rng() % 1'000'000'000'000'000'000ULL;
        query.m = 1 + rng() % 1'000'000'000ULL;
    }
    std::vector<u64> serial(queries.size());
    g_mod_batch_serial(queries, serial);
    for (int workers : {1, 2, 8}) {
        std::vector<u64> parallel(queries.size());
        g_mod_batch(queries, parallel, workers);
        CHECK(parallel == serial);
    }
}
