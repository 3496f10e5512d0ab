#include <doctest.h>

#include <random>

#include "gfib/errors.hpp"
#include "gfib/number_theory.hpp"

using namespace gfib;

TEST_CASE("divides follows the integer definition") {
    CHECK(divides(0, 0));
    CHECK(divides(3, 0));
    CHECK_FALSE(divides(0, 3));
    CHECK(divides(-4, 12));
    CHECK(divides(4, -12));
    CHECK_FALSE(divides(5, 12));
    CHECK(divides(mpz_class("123456789012345678901234567890"), mpz_class("246913578024691357802469135780")));
}

TEST_CASE("gcd is nonnegative and rejects (0, 0)") {
    CHECK(gcd(std::int64_t{-12}, std::int64_t{18}) == 6);
    CHECK(gcd(std::int64_t{0}, std::int64_t{-7}) == 7);
    CHECK(gcd(mpz_class(-15), mpz_class(-25)) == 5);
    CHECK_THROWS_AS(gcd(std::int64_t{0}, std::int64_t{0}), DomainError);
    CHECK_THROWS_AS(gcd(mpz_class(0), mpz_class(0)), DomainError);
}

TEST_CASE("valuation") {
    CHECK(valuation(mpz_class(416020), mpz_class(20)) == Valuation::finite(1));
    CHECK(valuation(mpz_class(0), mpz_class(3)).is_infinite());
    CHECK(valuation(mpz_class(-72), mpz_class(2)) == Valuation::finite(3));
    CHECK(valuation(mpz_class(7), mpz_class(2)) == Valuation::finite(0));
    CHECK_THROWS_AS(valuation(mpz_class(8), mpz_class(1)), DomainError);
}

TEST_CASE("valuation matches repeated division") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t s = 2 + static_cast<std::int64_t>(rng() % 30);
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 1'000'000);
        std::uint64_t k = 0;
        std::int64_t rest = m;
        while (rest % s == 0) {
            rest /= s;
            ++k;
        }
        CHECK(valuation(mpz_class(static_cast<long>(m)), mpz_class(static_cast<long>(s))).exponent() == k);
    }
}

TEST_CASE("positive divisors") {
    CHECK(positive_divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(positive_divisors(-45) == std::vector<std::int64_t>{1, 3, 5, 9, 15, 45});
    CHECK(positive_divisors(1) == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(positive_divisors(0), DomainError);
    for (std::int64_t m = 1; m <= 500; ++m) {
        std::vector<std::int64_t> naive;
        for (std::int64_t d = 1; d <= m; ++d) {
            if (m % d == 0) naive.push_back(d);
        }
        CHECK(positive_divisors(m) == naive);
    }
}

TEST_CASE("primality") {
    std::vector<bool> sieve(5000, true);
    sieve[0] = sieve[1] = false;
    for (std::size_t i = 2; i < sieve.size(); ++i) {
        if (!sieve[i]) continue;
        for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
    }
    for (std::uint64_t n = 0; n < sieve.size(); ++n) CHECK(is_prime(n) == sieve[n]);
    CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
    CHECK_FALSE(is_prime(std::uint64_t{3215031751ULL}));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(mpz_class(-7)));
    CHECK(is_prime(mpz_class("170141183460469231731687303715884105727")));
    CHECK_FALSE(is_prime(mpz_class("170141183460469231731687303715884105729")));
}

TEST_CASE("binomial") {
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(0, 0) == 1);
    for (std::uint64_t n = 1; n <= 40; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}
