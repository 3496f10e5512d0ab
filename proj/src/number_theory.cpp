#include "gfib/number_theory.hpp"

#include <algorithm>
#include <cstdlib>

#include "gfib/errors.hpp"

namespace gfib {

bool divides(const mpz_class& a, const mpz_class& b) {
    if (sgn(a) == 0) return sgn(b) == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

bool divides(std::int64_t a, std::int64_t b) {
    if (a == 0) return b == 0;
    // -1 divides everything; avoids INT64_MIN % -1.
    if (a == -1) return true;
    return b % a == 0;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    if (sgn(a) == 0 && sgn(b) == 0) throw DomainError("gcd(0, 0) is undefined");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
    return gcd(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b))).get_si();
}

Valuation valuation(const mpz_class& m, const mpz_class& s) {
    if (s < 2) throw DomainError("valuation base must be >= 2");
    if (sgn(m) == 0) return Valuation::infinite();
    mpz_class rest = m;
    std::uint64_t k = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), s.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), s.get_mpz_t());
        ++k;
    }
    return Valuation::finite(k);
}

std::vector<std::int64_t> positive_divisors(std::int64_t m) {
    if (m == 0) throw DomainError("0 has infinitely many divisors");
    const std::uint64_t n = m < 0 ? 0 - static_cast<std::uint64_t>(m) : static_cast<std::uint64_t>(m);
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(static_cast<std::int64_t>(d));
        if (d != n / d) large.push_back(static_cast<std::int64_t>(n / d));
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

// n odd, n > 2, n - 1 = d * 2^s with d odd.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (std::uint64_t p : kBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    return std::all_of(std::begin(kBases), std::end(kBases),
                       [&](std::uint64_t a) { return strong_probable_prime(n, a, d, s); });
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        std::uint64_t v = 0;
        mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
        return is_prime(v);
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace gfib
