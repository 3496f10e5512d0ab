#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace gfib {

/// Exponent of the largest power of s dividing m; infinite exactly when m = 0.
class Valuation {
public:
    static Valuation finite(std::uint64_t k) { return Valuation(k); }
    static Valuation infinite() { return Valuation(); }

    bool is_infinite() const { return !k_.has_value(); }
    bool is_finite() const { return k_.has_value(); }
    /// Precondition: is_finite().
    std::uint64_t exponent() const { return *k_; }

    bool operator==(const Valuation&) const = default;

private:
    Valuation() = default;
    explicit Valuation(std::uint64_t k) : k_(k) {}
    std::optional<std::uint64_t> k_;
};

// a | b in the usual sense over Z: exists k with b = k*a. Note 0 | 0.
bool divides(const mpz_class& a, const mpz_class& b);
bool divides(std::int64_t a, std::int64_t b);

/// Nonnegative gcd. Throws DomainError for (0, 0).
mpz_class gcd(const mpz_class& a, const mpz_class& b);
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Throws DomainError for s < 2.
Valuation valuation(const mpz_class& m, const mpz_class& s);

/// Sorted positive divisors of |m| by trial division. Throws DomainError for m = 0.
std::vector<std::int64_t> positive_divisors(std::int64_t m);

/// Deterministic over the whole 64-bit range (Miller-Rabin, prime bases up to 37).
bool is_prime(std::uint64_t n);

/// Primality of an arbitrary integer; negative values and 0, 1 are not prime.
/// Values beyond 64 bits use GMP's probabilistic test with 40 rounds.
bool is_prime(const mpz_class& n);

/// Exact C(n, k); 0 when k > n.
mpz_class binomial(std::uint64_t n, std::uint64_t k);

}  // namespace gfib
