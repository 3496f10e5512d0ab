#include "gfib/identities.hpp"

#include <algorithm>
#include <functional>

#include "gfib/errors.hpp"
#include "gfib/number_theory.hpp"

namespace gfib {

namespace {

/// x + y sqrt(r)
struct QuadInt {
    mpz_class x;
    mpz_class y;
};

QuadInt multiply(const QuadInt& a, const QuadInt& b, const mpz_class& r) {
    return {a.x * b.x + a.y * b.y * r, a.x * b.y + a.y * b.x};
}

QuadInt power(const QuadInt& base, std::uint64_t e, const mpz_class& r) {
    QuadInt out{1, 0};
    for (std::uint64_t i = 0; i < e; ++i) out = multiply(out, base, r);
    return out;
}

mpz_class pow_mpz(const mpz_class& base, std::uint64_t e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// sum over j = first, first+2, ... <= n of C(n, j) a^(n-j) b^((j - first)/2)
mpz_class binomial_series(std::uint64_t n, std::uint64_t first, const mpz_class& a, const mpz_class& b) {
    mpz_class sum = 0;
    for (std::uint64_t j = first; j <= n; j += 2) {
        sum += binomial(n, j) * pow_mpz(a, n - j) * pow_mpz(b, (j - first) / 2);
    }
    return sum;
}

class Tally {
public:
    Tally(std::string name, std::string relation) {
        result_.name = std::move(name);
        result_.relation = std::move(relation);
    }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++result_.checked;
        if (ok) return;
        if (result_.failures++ == 0) result_.first_failure = describe();
    }
    void not_applicable() { result_.applicable = false; }
    IdentityResult take() { return std::move(result_); }

private:
    IdentityResult result_;
};

std::string at(std::uint64_t n) { return "n=" + std::to_string(n); }

}  // namespace

bool IdentityReport::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed(); });
}

IdentityReport identity_suite(const SequenceParams& params, std::uint64_t n_max, std::span<const std::int64_t> s_list) {
    if (n_max < 1) throw InputError("identity suite needs n_max >= 1");
    for (std::int64_t s : s_list) {
        if (s < 1) throw InputError("identity suite needs s >= 1");
    }
    const std::int64_t s_max = s_list.empty() ? 1 : *std::max_element(s_list.begin(), s_list.end());
    const std::uint64_t top = std::max<std::uint64_t>(n_max * static_cast<std::uint64_t>(s_max), 8 * n_max);

    const mpz_class p(static_cast<long>(params.p()));
    const mpz_class q(static_cast<long>(params.q()));
    const mpz_class& r = params.r();
    const auto g = g_range(params, top);
    const auto ab = ab_range(params, top);
    const bool p_even = params.p() % 2 == 0;

    IdentityReport report;
    report.p = params.p();
    report.q = params.q();
    report.n_max = n_max;
    report.s_list.assign(s_list.begin(), s_list.end());

    Tally binet("binet", "B_n = 2^(n-1) G_n");
    Tally conjugate("conjugate-pair", "(p + sqrt r)^n = A_n + B_n sqrt r and (p - sqrt r)^n = A_n - B_n sqrt r");
    Tally power_identity("power", "(A_n + B_n sqrt r)^s = A_sn + B_sn sqrt r");
    Tally bsn("bsn-expansion", "B_sn = sum_{j odd} C(s,j) A_n^(s-j) B_n^j r^((j-1)/2)");
    Tally bn("bn-expansion", "B_n = sum_{j odd} C(n,j) p^(n-j) r^((j-1)/2)");
    Tally gn("gn-expansion", "G_n = sum_{j odd} C(n,j) (p/2)^(n-j) (r/4)^((j-1)/2), p even");
    Tally an_half("an-halved-expansion", "A_n / 2^n = sum_{j even} C(n,j) (p/2)^(n-j) (r/4)^(j/2), p even");
    Tally an_square("an-square", "A_n^2 = 4^(n-1) r G_n^2 + (-4q)^n");
    Tally divisibility("divisibility-sequence", "G_n | G_kn for k <= 8");

    const QuadInt root_plus{p, 1};
    const QuadInt root_minus{p, -1};
    QuadInt plus_pow{1, 0};
    QuadInt minus_pow{1, 0};
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const auto& [idx, a_n, b_n] = ab[n];
        (void)idx;
        if (n >= 1) {
            binet.check(b_n == pow_mpz(2, n - 1) * g[n], [&] { return at(n); });
            an_square.check(a_n * a_n == pow_mpz(4, n - 1) * r * g[n] * g[n] + pow_mpz(-4 * q, n),
                            [&] { return at(n); });
            bn.check(b_n == binomial_series(n, 1, p, r), [&] { return at(n); });
        }
        conjugate.check(plus_pow.x == a_n && plus_pow.y == b_n && minus_pow.x == a_n && minus_pow.y == -b_n,
                        [&] { return at(n); });
        plus_pow = multiply(plus_pow, root_plus, r);
        minus_pow = multiply(minus_pow, root_minus, r);

        for (std::int64_t s_signed : s_list) {
            const auto s = static_cast<std::uint64_t>(s_signed);
            const auto& target = ab[s * n];
            const QuadInt raised = power({a_n, b_n}, s, r);
            power_identity.check(raised.x == target.a && raised.y == target.b,
                                 [&] { return at(n) + " s=" + std::to_string(s); });
            bsn.check(target.b == binomial_series(s, 1, a_n, b_n * b_n * r) * b_n,
                      [&] { return at(n) + " s=" + std::to_string(s); });
        }

        if (p_even) {
            const mpz_class half_p = p / 2;
            const mpz_class quarter_r = r / 4;
            if (n >= 1) gn.check(g[n] == binomial_series(n, 1, half_p, quarter_r), [&] { return at(n); });
            const mpz_class two_n = pow_mpz(2, n);
            const bool integral = divides(two_n, a_n);
            an_half.check(integral && mpz_class(a_n / two_n) == binomial_series(n, 0, half_p, quarter_r),
                          [&] { return at(n) + (integral ? "" : " (2^n does not divide A_n)"); });
        }

        if (n >= 1) {
            for (std::uint64_t k = 1; k <= 8; ++k) {
                divisibility.check(divides(g[n], g[k * n]), [&] { return at(n) + " k=" + std::to_string(k); });
            }
        }
    }
    if (!p_even) {
        gn.not_applicable();
        an_half.not_applicable();
    }

    for (Tally* tally : {&binet, &conjugate, &power_identity, &bsn, &bn, &gn, &an_half, &an_square, &divisibility}) {
        report.results.push_back(tally->take());
    }
    return report;
}

}  // namespace gfib
