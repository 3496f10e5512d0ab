#include "gfib/evaluator.hpp"

#include "gfib/modular.hpp"
#include "gfib/number_theory.hpp"

namespace gfib {

namespace {

bool fits_u64(const mpz_class& v) { return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const mpz_class& v) {
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
    return out;
}

mpz_class from_u64(std::uint64_t v) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return out;
}

}  // namespace

TermEvaluator::TermEvaluator(SequenceParams params, EvalMode mode, std::uint64_t exact_limit)
    : params_(std::move(params)), mode_(mode), exact_limit_(exact_limit) {}

void TermEvaluator::extend_table(std::uint64_t n) {
    if (table_.size() > n) return;
    const mpz_class p(static_cast<long>(params_.p()));
    const mpz_class q(static_cast<long>(params_.q()));
    if (table_.empty()) table_.emplace_back(0);
    if (table_.size() == 1) table_.emplace_back(1);
    table_.reserve(n + 1);
    while (table_.size() <= n) {
        const std::size_t i = table_.size();
        table_.emplace_back(p * table_[i - 1] + q * table_[i - 2]);
    }
}

mpz_class TermEvaluator::term(std::uint64_t n) {
    if (n > exact_limit_) return g_exact(params_, n);
    extend_table(n);
    return table_[n];
}

mpz_class TermEvaluator::term_residue(const mpz_class& m, const mpz_class& index) {
    if (mode_ == EvalMode::Exact && fits_u64(index) && to_u64(index) <= exact_limit_) {
        const std::uint64_t n = to_u64(index);
        extend_table(n);
        mpz_class out;
        mpz_fdiv_r(out.get_mpz_t(), table_[n].get_mpz_t(), m.get_mpz_t());
        return out;
    }
    if (mode_ == EvalMode::Modular && fits_u64(m)) {
        return from_u64(g_mod(params_, index, to_u64(m)));
    }
    return g_mod(params_, index, m);
}

bool TermEvaluator::term_divisible(const mpz_class& d, const mpz_class& index) {
    if (sgn(d) == 0) return term_vanishes(params_, index);
    const mpz_class m = abs(d);
    if (m == 1) return true;
    return sgn(term_residue(m, index)) == 0;
}

bool TermEvaluator::term_divisible(const mpz_class& d, std::uint64_t index) {
    return term_divisible(d, from_u64(index));
}

bool TermEvaluator::scaled_term_divisible(const mpz_class& d, std::int64_t alpha, const mpz_class& index) {
    if (alpha == 0) return true;
    if (sgn(d) == 0) return term_vanishes(params_, index);
    const mpz_class m = abs(d);
    const mpz_class scaled = mpz_class(static_cast<long>(alpha)) * term_residue(m, index);
    return divides(m, scaled);
}

}  // namespace gfib
