#include <staircase/genfun.hpp>

#include <cmath>
#include <numbers>

#include <staircase/enumerate.hpp>
#include <staircase/partition.hpp>
#include <staircase/superconcave.hpp>

namespace staircase
{

UniSeries staircase_denominator(std::optional<std::size_t> r, std::size_t order)
{
    auto d = UniSeries::one(order);
    for (std::size_t i = 1; !r || i <= *r; ++i) {
        const auto t = static_cast<std::size_t>(triangular(static_cast<Part>(i)));
        if (t > order) {
            break;
        }
        d = d * UniSeries::one_minus_power(t, order);
    }
    return d;
}

UniSeries ps_series(std::optional<std::size_t> r, std::size_t order)
{
    auto s = UniSeries::one(order);
    // Divide factor by factor; each divisor is a sparse binomial.
    for (std::size_t i = 1; !r || i <= *r; ++i) {
        const auto t = static_cast<std::size_t>(triangular(static_cast<Part>(i)));
        if (t > order) {
            break;
        }
        s = s / UniSeries::one_minus_power(t, order);
    }
    return s;
}

UniSeries pc_series(std::optional<std::size_t> r, std::size_t order)
{
    return UniSeries(concave_counts(order, r), order);
}

UniSeries pc_numerator(std::size_t order)
{
    return pc_series(std::nullopt, order) * staircase_denominator(std::nullopt, order);
}

std::size_t denominator_degree(std::size_t r) noexcept
{
    return r * (r + 1) * (r + 2) / 6;
}

UniSeries extract_qr(std::size_t r)
{
    if (r < 1) {
        throw std::invalid_argument("extract_qr requires r >= 1");
    }
    const auto bound = denominator_degree(r);
    const auto order = bound + numerator_check_margin;
    const auto q = pc_series(r, order) * staircase_denominator(r, order);
    for (std::size_t k = bound; k <= order; ++k) {
        if (!q.coefficient(k).is_zero()) {
            throw NumeratorCheckError("Q_" + std::to_string(r) + "(t) has a nonzero coefficient at t^"
                                      + std::to_string(k) + ", past the degree bound "
                                      + std::to_string(bound));
        }
    }
    if (q.value_at_one() != 1) {
        throw NumeratorCheckError("Q_" + std::to_string(r) + "(1) = " + q.value_at_one().str() + ", expected 1");
    }
    return UniSeries(q.coefficients(), bound == 0 ? 0 : bound - 1);
}

MultiPoly staircase_monomial(std::size_t i, std::size_t r)
{
    Exponents e(r, 0);
    for (std::size_t j = 1; j <= i && j <= r; ++j) {
        e[j - 1] = static_cast<std::uint32_t>(1 + i - j);
    }
    return MultiPoly::monomial(e);
}

namespace
{

MultiPoly numerator_multivariate(std::size_t r)
{
    const auto bound = denominator_degree(r);
    const auto max_degree = bound + numerator_check_margin;
    MultiPoly pc(r);
    for_each_concave(max_degree, r, [&pc, r](const Partition &lambda) {
        Exponents e(r, 0);
        for (std::size_t k = 1; k <= lambda.num_parts(); ++k) {
            e[k - 1] = static_cast<std::uint32_t>(lambda.part(k));
        }
        pc.add_term(e, 1);
    });
    const auto one = MultiPoly::constant(r, 1);
    for (std::size_t i = 1; i <= r; ++i) {
        pc = multiply_truncated(pc, one - staircase_monomial(i, r), max_degree);
    }
    const auto kept = pc.truncated_below(bound);
    if (!(pc - kept).is_zero()) {
        throw NumeratorCheckError("Q_" + std::to_string(r) + "(x) has terms of total degree >= "
                                  + std::to_string(bound) + ": " + (pc - kept).to_string());
    }
    if (kept.value_at_ones() != 1) {
        throw NumeratorCheckError("Q_" + std::to_string(r) + "(1,...,1) = " + kept.value_at_ones().str());
    }
    if (!kept.exponents_weakly_decreasing()) {
        throw NumeratorCheckError("Q_" + std::to_string(r) + "(x) has a non-decreasing exponent vector");
    }
    return kept;
}

} // namespace

MultiPoly extract_qr_multivariate(std::size_t r, bool expensive)
{
    if (r < 1) {
        throw std::invalid_argument("extract_qr_multivariate requires r >= 1");
    }
    if (r > 4 && !expensive) {
        throw CostGuardError("multivariate Q_r for r > 4 needs the expensive flag");
    }
    auto previous = MultiPoly::constant(0, 1);
    MultiPoly q;
    for (std::size_t s = 1; s <= r; ++s) {
        q = numerator_multivariate(s);
        if (q.drop_last_variable() != previous) {
            throw NumeratorCheckError("Q_" + std::to_string(s) + " does not restrict to Q_" + std::to_string(s - 1));
        }
        previous = q;
    }
    return q;
}

double zeta_three_halves()
{
    // sum_{k>K} k^{-3/2} = 2/sqrt(K+1/2) + f'(K+1/2)/24 + O(K^{-9/2}), f(x) = x^{-3/2}.
    constexpr long K = 20000;
    long double sum = 0;
    for (long k = K; k >= 1; --k) {
        sum += 1.0L / (static_cast<long double>(k) * std::sqrt(static_cast<long double>(k)));
    }
    const long double x = K + 0.5L;
    const long double tail = 2.0L / std::sqrt(x) - 1.5L / (24.0L * x * x * std::sqrt(x));
    return static_cast<double>(sum + tail);
}

const AsymptoticConstants &asymptotic_constants()
{
    static const AsymptoticConstants constants = [] {
        const long double gamma_three_halves = std::sqrt(std::numbers::pi_v<long double>) / 2;
        const long double zg = zeta_three_halves() * gamma_three_halves;
        AsymptoticConstants k;
        const long double C = std::pow(2.0L, -1.0L / 3) * std::pow(zg, 2.0L / 3);
        k.C = static_cast<double>(C);
        k.c = static_cast<double>(std::sqrt(3.0L) / 12 * std::pow(C / std::numbers::pi_v<long double>, 1.5L));
        return k;
    }();
    return constants;
}

double asymptotic_estimate(std::size_t n)
{
    if (n < 1) {
        throw std::invalid_argument("asymptotic_estimate requires n >= 1");
    }
    const auto &k = asymptotic_constants();
    const double x = static_cast<double>(n);
    return k.c * std::pow(x, -1.5) * std::exp(3 * k.C * std::cbrt(x));
}

} // namespace staircase
