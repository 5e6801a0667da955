#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/zeta.hpp>

#include <staircase/closure.hpp>
#include <staircase/enumerate.hpp>
#include <staircase/genfun.hpp>
#include <staircase/superconcave.hpp>

#include "oracles.hpp"

using namespace staircase;

namespace
{

std::vector<BigInt> big(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

std::vector<BigInt> prefix(const UniSeries &s)
{
    return s.coefficients();
}

} // namespace

TEST_CASE("ps_series")
{
    CHECK(prefix(ps_series(2, 9)) == big({1, 1, 1, 2, 2, 2, 3, 3, 3, 4}));
    CHECK(prefix(ps_series(0, 5)) == big({1, 0, 0, 0, 0, 0}));
    CHECK(prefix(ps_series(std::nullopt, 6)) == big({1, 1, 1, 2, 2, 2, 4}));
    // 1/((1-t)(1-t^3)): coefficient floor(n/3) + 1
    const auto s = ps_series(2, 300);
    for (std::size_t n = 0; n <= 300; ++n) {
        REQUIRE(s.coefficient(n) == n / 3 + 1);
    }
}

TEST_CASE("ps_series against brute-force filtering, N <= 30")
{
    for (std::optional<std::size_t> r : {std::optional<std::size_t>{}, {1}, {2}, {3}, {4}}) {
        const auto s = ps_series(r, 30);
        for (Part n = 0; n <= 30; ++n) {
            std::size_t brute = 0;
            for (const auto &lambda : oracle::all_partitions(n, r)) {
                brute += is_superconcave(lambda) ? 1 : 0;
            }
            REQUIRE(s.coefficient(static_cast<std::size_t>(n)) == brute);
        }
    }
}

TEST_CASE("pc_series")
{
    CHECK(prefix(pc_series(std::nullopt, 20))
          == big({1, 1, 2, 3, 4, 7, 9, 11, 17, 23, 28, 39, 48, 59, 79, 100, 121, 152, 185, 225, 280}));
    CHECK(prefix(pc_series(1, 5)) == big({1, 1, 1, 1, 1, 1}));
    // (1 + t^2 - t^3) / ((1-t)(1-t^3))
    const auto expected = UniSeries(big({1, 0, 1, -1}), 6) / staircase_denominator(2, 6);
    CHECK(pc_series(2, 6) == expected);
    CHECK(prefix(expected) == big({1, 1, 2, 2, 2, 3, 3}));
}

TEST_CASE("univariate numerators")
{
    CHECK(extract_qr(1).to_string() == "1");
    CHECK(extract_qr(2).to_string() == "1 + t^2 - t^3");
    CHECK(extract_qr(3).to_string() == "1 + t^2 + t^5 - 2*t^6 - t^8 + t^9");
    CHECK(extract_qr(4).to_string()
          == "1 + t^2 + t^4 + t^5 - t^6 - t^7 + 2*t^9 - 2*t^10 - t^11 - 2*t^12 + 2*t^13 - t^14 - t^15 + t^16 "
             "+ t^17 + t^18 - t^19");
    for (std::size_t r = 1; r <= 4; ++r) {
        const auto q = extract_qr(r);
        CHECK(q.value_at_one() == 1);
        CHECK(q.degree() < static_cast<long>(denominator_degree(r)));
        CHECK(denominator_degree(r) * 6 == r * r * r + 3 * r * r + 2 * r);
    }
    CHECK_THROWS_AS(extract_qr(0), std::invalid_argument);
}

TEST_CASE("multivariate numerators")
{
    CHECK(extract_qr_multivariate(1).to_string() == "1");
    const auto q2 = extract_qr_multivariate(2);
    CHECK(q2.to_string() == "1 + x1*x2 - x1^2*x2");

    MultiPoly inner(3);
    inner.add_term({5, 3, 0}, 1);
    inner.add_term({4, 3, 0}, -1);
    inner.add_term({3, 2, 0}, -2);
    inner.add_term({2, 2, 0}, 1);
    inner.add_term({1, 1, 0}, 1);
    MultiPoly q2_lifted(3);
    for (const auto &[e, c] : q2.terms()) {
        q2_lifted.add_term({e[0], e[1], 0}, c);
    }
    const auto expected = q2_lifted + inner * MultiPoly::monomial({0, 0, 1});
    const auto q3 = extract_qr_multivariate(3);
    CHECK(q3 == expected);
    CHECK(q3.drop_last_variable() == q2);

    const auto q4 = extract_qr_multivariate(4);
    CHECK(q4.drop_last_variable() == q3);
    CHECK(q4.value_at_ones() == 1);
    CHECK(q4.exponents_weakly_decreasing());
    // Specializing every x_i to t gives the univariate numerator.
    for (std::size_t r = 1; r <= 4; ++r) {
        const auto diag = extract_qr_multivariate(r).diagonal();
        const auto uni = extract_qr(r);
        for (std::size_t k = 0; k < diag.size(); ++k) {
            CHECK(diag[k] == uni.coefficient(k));
        }
    }
    CHECK_THROWS_AS(extract_qr_multivariate(5), CostGuardError);
    CHECK_THROWS_AS(extract_qr_multivariate(0), std::invalid_argument);
}

TEST_CASE("staircase monomials")
{
    CHECK(staircase_monomial(1, 3).to_string() == "x1");
    CHECK(staircase_monomial(3, 3).to_string() == "x1^3*x2^2*x3");
    CHECK(staircase_monomial(2, 2).to_string() == "x1^2*x2");
}

TEST_CASE("leading numerator of PC(t)")
{
    const auto num = pc_numerator(20);
    CHECK(num.coefficient(0) == 1);
    CHECK(num.coefficient(1) == 0);
    CHECK(num.coefficient(2) == 1);
}

TEST_CASE("asymptotic constants")
{
    // 30-digit reference values: zeta(3/2) = 2.61237534868548834334856756793,
    // C = 1.38902590894125627155755182793, c = 0.0424345979789955108396193251626.
    CHECK(zeta_three_halves() == doctest::Approx(2.61237534868548834).epsilon(1e-13));
    CHECK(zeta_three_halves() == doctest::Approx(boost::math::zeta(1.5L)).epsilon(1e-13));
    const auto &k = asymptotic_constants();
    CHECK(k.C == doctest::Approx(1.38902590894125627).epsilon(1e-10));
    CHECK(k.c == doctest::Approx(0.0424345979789955108).epsilon(1e-10));
    CHECK(std::round(k.C * 1e4) / 1e4 == doctest::Approx(1.3890));
    CHECK(std::round(k.c * 1e5) / 1e5 == doctest::Approx(0.04243));
    CHECK_THROWS_AS(asymptotic_estimate(0), std::invalid_argument);
}

TEST_CASE("asymptotic ratio")
{
    const auto exact = superconcave_counts(100000);
    auto ratio = [&exact](std::size_t n) { return exact[n].convert_to<double>() / asymptotic_estimate(n); };
    CHECK(exact[1] == 1);
    const auto r3 = ratio(1000), r4 = ratio(10000), r5 = ratio(100000);
    CHECK(r5 > 0.5);
    CHECK(r5 < 2.0);
    CHECK(std::abs(r5 - 1) < std::abs(r3 - 1));
    MESSAGE("ratios at 1e3, 1e4, 1e5: " << r3 << ", " << r4 << ", " << r5);
    CHECK(std::abs(r3 - 1) > std::abs(r4 - 1));
    CHECK(std::abs(r4 - 1) > std::abs(r5 - 1));
}
