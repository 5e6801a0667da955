#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <staircase/multipoly.hpp>
#include <staircase/series.hpp>

namespace staircase
{

// A structural check on an extracted numerator failed. This indicates a bug
// in the counting code, never an expected outcome.
class NumeratorCheckError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Multivariate extraction for r > 4 requested without opting in.
class CostGuardError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// prod_{i=1}^{r} (1 - t^{T_i}) mod t^{N+1}; every i with T_i <= N when r is empty.
UniSeries staircase_denominator(std::optional<std::size_t> r, std::size_t order);

// PS_r(t) = 1 / staircase_denominator(r), or PS(t) when r is empty.
UniSeries ps_series(std::optional<std::size_t> r, std::size_t order);

// PC_r(t), or PC(t) when r is empty, from exact concave-partition counts.
UniSeries pc_series(std::optional<std::size_t> r, std::size_t order);

// PC(t) * staircase_denominator(empty) mod t^{N+1}.
UniSeries pc_numerator(std::size_t order);

// r(r+1)(r+2)/6 = sum_{i<=r} T_i, the degree of the r-th denominator.
std::size_t denominator_degree(std::size_t r) noexcept;

// Margin of extra checked coefficients past the degree bound.
inline constexpr std::size_t numerator_check_margin = 10;

// Q_r(t) = PC_r(t) * prod (1 - t^{T_i}). Verifies that every coefficient from
// the degree bound up to bound + margin vanishes and that Q_r(1) = 1; throws
// NumeratorCheckError otherwise. Requires r >= 1.
UniSeries extract_qr(std::size_t r);

// Q_r(x_1..x_r), truncated by total degree at bound + margin. Verifies
// vanishing past the degree bound, Q_r(1..1) = 1, weakly decreasing exponent
// vectors and Q_r(x_1..x_{r-1}, 0) = Q_{r-1}. r > 4 throws CostGuardError
// unless `expensive` is set.
MultiPoly extract_qr_multivariate(std::size_t r, bool expensive = false);

// prod_{j=1}^{i} x_j^{1+i-j} in r variables.
MultiPoly staircase_monomial(std::size_t i, std::size_t r);

struct AsymptoticConstants {
    double C = 0; // 2^{-1/3} (zeta(3/2) Gamma(3/2))^{2/3}
    double c = 0; // sqrt(3)/12 (C/pi)^{3/2}
};

// zeta(3/2) by direct summation with a midpoint-corrected integral tail.
double zeta_three_halves();

const AsymptoticConstants &asymptotic_constants();

// c n^{-3/2} exp(3 C n^{1/3}); requires n >= 1.
double asymptotic_estimate(std::size_t n);

} // namespace staircase
