#pragma once

/**
 * @file asymptotics.hpp
 * @brief Exact growth coefficient c(A, m) = lim s_A(r, m) / |A|^r.
 *
 * With g(x) = det(M_A - x I) = sum_k alpha_k x^k, Cayley-Hamilton kills every
 * non-dominant part of s_A(r, m), leaving
 *
 *     sum_k alpha_k s_A(r + k, m) = c |A|^r g(|A|).
 *
 * g(|A|) != 0 whenever A mixes parities (row-sum bound), so c is the exact
 * rational quotient. Candidates are evaluated at consecutive r and accepted
 * once three agree exactly.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nsbin/counting.hpp"
#include "nsbin/digit_set.hpp"
#include "nsbin/errors.hpp"
#include "nsbin/exact.hpp"
#include "nsbin/recurrence_matrix.hpp"

namespace nsbin {

inline constexpr int kDefaultRMax = 40;
inline constexpr unsigned kDefaultDecimalPlaces = 3;

struct GrowthOptions {
    int r_max = kDefaultRMax;
    std::int64_t summation_budget = kDefaultSummationBudget;
    unsigned decimal_places = kDefaultDecimalPlaces;
};

struct GrowthReport {
    DigitSet alphabet;
    std::int64_t multiplier = 1;
    Rational coefficient;
    std::string decimal;
    int r_used = 0;
    std::vector<std::pair<int, Rational>> stability_window;
};

namespace detail {

inline void require_odd(const DigitSet& alphabet)
{
    if (!alphabet.has_odd())
        throw Error(ErrorKind::OddElementRequired,
                    "growth coefficient undefined: no odd element in {" + alphabet.to_string() + "}");
}

inline void require_multiplier(std::int64_t m)
{
    if (m < 1)
        throw Error(ErrorKind::InvalidArgument, "multiplier m must be >= 1");
}

/// Sum over d in {b_2..b_s, c_1..c_t} of sum_{j=1}^{d} (prev[j] - next[j]).
inline BigInt h_from_windows(const std::vector<int>& shifts, const std::vector<BigInt>& prev,
                             const std::vector<BigInt>& next)
{
    BigInt total = 0;
    for (int shift : shifts)
        for (int j = 1; j <= shift; ++j)
            total += prev[j] - next[j];
    return total;
}

} // namespace detail

/**
 * s_A(0..r_last, m). Only s_A(0, m) is summed directly; later blocks follow
 * s(r) = |A| s(r-1) + h(r), with the windows that make up h(r) advanced by
 * the transfer matrix.
 */
inline std::vector<BigInt> summatory_series(const DigitSet& alphabet, std::int64_t m, int r_last,
                                            std::int64_t budget = kDefaultSummationBudget)
{
    detail::require_multiplier(m);
    if (r_last < 0)
        throw Error(ErrorKind::InvalidArgument, "r must be >= 0");

    CountingContext ctx(alphabet);
    const TransferMatrix transfer = build_matrix(alphabet);
    const auto shifts = remainder_shifts(alphabet);

    std::vector<BigInt> series;
    series.reserve(r_last + 1);
    series.push_back(summatory(ctx, 0, m, budget));
    std::vector<BigInt> window = omega(ctx, 0, m).entries;
    for (int r = 1; r <= r_last; ++r) {
        std::vector<BigInt> next = step(transfer, window);
        series.push_back(alphabet.size() * series.back() + detail::h_from_windows(shifts, window, next));
        window = std::move(next);
    }
    return series;
}

/// Smallest admissible starting block: max(1, min{r : 2^r m >= a_z + 1}).
inline int stability_start(const DigitSet& alphabet, std::int64_t m)
{
    detail::require_multiplier(m);
    int r = 0;
    while ((m << r) < alphabet.max_digit() + 1)
        ++r;
    return std::max(1, r);
}

/// sum_k alpha_k s_A(r + k, m).
inline BigInt annihilated_sum(const DigitSet& alphabet, int r, std::int64_t m,
                              std::int64_t budget = kDefaultSummationBudget)
{
    if (r < 0)
        throw Error(ErrorKind::InvalidArgument, "r must be >= 0");
    const IntPolynomial g = char_poly(build_matrix(alphabet));
    const auto series = summatory_series(alphabet, m, r + g.degree(), budget);
    BigInt total = 0;
    for (int k = 0; k <= g.degree(); ++k)
        total += g.coefficient(k) * series[r + k];
    return total;
}

/// c_r = sum_k alpha_k s_A(r + k, m) / (|A|^r g(|A|)) for r in [r_first, r_last].
inline std::vector<std::pair<int, Rational>>
candidate_coefficients(const DigitSet& alphabet, std::int64_t m, int r_first, int r_last,
                       std::int64_t budget = kDefaultSummationBudget)
{
    detail::require_odd(alphabet);
    if (r_first < 0 || r_last < r_first)
        throw Error(ErrorKind::InvalidArgument, "invalid r range");

    const IntPolynomial g = char_poly(build_matrix(alphabet));
    const BigInt size = alphabet.size();
    const BigInt denominator = g(size);
    if (denominator == 0)
        throw Error(ErrorKind::StabilityFailure,
                    "g(|A|) vanishes for {" + alphabet.to_string() + "}");

    const auto series = summatory_series(alphabet, m, r_last + g.degree(), budget);
    std::vector<std::pair<int, Rational>> out;
    for (int r = r_first; r <= r_last; ++r) {
        BigInt numerator = 0;
        for (int k = 0; k <= g.degree(); ++k)
            numerator += g.coefficient(k) * series[r + k];
        out.emplace_back(r, make_rational(numerator, pow_big(alphabet.size(), r) * denominator));
    }
    return out;
}

inline GrowthReport growth_coefficient(const DigitSet& alphabet, std::int64_t m,
                                       const GrowthOptions& options = {})
{
    detail::require_odd(alphabet);
    detail::require_multiplier(m);

    const int r0 = stability_start(alphabet, m);
    if (r0 + 2 > options.r_max)
        throw Error(ErrorKind::StabilityFailure,
                    "r_max " + std::to_string(options.r_max) + " leaves no room past r0 = " +
                        std::to_string(r0));
    const auto candidates =
        candidate_coefficients(alphabet, m, r0, options.r_max, options.summation_budget);

    for (std::size_t i = 0; i + 2 < candidates.size(); ++i) {
        if (candidates[i].second == candidates[i + 1].second &&
            candidates[i + 1].second == candidates[i + 2].second) {
            GrowthReport report{alphabet, m, candidates[i].second, {}, candidates[i].first, {}};
            report.decimal = to_decimal_string(report.coefficient, options.decimal_places);
            report.stability_window.assign(candidates.begin() + i, candidates.begin() + i + 3);
            return report;
        }
    }
    throw Error(ErrorKind::StabilityFailure,
                "no three consecutive candidates agree for {" + alphabet.to_string() + "} up to r = " +
                    std::to_string(options.r_max));
}

/// Exact s_A(r, m) / |A|^r for 0 <= r <= r_max.
inline std::vector<std::pair<int, Rational>> ratio_trace(const DigitSet& alphabet, std::int64_t m,
                                                         int r_max,
                                                         std::int64_t budget = kDefaultSummationBudget)
{
    detail::require_odd(alphabet);
    const auto series = summatory_series(alphabet, m, r_max, budget);
    std::vector<std::pair<int, Rational>> out;
    out.reserve(series.size());
    for (int r = 0; r <= r_max; ++r)
        out.emplace_back(r, Rational(series[r], pow_big(alphabet.size(), r)));
    return out;
}

struct GrowthBounds {
    Rational lower;
    Rational upper;
    int k = 0;
};

/// For A = {0, 1, t} with 2^k < t <= 2^{k+1}: (2/3)^{k+2} <= c(A, 1) <= 2^{k+1} / 3^k.
inline GrowthBounds bounds_01t(std::int64_t t)
{
    if (t < 2)
        throw Error(ErrorKind::InvalidT, "bounds require t >= 2, got " + std::to_string(t));
    int k = 0;
    while ((std::int64_t{2} << k) < t)
        ++k;
    GrowthBounds b;
    b.k = k;
    b.lower = Rational(pow_big(2, k + 2), pow_big(3, k + 2));
    b.upper = Rational(pow_big(2, k + 1), pow_big(3, k));
    return b;
}

} // namespace nsbin
