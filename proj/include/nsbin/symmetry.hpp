#pragma once

/**
 * @file symmetry.hpp
 * @brief Reflection A -> {a_z - a}: the transfer matrices satisfy
 * m_{alpha,beta} = m'_{a_z-alpha, a_z-beta}, i.e. M_A = S M_{A~} S with S the
 * anti-diagonal reversal, so both share one characteristic polynomial.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "nsbin/asymptotics.hpp"
#include "nsbin/digit_set.hpp"
#include "nsbin/errors.hpp"
#include "nsbin/recurrence_matrix.hpp"

namespace nsbin {

using ReversalMatrix = SquareMatrix<int>;

inline ReversalMatrix reversal_matrix(int dim)
{
    if (dim < 1)
        throw Error(ErrorKind::InvalidArgument, "reversal matrix needs dim >= 1");
    ReversalMatrix s(dim);
    for (int i = 0; i < dim; ++i)
        s(i, dim - 1 - i) = 1;
    return s;
}

struct ReflectionReport {
    DigitSet set;
    DigitSet reflected;
    bool entry_law = true;
    bool similarity = true;
    bool charpoly_equal = true;
    /// First (alpha, beta) where the entry law fails.
    std::optional<std::pair<int, int>> counterexample;

    bool passed() const noexcept { return entry_law && similarity && charpoly_equal; }
};

inline ReflectionReport verify_reflection(const DigitSet& alphabet)
{
    ReflectionReport report{alphabet, reflect(alphabet)};
    const TransferMatrix forward = build_matrix(report.set);
    const TransferMatrix backward = build_matrix(report.reflected);
    const int top = alphabet.max_digit();

    for (int alpha = 0; alpha <= top && report.entry_law; ++alpha) {
        for (int beta = 0; beta <= top; ++beta) {
            if (forward(alpha, beta) != backward(top - alpha, top - beta)) {
                report.entry_law = false;
                report.counterexample = std::pair{alpha, beta};
                break;
            }
        }
    }
    const ReversalMatrix s = reversal_matrix(top + 1);
    report.similarity = (s * backward * s) == forward;
    report.charpoly_equal = char_poly(forward) == char_poly(backward);
    return report;
}

struct GrowthPair {
    DigitSet set;
    DigitSet reflected;
    Rational coefficient;
    Rational reflected_coefficient;
    int r = 0;
    /// |A|^r g_A(|A|) and |A|^r g_{A~}(|A|) at the common r.
    BigInt denominator;
    BigInt reflected_denominator;
    bool charpoly_equal = false;
};

inline GrowthPair compare_growth_pair(const DigitSet& alphabet, std::int64_t m,
                                      const GrowthOptions& options = {})
{
    const DigitSet reflected = reflect(alphabet);
    if (!alphabet.has_odd())
        throw Error(ErrorKind::OddElementRequired,
                    "set {" + alphabet.to_string() + "} has no odd element");
    if (!reflected.has_odd())
        throw Error(ErrorKind::OddElementRequired,
                    "reflected set {" + reflected.to_string() + "} has no odd element");

    const GrowthReport forward = growth_coefficient(alphabet, m, options);
    const GrowthReport backward = growth_coefficient(reflected, m, options);
    const IntPolynomial g = char_poly(build_matrix(alphabet));
    const IntPolynomial g_reflected = char_poly(build_matrix(reflected));

    GrowthPair pair{alphabet, reflected, forward.coefficient, backward.coefficient};
    pair.r = forward.r_used;
    const BigInt scale = pow_big(alphabet.size(), static_cast<unsigned>(pair.r));
    pair.denominator = scale * g(alphabet.size());
    pair.reflected_denominator = scale * g_reflected(reflected.size());
    pair.charpoly_equal = g == g_reflected;
    return pair;
}

} // namespace nsbin
