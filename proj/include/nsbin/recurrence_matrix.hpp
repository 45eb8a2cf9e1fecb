#pragma once

/**
 * @file recurrence_matrix.hpp
 * @brief The transfer matrix M_A advancing window vectors,
 * omega_{k+1}(m) = M_A omega_k(m), and its characteristic polynomial
 * g(x) = det(M_A - x I).
 *
 * Entry law: m_{alpha,beta} = 1 iff 2 beta - alpha is a digit.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsbin/counting.hpp"
#include "nsbin/digit_set.hpp"
#include "nsbin/errors.hpp"
#include "nsbin/exact.hpp"
#include "nsbin/matrix.hpp"

namespace nsbin {

using TransferMatrix = SquareMatrix<int>;

inline TransferMatrix build_matrix(const DigitSet& alphabet)
{
    const int dim = alphabet.max_digit() + 1;
    TransferMatrix m(dim);
    for (int alpha = 0; alpha < dim; ++alpha)
        for (int beta = 0; beta < dim; ++beta)
            m(alpha, beta) = alphabet.contains(2 * beta - alpha) ? 1 : 0;
    return m;
}

inline std::vector<BigInt> step(const TransferMatrix& m, const std::vector<BigInt>& v)
{
    if (static_cast<int>(v.size()) != m.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "vector of length " + std::to_string(v.size()) + " against a " +
                        std::to_string(m.dim()) + "x" + std::to_string(m.dim()) + " matrix");
    std::vector<BigInt> out(v.size());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (m(i, j) != 0)
                out[i] += m(i, j) * v[j];
    return out;
}

inline OmegaVector step(const TransferMatrix& m, const OmegaVector& v)
{
    return OmegaVector{v.k + 1, v.m, step(m, v.entries)};
}

/// Integer polynomial, coefficients stored constant term first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients))
    {
        while (coefficients_.size() > 1 && coefficients_.back() == 0)
            coefficients_.pop_back();
    }

    const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    const BigInt& leading() const { return coefficients_.back(); }
    BigInt coefficient(int k) const
    {
        return k >= 0 && k < static_cast<int>(coefficients_.size()) ? coefficients_[k] : BigInt(0);
    }

    BigInt operator()(const BigInt& x) const
    {
        BigInt acc = 0;
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// "1 -3 3 ..." constant term first.
    std::string coefficient_list() const
    {
        std::string out;
        for (std::size_t k = 0; k < coefficients_.size(); ++k) {
            if (k)
                out += ' ';
            out += coefficients_[k].str();
        }
        return out;
    }

    /// Human-readable form, highest power first: "-x^9 + 3x^8 - ... + 1".
    std::string to_string() const
    {
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& c = coefficients_[k];
            if (c == 0 && !(k == 0 && out.empty()))
                continue;
            const BigInt mag = c < 0 ? BigInt(-c) : c;
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            if (k == 0 || mag != 1)
                out += mag.str();
            if (k >= 1)
                out += "x";
            if (k >= 2)
                out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    std::vector<BigInt> coefficients_{BigInt(0)};
};

inline BigInt eval_poly(const IntPolynomial& g, const BigInt& x) { return g(x); }

/**
 * det(M - x I) by the Faddeev-LeVerrier recurrence over exact integers:
 *
 *     N_0 = I,  p_n = 1,
 *     p_{n-k} = -tr(M N_{k-1}) / k,  N_k = M N_{k-1} + p_{n-k} I,
 *
 * giving det(x I - M) = sum p_i x^i; the result is scaled by (-1)^n.
 * Every division must be exact; a remainder means a bug and throws.
 */
template <typename T>
IntPolynomial char_poly(const SquareMatrix<T>& input)
{
    const int n = input.dim();
    const SquareMatrix<BigInt> m = input.template cast<BigInt>();
    std::vector<BigInt> monic(n + 1);
    monic[n] = 1;

    SquareMatrix<BigInt> aux = SquareMatrix<BigInt>::identity(n);
    for (int k = 1; k <= n; ++k) {
        SquareMatrix<BigInt> product = m * aux;
        BigInt trace = 0;
        for (int i = 0; i < n; ++i)
            trace += product(i, i);
        if (trace % k != 0)
            throw Error(ErrorKind::InternalExactnessFailure,
                        "trace " + trace.str() + " not divisible by " + std::to_string(k));
        monic[n - k] = -trace / k;
        for (int i = 0; i < n; ++i)
            product(i, i) += monic[n - k];
        aux = std::move(product);
    }
    if (n % 2 == 1)
        for (auto& c : monic)
            c = -c;
    return IntPolynomial(std::move(monic));
}

struct RowSumReport {
    bool holds = false;
    int max_row_sum = 0;
    int bound = 0;  ///< |A| - 1
};

/// Certifies |lambda| <= max row sum <= |A| - 1 < |A| for every eigenvalue.
inline RowSumReport row_sum_bound_check(const TransferMatrix& m, const DigitSet& alphabet)
{
    if (!alphabet.has_odd())
        throw Error(ErrorKind::OddElementRequired,
                    "row-sum bound requires an odd digit in {" + alphabet.to_string() + "}");
    RowSumReport report;
    report.bound = alphabet.size() - 1;
    for (int i = 0; i < m.dim(); ++i) {
        int sum = 0;
        for (int j = 0; j < m.dim(); ++j)
            sum += m(i, j) < 0 ? -m(i, j) : m(i, j);
        report.max_row_sum = std::max(report.max_row_sum, sum);
    }
    report.holds = report.max_row_sum <= report.bound;
    return report;
}

} // namespace nsbin
