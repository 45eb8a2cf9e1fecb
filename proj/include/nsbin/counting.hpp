#pragma once

/**
 * @file counting.hpp
 * @brief Representation counts f_A(n): the number of digit strings
 * (e_0, e_1, ...) over A with n = sum e_i 2^i.
 *
 * The memoized evaluator uses the parity recurrences
 *
 *     f_A(2l)     = sum_i f_A(l - b_i)
 *     f_A(2l + 1) = sum_i f_A(l - c_i)
 *
 * with f_A(0) = 1 and f_A(n) = 0 for n < 0. A brute-force enumerator over
 * digit strings is provided as an independent oracle.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nsbin/digit_set.hpp"
#include "nsbin/errors.hpp"
#include "nsbin/exact.hpp"

namespace nsbin {

inline constexpr std::int64_t kDefaultOracleCap = std::int64_t{1} << 20;
inline constexpr std::int64_t kDefaultSummationBudget = std::int64_t{1} << 26;

/**
 * Memoized f_A over 64-bit arguments.
 *
 * Not thread-safe: use one context per task. Distinct contexts share nothing.
 */
class CountingContext {
public:
    explicit CountingContext(DigitSet alphabet) : alphabet_(std::move(alphabet)) {}

    const DigitSet& alphabet() const noexcept { return alphabet_; }

    BigInt count(std::int64_t n) { return n < 0 ? BigInt(0) : lookup(n); }

    /// Memoized values, for persistence. Keys are non-negative.
    const std::unordered_map<std::int64_t, BigInt>& memo() const noexcept { return memo_; }

    /// Preloads a value, e.g. from a cache file. The caller vouches for it.
    void seed(std::int64_t n, BigInt value)
    {
        if (n < 0 || value < 0)
            throw Error(ErrorKind::InvalidSyntax, "memo entries must be non-negative");
        memo_.insert_or_assign(n, std::move(value));
    }

private:
    const BigInt& lookup(std::int64_t n)
    {
        if (auto it = memo_.find(n); it != memo_.end())
            return it->second;

        BigInt total = 0;
        if (n == 0) {
            total = 1;
        } else {
            const std::int64_t half = n / 2;
            const auto shifts = (n % 2 == 0) ? alphabet_.evens() : alphabet_.odds();
            for (int shift : shifts) {
                if (half - shift < 0)
                    break;
                total += lookup(half - shift);
            }
        }
        // unordered_map references survive rehashing.
        return memo_.emplace(n, std::move(total)).first->second;
    }

    DigitSet alphabet_;
    std::unordered_map<std::int64_t, BigInt> memo_;
};

inline BigInt count(CountingContext& ctx, std::int64_t n) { return ctx.count(n); }

namespace detail {

// Number of ways to fill positions 0..position with digits summing to `remaining`.
inline std::uint64_t enumerate_digit_strings(std::span<const int> digits, int max_digit, int position,
                                             std::int64_t remaining)
{
    const std::int64_t weight = std::int64_t{1} << position;
    std::uint64_t ways = 0;
    for (int digit : digits) {
        const std::int64_t used = digit * weight;
        if (used > remaining)
            break;
        const std::int64_t rest = remaining - used;
        if (position == 0) {
            ways += rest == 0 ? 1 : 0;
            continue;
        }
        // Positions below can contribute at most max_digit * (2^position - 1).
        if (rest > max_digit * (weight - 1))
            continue;
        ways += enumerate_digit_strings(digits, max_digit, position - 1, rest);
    }
    return ways;
}

} // namespace detail

/// Counts digit strings for n directly. Exponential; capped at `oracle_cap`.
inline BigInt count_bruteforce(const DigitSet& alphabet, std::int64_t n,
                               std::int64_t oracle_cap = kDefaultOracleCap)
{
    if (n > oracle_cap)
        throw Error(ErrorKind::OracleCapExceeded,
                    "brute-force argument " + std::to_string(n) + " exceeds the oracle cap " +
                        std::to_string(oracle_cap));
    if (n < 0)
        return 0;
    int top = 0;
    while ((std::int64_t{2} << top) <= n)
        ++top;
    return BigInt(detail::enumerate_digit_strings(alphabet.elements(), alphabet.max_digit(), top, n));
}

/// (f_A(2^k m), f_A(2^k m - 1), ..., f_A(2^k m - a_z)).
struct OmegaVector {
    int k = 0;
    std::int64_t m = 1;
    std::vector<BigInt> entries;

    friend bool operator==(const OmegaVector&, const OmegaVector&) = default;
};

namespace detail {

inline std::int64_t dyadic(std::int64_t m, int k)
{
    if (m < 1)
        throw Error(ErrorKind::InvalidArgument, "multiplier m must be >= 1");
    if (k < 0)
        throw Error(ErrorKind::InvalidArgument, "level k must be >= 0");
    if (k > 62 || m > (std::numeric_limits<std::int64_t>::max() >> k))
        throw Error(ErrorKind::ArgumentOverflow,
                    "m * 2^" + std::to_string(k) + " does not fit in 64 bits");
    return m << k;
}

} // namespace detail

inline OmegaVector omega(CountingContext& ctx, int k, std::int64_t m)
{
    const std::int64_t base = detail::dyadic(m, k);
    OmegaVector v{k, m, {}};
    v.entries.reserve(ctx.alphabet().max_digit() + 1);
    for (int j = 0; j <= ctx.alphabet().max_digit(); ++j)
        v.entries.push_back(ctx.count(base - j));
    return v;
}

namespace detail {

inline bool add_checked(std::uint64_t& acc, std::uint64_t value)
{
    return !__builtin_add_overflow(acc, value, &acc);
}

inline bool add_checked(BigInt& acc, const BigInt& value)
{
    acc += value;
    return true;
}

/**
 * f_A on [lo, hi] as a dense vector, built bottom-up: each level needs
 * f_A on [lo/2 - max shift, hi/2] from the level below. Returns false if
 * `Int` overflows.
 */
template <typename Int>
bool dense_counts(const DigitSet& alphabet, std::int64_t lo, std::int64_t hi, std::vector<Int>& out)
{
    const int max_shift = std::max(alphabet.evens().back(),
                                    alphabet.has_odd() ? alphabet.odds().back() : 0);
    std::vector<std::pair<std::int64_t, std::int64_t>> levels{{lo, hi}};
    while (levels.back().first > 0) {
        const auto [l, h] = levels.back();
        levels.emplace_back(std::max<std::int64_t>(0, l / 2 - max_shift), h / 2);
    }

    std::vector<Int> below;
    std::int64_t below_lo = 0;
    for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
        const auto [l, h] = *level;
        std::vector<Int> current(static_cast<std::size_t>(h - l + 1));
        for (std::int64_t n = l; n <= h; ++n) {
            Int& slot = current[n - l];
            if (n == 0) {
                slot = 1;
                continue;
            }
            const std::int64_t half = n / 2;
            const auto shifts = (n % 2 == 0) ? alphabet.evens() : alphabet.odds();
            for (int shift : shifts) {
                const std::int64_t arg = half - shift;
                if (arg < 0)
                    break;
                // Level 0 starts at 0 and is self-referential below its own range.
                const Int& term = (level == levels.rbegin()) ? current[arg - l] : below[arg - below_lo];
                if (!add_checked(slot, term))
                    return false;
            }
        }
        below = std::move(current);
        below_lo = l;
    }
    out = std::move(below);
    return true;
}

} // namespace detail

/**
 * s_A(r, m): the sum of f_A over [m 2^r, m 2^{r+1} - 1], by direct summation
 * over the block. Blocks longer than `budget` terms are refused.
 */
inline BigInt summatory(const DigitSet& alphabet, int r, std::int64_t m,
                        std::int64_t budget = kDefaultSummationBudget)
{
    const std::int64_t first = detail::dyadic(m, r);
    if (first > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "block of " + std::to_string(first) + " terms exceeds the summation budget " +
                        std::to_string(budget));
    const std::int64_t last = detail::dyadic(m, r + 1) - 1;

    BigInt total = 0;
    if (std::vector<std::uint64_t> narrow; detail::dense_counts(alphabet, first, last, narrow)) {
        for (std::uint64_t v : narrow)
            total += v;
        return total;
    }
    std::vector<BigInt> wide;
    detail::dense_counts(alphabet, first, last, wide);
    for (const auto& v : wide)
        total += v;
    return total;
}

inline BigInt summatory(CountingContext& ctx, int r, std::int64_t m,
                        std::int64_t budget = kDefaultSummationBudget)
{
    return summatory(ctx.alphabet(), r, m, budget);
}

/// The shifts b_2..b_s, c_1..c_t whose prefix sums make up h(r).
inline std::vector<int> remainder_shifts(const DigitSet& alphabet)
{
    std::vector<int> shifts(alphabet.evens().begin() + 1, alphabet.evens().end());
    shifts.insert(shifts.end(), alphabet.odds().begin(), alphabet.odds().end());
    return shifts;
}

/**
 * h(r) = s_A(r, m) - |A| s_A(r - 1, m), written as boundary corrections:
 * for every shift d in {b_2..b_s, c_1..c_t},
 * sum_{j=1}^{d} f_A(m 2^{r-1} - j) - f_A(m 2^r - j).
 */
inline BigInt h_term(CountingContext& ctx, int r, std::int64_t m)
{
    if (r < 1)
        throw Error(ErrorKind::InvalidArgument, "h(r) requires r >= 1");
    const std::int64_t low = detail::dyadic(m, r - 1);
    const std::int64_t high = detail::dyadic(m, r);
    BigInt total = 0;
    for (int shift : remainder_shifts(ctx.alphabet())) {
        for (int j = 1; j <= shift; ++j)
            total += ctx.count(low - j) - ctx.count(high - j);
    }
    return total;
}

} // namespace nsbin
