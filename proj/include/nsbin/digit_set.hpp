#pragma once

/**
 * @file digit_set.hpp
 * @brief Digit alphabets A = {0 = a_0 < a_1 < ... < a_z} for base-2
 * expansions, with their even/odd parameterization
 *
 *     A = {2 b_1, ..., 2 b_s} u {2 c_1 + 1, ..., 2 c_t + 1},  b_1 = 0.
 */

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsbin/errors.hpp"

namespace nsbin {

inline constexpr int kDefaultMaxDigit = 64;

class DigitSet {
public:
    /// Validates and sorts `digits`. Throws nsbin::Error on any violation.
    static DigitSet from_digits(std::vector<long long> digits, int max_digit_cap = kDefaultMaxDigit)
    {
        if (max_digit_cap < 0)
            throw Error(ErrorKind::TooLarge, "maximum digit cap must be non-negative");
        if (digits.empty())
            throw Error(ErrorKind::InvalidSyntax, "digit set must not be empty");
        for (long long d : digits) {
            if (d < 0)
                throw Error(ErrorKind::NegativeElement,
                            "digit set elements must be non-negative, got " + std::to_string(d));
        }
        std::sort(digits.begin(), digits.end());
        if (auto dup = std::adjacent_find(digits.begin(), digits.end()); dup != digits.end())
            throw Error(ErrorKind::DuplicateElement, "duplicate digit " + std::to_string(*dup));
        if (digits.front() != 0)
            throw Error(ErrorKind::MissingZero, "digit set must contain 0");
        if (digits.back() > max_digit_cap)
            throw Error(ErrorKind::TooLarge,
                        "largest digit " + std::to_string(digits.back()) + " exceeds the cap " +
                            std::to_string(max_digit_cap));

        DigitSet set;
        set.elements_.assign(digits.begin(), digits.end());
        for (int a : set.elements_) {
            if (a % 2 == 0)
                set.evens_.push_back(a / 2);
            else
                set.odds_.push_back((a - 1) / 2);
        }
        return set;
    }

    std::span<const int> elements() const noexcept { return elements_; }
    /// b_1 < ... < b_s, where 2 b_i are the even digits.
    std::span<const int> evens() const noexcept { return evens_; }
    /// c_1 < ... < c_t, where 2 c_i + 1 are the odd digits.
    std::span<const int> odds() const noexcept { return odds_; }

    int max_digit() const noexcept { return elements_.back(); }
    int size() const noexcept { return static_cast<int>(elements_.size()); }
    bool has_odd() const noexcept { return !odds_.empty(); }
    bool contains(long long value) const noexcept
    {
        return value >= 0 && value <= max_digit() &&
               std::binary_search(elements_.begin(), elements_.end(), static_cast<int>(value));
    }

    /// Canonical "0,1,8" rendering.
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(elements_[i]);
        }
        return out;
    }

    friend bool operator==(const DigitSet&, const DigitSet&) = default;

private:
    DigitSet() = default;

    std::vector<int> elements_;
    std::vector<int> evens_;
    std::vector<int> odds_;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace detail

/// Parses "0,1,3,4" (whitespace around items tolerated, any order).
inline DigitSet parse_digit_set(std::string_view text, int max_digit_cap = kDefaultMaxDigit)
{
    text = detail::trim(text);
    if (text.empty())
        throw Error(ErrorKind::InvalidSyntax, "digit set must not be empty");

    std::vector<long long> digits;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        const auto item = detail::trim(text.substr(pos, comma - pos));
        long long value = 0;
        const auto* first = item.data();
        const auto* last = item.data() + item.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (item.empty() || ec != std::errc() || ptr != last) {
            if (ec == std::errc::result_out_of_range)
                throw Error(ErrorKind::TooLarge, "digit '" + std::string(item) + "' is out of range");
            throw Error(ErrorKind::InvalidSyntax,
                        "expected a comma-separated list of integers, got '" + std::string(text) + "'");
        }
        digits.push_back(value);
        pos = comma + 1;
    }
    return DigitSet::from_digits(std::move(digits), max_digit_cap);
}

/// The reflected alphabet {a_z - a : a in A}.
inline DigitSet reflect(const DigitSet& set)
{
    std::vector<long long> digits;
    digits.reserve(set.elements().size());
    for (int a : set.elements())
        digits.push_back(set.max_digit() - a);
    return DigitSet::from_digits(std::move(digits), set.max_digit());
}

} // namespace nsbin
