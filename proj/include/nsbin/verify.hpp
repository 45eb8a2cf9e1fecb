#pragma once

/**
 * @file verify.hpp
 * @brief Self-check suites driven by the CLI `verify` command.
 *
 *   paper       published constants from a fixture file
 *   oracle      memoized counts against brute-force enumeration
 *   properties  structural identities (matrix step, annihilation,
 *               summatory recurrence, reflection, bounds)
 */

#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nsbin/asymptotics.hpp"
#include "nsbin/counting.hpp"
#include "nsbin/digit_set.hpp"
#include "nsbin/errors.hpp"
#include "nsbin/exact.hpp"
#include "nsbin/recurrence_matrix.hpp"
#include "nsbin/symmetry.hpp"

namespace nsbin {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct FixtureRecord {
    std::string kind;
    std::vector<std::string> fields;
    std::size_t line = 0;
};

inline std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) {
        if (!field.empty())
            fields.push_back(field);
    }
    return fields;
}

inline std::vector<FixtureRecord> load_fixture(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot open fixture " + path);
    std::vector<FixtureRecord> records;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line[0] == '#')
            continue;
        auto fields = split_tabs(line);
        if (fields.size() < 3)
            throw Error(ErrorKind::InvalidSyntax,
                        path + ":" + std::to_string(number) + ": expected at least 3 tab-separated fields");
        FixtureRecord record{fields.front(), {fields.begin() + 1, fields.end()}, number};
        records.push_back(std::move(record));
    }
    return records;
}

namespace detail {

inline CheckResult check_record(const FixtureRecord& record, const GrowthOptions& options)
{
    const DigitSet set = parse_digit_set(record.fields.at(0));
    CheckResult result{record.kind + " {" + set.to_string() + "}", false, {}};

    if (record.kind == "coeff") {
        const Rational expected = parse_rational(record.fields.at(1));
        const GrowthReport report = growth_coefficient(set, 1, options);
        const bool exact = report.coefficient == expected;
        bool decimal = true;
        if (record.fields.size() > 2 && record.fields[2] != "-")
            decimal = to_decimal_string(report.coefficient, 3) == record.fields[2];
        result.passed = exact && decimal;
        result.detail = "computed " + to_display_string(report.coefficient) + " (" +
                        to_decimal_string(report.coefficient, 3) + "), expected " +
                        record.fields[1];
    } else if (record.kind == "pair") {
        const DigitSet expected = parse_digit_set(record.fields.at(1));
        const ReflectionReport reflection = verify_reflection(set);
        result.passed = reflection.reflected == expected && reflection.passed();
        result.detail = "reflected {" + reflection.reflected.to_string() + "}, expected {" +
                        expected.to_string() + "}";
    } else if (record.kind == "annihilated") {
        const int r = std::stoi(record.fields.at(1));
        const BigInt expected = parse_big_integer(record.fields.at(2));
        const BigInt value = annihilated_sum(set, r, 1, options.summation_budget);
        result.name += " r=" + std::to_string(r);
        result.passed = value == expected;
        result.detail = "computed " + value.str() + ", expected " + expected.str();
    } else if (record.kind == "gvalue") {
        const BigInt x = parse_big_integer(record.fields.at(1));
        const BigInt expected = parse_big_integer(record.fields.at(2));
        const BigInt value = char_poly(build_matrix(set))(x);
        result.name += " x=" + x.str();
        result.passed = value == expected;
        result.detail = "computed " + value.str() + ", expected " + expected.str();
    } else if (record.kind == "charpoly") {
        std::vector<BigInt> coefficients;
        for (std::size_t i = 1; i < record.fields.size(); ++i)
            coefficients.push_back(parse_big_integer(record.fields[i]));
        const IntPolynomial expected(std::move(coefficients));
        const IntPolynomial g = char_poly(build_matrix(set));
        result.passed = g == expected;
        result.detail = "computed " + g.to_string() + ", expected " + expected.to_string();
    } else if (record.kind == "matrix") {
        const TransferMatrix m = build_matrix(set);
        std::string rendered;
        for (int i = 0; i < m.dim(); ++i) {
            if (i)
                rendered += '/';
            for (int j = 0; j < m.dim(); ++j) {
                if (j)
                    rendered += ' ';
                rendered += std::to_string(m(i, j));
            }
        }
        result.passed = rendered == record.fields.at(1);
        result.detail = "computed " + rendered;
    } else {
        throw Error(ErrorKind::InvalidSyntax, "line " + std::to_string(record.line) +
                                                  ": unknown fixture record '" + record.kind + "'");
    }
    return result;
}

inline CheckResult guarded(std::string name, const std::function<CheckResult()>& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return {std::move(name), false, std::string(to_string(e.kind())) + ": " + e.what()};
    }
}

} // namespace detail

inline std::vector<CheckResult> run_paper_suite(const std::string& fixture_path,
                                                const GrowthOptions& options = {})
{
    std::vector<CheckResult> results;
    for (const auto& record : load_fixture(fixture_path)) {
        const std::string name = record.kind + " line " + std::to_string(record.line);
        results.push_back(detail::guarded(name, [&] { return detail::check_record(record, options); }));
    }
    return results;
}

inline const std::vector<std::string>& oracle_alphabets()
{
    static const std::vector<std::string> sets{"0,1",     "0,1,3",     "0,2,3",       "0,1,8",
                                               "0,1,3,4", "0,2,3,6", "0,4,5,6,9"};
    return sets;
}

inline std::vector<CheckResult> run_oracle_suite(std::int64_t n_max = 4096,
                                                 std::int64_t oracle_cap = kDefaultOracleCap)
{
    std::vector<CheckResult> results;
    for (const auto& text : oracle_alphabets()) {
        const DigitSet set = parse_digit_set(text);
        const std::string name = "oracle {" + text + "} n<=" + std::to_string(n_max);
        results.push_back(detail::guarded(name, [&] {
            CountingContext ctx(set);
            for (std::int64_t n = 0; n <= n_max; ++n) {
                const BigInt fast = ctx.count(n);
                const BigInt slow = count_bruteforce(set, n, oracle_cap);
                if (fast != slow)
                    return CheckResult{name, false,
                                       "n=" + std::to_string(n) + ": memoized " + fast.str() +
                                           ", brute force " + slow.str()};
            }
            return CheckResult{name, true, {}};
        }));
    }
    return results;
}

/// Alphabets used by the property suite: the published examples.
inline std::vector<DigitSet> property_alphabets()
{
    std::vector<DigitSet> sets;
    for (int t = 2; t <= 17; ++t)
        sets.push_back(DigitSet::from_digits({0, 1, t}));
    for (const char* text : {"0,2,3", "0,1,3,4", "0,1,2,4", "0,2,3,4", "0,2,3,6", "0,3,4,6",
                             "0,1,6,9", "0,3,8,9", "0,1,7,9", "0,2,8,9", "0,4,5,6,9", "0,3,4,5,9"})
        sets.push_back(parse_digit_set(text));
    return sets;
}

inline CheckResult check_matrix_step(const DigitSet& set, int k_max = 12)
{
    const std::string name = "step {" + set.to_string() + "}";
    return detail::guarded(name, [&] {
        CountingContext ctx(set);
        const TransferMatrix m = build_matrix(set);
        for (std::int64_t mult = 1; mult <= 3; ++mult)
            for (int k = 0; k <= k_max; ++k)
                if (step(m, omega(ctx, k, mult)) != omega(ctx, k + 1, mult))
                    return CheckResult{name, false,
                                       "k=" + std::to_string(k) + " m=" + std::to_string(mult)};
        return CheckResult{name, true, {}};
    });
}

/// sum_k alpha_k omega_{r+k}(m) = 0 componentwise.
inline CheckResult check_cayley_hamilton(const DigitSet& set, int r_max = 8)
{
    const std::string name = "annihilation {" + set.to_string() + "}";
    return detail::guarded(name, [&] {
        CountingContext ctx(set);
        const IntPolynomial g = char_poly(build_matrix(set));
        for (std::int64_t mult = 1; mult <= 3; ++mult) {
            for (int r = 0; r <= r_max; ++r) {
                std::vector<BigInt> total(set.max_digit() + 1);
                for (int k = 0; k <= g.degree(); ++k) {
                    const auto w = omega(ctx, r + k, mult);
                    for (std::size_t j = 0; j < total.size(); ++j)
                        total[j] += g.coefficient(k) * w.entries[j];
                }
                for (std::size_t j = 0; j < total.size(); ++j)
                    if (total[j] != 0)
                        return CheckResult{name, false,
                                           "r=" + std::to_string(r) + " m=" + std::to_string(mult) +
                                               " j=" + std::to_string(j)};
            }
        }
        return CheckResult{name, true, {}};
    });
}

/// s(r, m) = |A| s(r-1, m) + h(r) with both sides summed directly.
inline CheckResult check_summatory_recurrence(const DigitSet& set, int r_max = 20)
{
    const std::string name = "summatory recurrence {" + set.to_string() + "}";
    return detail::guarded(name, [&] {
        CountingContext ctx(set);
        for (std::int64_t mult = 1; mult <= 3; ++mult) {
            BigInt previous = summatory(set, 0, mult);
            for (int r = 1; r <= r_max; ++r) {
                const BigInt current = summatory(set, r, mult);
                if (current != set.size() * previous + h_term(ctx, r, mult))
                    return CheckResult{name, false,
                                       "r=" + std::to_string(r) + " m=" + std::to_string(mult)};
                previous = current;
            }
        }
        return CheckResult{name, true, {}};
    });
}

inline CheckResult check_h_annihilation(const DigitSet& set, std::int64_t m = 1)
{
    const std::string name = "h annihilation {" + set.to_string() + "}";
    return detail::guarded(name, [&] {
        CountingContext ctx(set);
        const IntPolynomial g = char_poly(build_matrix(set));
        const int r0 = stability_start(set, m);
        for (int r = r0; r <= r0 + 5; ++r) {
            BigInt total = 0;
            for (int k = 0; k <= g.degree(); ++k)
                total += g.coefficient(k) * h_term(ctx, r + k, m);
            if (total != 0)
                return CheckResult{name, false, "r=" + std::to_string(r) + ": " + total.str()};
        }
        return CheckResult{name, true, {}};
    });
}

/// Uniform random alphabets {0, ..., a_z} with a_z <= max_digit, fixed seed.
inline std::vector<DigitSet> random_alphabets(std::size_t count, int max_digit, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> top_dist(0, max_digit);
    std::bernoulli_distribution keep(0.4);
    std::vector<DigitSet> sets;
    sets.reserve(count);
    while (sets.size() < count) {
        const int top = top_dist(rng);
        std::vector<long long> digits{0};
        for (int d = 1; d < top; ++d)
            if (keep(rng))
                digits.push_back(d);
        if (top > 0)
            digits.push_back(top);
        sets.push_back(DigitSet::from_digits(std::move(digits)));
    }
    return sets;
}

inline std::vector<CheckResult> run_property_suite(const GrowthOptions& options = {})
{
    std::vector<CheckResult> results;
    const auto sets = property_alphabets();
    for (const auto& set : sets) {
        results.push_back(check_matrix_step(set));
        results.push_back(check_cayley_hamilton(set));
        results.push_back(check_h_annihilation(set));
        results.push_back(detail::guarded("stability {" + set.to_string() + "}", [&] {
            const int r0 = stability_start(set, 1);
            const auto candidates =
                candidate_coefficients(set, 1, r0, r0 + 5, options.summation_budget);
            for (const auto& [r, c] : candidates)
                if (c != candidates.front().second)
                    return CheckResult{"stability {" + set.to_string() + "}", false,
                                       "r=" + std::to_string(r) + " disagrees"};
            return CheckResult{"stability {" + set.to_string() + "}", true, {}};
        }));
    }
    for (const char* text : {"0,1,3", "0,2,3", "0,1,8", "0,1,3,4", "0,4,5,6,9"})
        results.push_back(check_summatory_recurrence(parse_digit_set(text)));

    std::size_t reflection_failures = 0;
    std::string first_failure;
    for (const auto& set : random_alphabets(200, 20, 20240601u)) {
        if (!verify_reflection(set).passed() && reflection_failures++ == 0)
            first_failure = set.to_string();
    }
    results.push_back({"reflection on 200 random alphabets", reflection_failures == 0,
                       reflection_failures ? "first failure {" + first_failure + "}" : ""});

    results.push_back(detail::guarded("bounds {0,1,t}", [&] {
        for (int t = 2; t <= 17; ++t) {
            const auto c = growth_coefficient(DigitSet::from_digits({0, 1, t}), 1, options).coefficient;
            const auto b = bounds_01t(t);
            if (c < b.lower || c > b.upper)
                return CheckResult{"bounds {0,1,t}", false, "t=" + std::to_string(t)};
        }
        return CheckResult{"bounds {0,1,t}", true, {}};
    }));
    return results;
}

} // namespace nsbin
