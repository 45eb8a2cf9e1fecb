#include <gtest/gtest.h>

#include "nsbin/asymptotics.hpp"
#include "nsbin/verify.hpp"

using namespace nsbin;

namespace {

DigitSet set(const char* text) { return parse_digit_set(text); }

Rational c_of(const char* text, std::int64_t m = 1) { return growth_coefficient(set(text), m).coefficient; }

ErrorKind kind_of(const std::function<void()>& body)
{
    try {
        body();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::InvalidSyntax;
}

} // namespace

TEST(GrowthCoefficient, WorkedExamples)
{
    EXPECT_EQ(c_of("0,1,8"), Rational(137, 338));
    EXPECT_EQ(c_of("0,1,3"), Rational(4, 5));
    EXPECT_EQ(c_of("0,2,3"), Rational(2, 5));
    EXPECT_EQ(c_of("0,1", 5), Rational(5));
    EXPECT_EQ(c_of("0,1,2"), Rational(1));
}

TEST(GrowthCoefficient, ReportFields)
{
    const GrowthReport report = growth_coefficient(set("0,1,8"), 1);
    EXPECT_EQ(report.decimal, "0.405");
    EXPECT_EQ(report.r_used, 4);  // 2^4 >= 9
    ASSERT_EQ(report.stability_window.size(), 3u);
    for (const auto& [r, c] : report.stability_window)
        EXPECT_EQ(c, report.coefficient);
    EXPECT_GT(report.coefficient, 0);

    GrowthOptions options;
    options.decimal_places = 6;
    EXPECT_EQ(growth_coefficient(set("0,1,8"), 1, options).decimal, "0.405325");
}

TEST(GrowthCoefficient, FamilyZeroOneT)
{
    const std::vector<std::pair<int, Rational>> expected{
        {2, Rational(1)},
        {3, Rational(4, 5)},
        {4, Rational(5, 8)},
        {5, Rational(14, 25)},
        {6, Rational(35, 71)},
        {7, Rational(176, 391)},
        {8, Rational(137, 338)},
        {9, Rational(1448, 3775)},
        {10, Rational(1990, 5527)},
        {11, Rational(3223, 9476)},
        {12, Rational(2020, 6283)},
        {13, Rational(47228, 154123)},
        {14, Rational(35624, 122411)},
        {15, Rational(699224, 2501653)},
        {16, Rational(68281, 256000)},
    };
    for (const auto& [t, c] : expected)
        EXPECT_EQ(growth_coefficient(DigitSet::from_digits({0, 1, t}), 1).coefficient, c) << t;
}

TEST(GrowthCoefficient, ZeroOneSeventeenAgreesWithRatioLimit)
{
    // Exact ratio s(r)/3^r is within 1e-15 of the coefficient by r = 60.
    const Rational c = c_of("0,1,17");
    EXPECT_EQ(c, Rational(176537, 680500));
    const auto trace = ratio_trace(set("0,1,17"), 1, 60);
    EXPECT_LT(abs(trace.back().second - c), Rational(1, BigInt("1000000000000000")));
}

TEST(GrowthCoefficient, Errors)
{
    EXPECT_EQ(kind_of([] { growth_coefficient(set("0,2,4"), 1); }), ErrorKind::OddElementRequired);
    EXPECT_EQ(kind_of([] { growth_coefficient(set("0"), 1); }), ErrorKind::OddElementRequired);
    EXPECT_EQ(kind_of([] { growth_coefficient(set("0,1,3"), 0); }), ErrorKind::InvalidArgument);
    GrowthOptions tight;
    tight.r_max = 5;  // r0 = 4 for {0,1,8}
    EXPECT_EQ(kind_of([&] { growth_coefficient(set("0,1,8"), 1, tight); }), ErrorKind::StabilityFailure);
}

TEST(GrowthCoefficient, MultiplierScalingForStandardBinary)
{
    for (std::int64_t m = 1; m <= 10; ++m)
        EXPECT_EQ(c_of("0,1", m), Rational(m));
}

TEST(GrowthCoefficient, LargerMultipliersStabilize)
{
    for (const char* text : {"0,1,3", "0,1,8", "0,2,3,6"}) {
        for (std::int64_t m = 2; m <= 7; ++m) {
            const auto report = growth_coefficient(set(text), m);
            const auto trace = ratio_trace(set(text), m, 30);
            EXPECT_LT(abs(trace.back().second - report.coefficient), report.coefficient / 1000)
                << text << " m=" << m;
        }
    }
}

TEST(AnnihilatedSum, Examples)
{
    EXPECT_EQ(annihilated_sum(set("0,1,8"), 3, 1), -59184);
    for (int r = 0; r <= 8; ++r)
        EXPECT_EQ(annihilated_sum(set("0,1,3"), r, 1), 16 * pow_big(3, r)) << r;
    EXPECT_EQ(annihilated_sum(set("0,1"), 0, 1), 1);
}

TEST(SummatorySeries, MatchesDirectSummation)
{
    for (const char* text : {"0,1,3", "0,2,3", "0,1,8", "0,4,5,6,9", "0,1,17", "0,2,6"}) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            const auto series = summatory_series(set(text), m, 16);
            for (int r = 0; r <= 16; ++r)
                ASSERT_EQ(series[r], summatory(set(text), r, m)) << text << " r=" << r << " m=" << m;
        }
    }
}

TEST(StabilityStart, Examples)
{
    EXPECT_EQ(stability_start(set("0,1"), 1), 1);
    EXPECT_EQ(stability_start(set("0,1,3"), 1), 2);
    EXPECT_EQ(stability_start(set("0,1,8"), 1), 4);
    EXPECT_EQ(stability_start(set("0,1,8"), 3), 2);
    EXPECT_EQ(stability_start(set("0,1,8"), 100), 1);
}

TEST(CandidateCoefficients, IndependentOfR)
{
    for (const auto& a : property_alphabets()) {
        const int r0 = stability_start(a, 1);
        const auto candidates = candidate_coefficients(a, 1, r0, r0 + 5);
        ASSERT_EQ(candidates.size(), 6u);
        for (const auto& [r, c] : candidates)
            EXPECT_EQ(c, candidates.front().second) << a.to_string() << " r=" << r;
    }
}

TEST(CandidateCoefficients, HAnnihilation)
{
    for (const auto& a : property_alphabets())
        EXPECT_TRUE(check_h_annihilation(a).passed) << a.to_string();
}

TEST(RatioTrace, Examples)
{
    const auto trace = ratio_trace(set("0,1,3"), 1, 3);
    ASSERT_EQ(trace.size(), 4u);
    EXPECT_EQ(trace[0].second, Rational(1));
    EXPECT_EQ(trace[1].second, Rational(3, 3));
    EXPECT_EQ(trace[2].second, Rational(8, 9));
    EXPECT_EQ(trace[3].second, Rational(23, 27));

    for (const auto& [r, q] : ratio_trace(set("0,1"), 1, 20))
        EXPECT_EQ(q, 1) << r;

    const Rational c(137, 338);
    const auto long_trace = ratio_trace(set("0,1,8"), 1, 25);
    EXPECT_LT(abs(long_trace[25].second - c), abs(long_trace[15].second - c));
}

TEST(RatioTrace, ConvergesWithinTolerance)
{
    for (const auto& a : property_alphabets()) {
        const Rational c = growth_coefficient(a, 1).coefficient;
        const auto trace = ratio_trace(a, 1, 25);
        const Rational err25 = abs(trace[25].second - c);
        const Rational err15 = abs(trace[15].second - c);
        EXPECT_LE(err25, c / 1000) << a.to_string();
        if (err15 == 0)
            EXPECT_EQ(err25, 0) << a.to_string();
        else
            EXPECT_LT(err25, err15) << a.to_string();
    }
}

TEST(RatioTrace, ZeroOneTwoIsExactAtEveryLevel)
{
    // The block sums are exactly 3^r, so the ratio never moves off c = 1.
    for (const auto& [r, q] : ratio_trace(set("0,1,2"), 1, 25))
        EXPECT_EQ(q, 1) << r;
}

TEST(RatioTrace, RequiresOddDigit)
{
    EXPECT_EQ(kind_of([] { ratio_trace(set("0,2"), 1, 5); }), ErrorKind::OddElementRequired);
    EXPECT_EQ(kind_of([] { ratio_trace(set("0,1,3"), 1000, 5, 100); }), ErrorKind::BudgetExceeded);
}

TEST(Bounds, Examples)
{
    for (int t = 9; t <= 15; ++t) {
        const auto b = bounds_01t(t);
        EXPECT_EQ(b.k, 3);
        EXPECT_EQ(to_decimal_string(b.lower, 3), "0.132");
        EXPECT_EQ(to_decimal_string(b.upper, 3), "0.593");
    }
    const auto two = bounds_01t(2);
    EXPECT_EQ(two.k, 0);
    EXPECT_EQ(two.lower, Rational(4, 9));
    EXPECT_EQ(two.upper, Rational(2));

    const auto sixteen = bounds_01t(16);
    EXPECT_EQ(sixteen.k, 3);
    EXPECT_EQ(sixteen.lower, Rational(32, 243));

    EXPECT_EQ(bounds_01t(17).k, 4);
    EXPECT_EQ(kind_of([] { bounds_01t(1); }), ErrorKind::InvalidT);
}

TEST(Bounds, ContainTheCoefficients)
{
    for (int t = 2; t <= 17; ++t) {
        const auto b = bounds_01t(t);
        const Rational c = growth_coefficient(DigitSet::from_digits({0, 1, t}), 1).coefficient;
        EXPECT_LE(b.lower, c) << t;
        EXPECT_LE(c, b.upper) << t;
    }
}
