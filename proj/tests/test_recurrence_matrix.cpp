#include <gtest/gtest.h>

#include <random>

#include "nsbin/recurrence_matrix.hpp"
#include "nsbin/verify.hpp"
#include "oracles.hpp"

using namespace nsbin;

namespace {

DigitSet set(const char* text) { return parse_digit_set(text); }

TransferMatrix from_rows(const std::vector<std::vector<int>>& rows)
{
    TransferMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

IntPolynomial poly(std::initializer_list<int> constant_first)
{
    return IntPolynomial(std::vector<BigInt>(constant_first.begin(), constant_first.end()));
}

} // namespace

TEST(BuildMatrix, Examples)
{
    EXPECT_EQ(build_matrix(set("0,1,3,4")), from_rows({{1, 0, 1, 0, 0},
                                                      {0, 1, 1, 0, 0},
                                                      {0, 1, 0, 1, 0},
                                                      {0, 0, 1, 1, 0},
                                                      {0, 0, 1, 0, 1}}));
    EXPECT_EQ(build_matrix(set("0,1")), TransferMatrix::identity(2));
    EXPECT_EQ(build_matrix(set("0,1,8")), from_rows({{1, 0, 0, 0, 1, 0, 0, 0, 0},
                                                    {0, 1, 0, 0, 0, 0, 0, 0, 0},
                                                    {0, 1, 0, 0, 0, 1, 0, 0, 0},
                                                    {0, 0, 1, 0, 0, 0, 0, 0, 0},
                                                    {0, 0, 1, 0, 0, 0, 1, 0, 0},
                                                    {0, 0, 0, 1, 0, 0, 0, 0, 0},
                                                    {0, 0, 0, 1, 0, 0, 0, 1, 0},
                                                    {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                                    {0, 0, 0, 0, 1, 0, 0, 0, 1}}));
    EXPECT_EQ(build_matrix(set("0,1,3")), from_rows({{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}}));
    EXPECT_EQ(build_matrix(set("0,2,3")), from_rows({{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}));
}

TEST(BuildMatrix, EntryLawMatchesRecurrenceExpansion)
{
    for (const auto& a : random_alphabets(300, 24, 99u)) {
        const TransferMatrix m = build_matrix(a);
        ASSERT_EQ(m, oracle::matrix_by_expansion(a)) << a.to_string();
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j)
                ASSERT_TRUE(m(i, j) == 0 || m(i, j) == 1);
    }
}

TEST(Step, Examples)
{
    const std::vector<BigInt> ones{1, 1};
    EXPECT_EQ(step(build_matrix(set("0,1")), ones), ones);

    CountingContext a(set("0,1,3,4"));
    EXPECT_EQ(step(build_matrix(a.alphabet()), omega(a, 2, 1)), omega(a, 3, 1));

    CountingContext b(set("0,1,8"));
    const auto w5 = step(build_matrix(b.alphabet()), omega(b, 4, 1));
    EXPECT_EQ(w5, omega(b, 5, 1));
    EXPECT_EQ(w5.entries, (std::vector<BigInt>{5, 1, 2, 2, 4, 1, 2, 2, 4}));
}

TEST(Step, DimensionMismatch)
{
    try {
        step(build_matrix(set("0,1,3")), std::vector<BigInt>{1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(Step, ConsistentWithCounting)
{
    for (const auto& a : property_alphabets())
        EXPECT_TRUE(check_matrix_step(a).passed) << a.to_string();
}

TEST(CharPoly, Examples)
{
    EXPECT_EQ(char_poly(build_matrix(set("0,1,3"))), poly({-1, 1, 2, -3, 1}));
    EXPECT_EQ(char_poly(build_matrix(set("0,2,3"))), poly({-1, 1, 2, -3, 1}));
    EXPECT_EQ(char_poly(build_matrix(set("0,1,8"))), poly({1, -3, 3, -3, 6, -6, 3, -3, 3, -1}));
    EXPECT_EQ(char_poly(build_matrix(set("0,1"))), poly({1, -2, 1}));
}

TEST(CharPoly, FactoredFormOfSizeFourExamples)
{
    // (x - 1)^2 (x^2 - x - 1) expanded by polynomial multiplication.
    std::vector<BigInt> product{1};
    for (const std::vector<BigInt>& factor :
         {std::vector<BigInt>{-1, 1}, std::vector<BigInt>{-1, 1}, std::vector<BigInt>{-1, -1, 1}}) {
        std::vector<BigInt> next(product.size() + factor.size() - 1);
        for (std::size_t i = 0; i < product.size(); ++i)
            for (std::size_t j = 0; j < factor.size(); ++j)
                next[i + j] += product[i] * factor[j];
        product = std::move(next);
    }
    EXPECT_EQ(char_poly(build_matrix(set("0,1,3"))), IntPolynomial(product));
}

TEST(CharPoly, MatchesInterpolationOracle)
{
    for (const auto& a : random_alphabets(60, 14, 5u)) {
        const TransferMatrix m = build_matrix(a);
        const IntPolynomial g = char_poly(m);
        const auto reference = oracle::charpoly_by_interpolation(m);
        ASSERT_EQ(g.degree(), m.dim()) << a.to_string();
        for (int k = 0; k <= m.dim(); ++k)
            ASSERT_EQ(Rational(g.coefficient(k)), reference[k]) << a.to_string() << " k=" << k;
    }
}

TEST(CharPoly, LeadingCoefficientAndDeterminant)
{
    for (const auto& a : random_alphabets(100, 20, 11u)) {
        const TransferMatrix m = build_matrix(a);
        const IntPolynomial g = char_poly(m);
        EXPECT_EQ(g.degree(), a.max_digit() + 1);
        EXPECT_EQ(g.leading(), (a.max_digit() + 1) % 2 == 0 ? 1 : -1);
        EXPECT_EQ(g.coefficient(0), oracle::determinant(m.cast<BigInt>()));
        if (a.has_odd())
            EXPECT_NE(g(a.size()), 0) << a.to_string();
    }
}

TEST(CharPoly, CayleyHamiltonOnWindows)
{
    for (const char* text : {"0,1,3", "0,2,3", "0,1,8", "0,1,3,4", "0,4,5,6,9", "0,1,17"})
        EXPECT_TRUE(check_cayley_hamilton(set(text)).passed) << text;
}

TEST(CharPoly, Rendering)
{
    const IntPolynomial g = char_poly(build_matrix(set("0,1,8")));
    EXPECT_EQ(g.coefficient_list(), "1 -3 3 -3 6 -6 3 -3 3 -1");
    EXPECT_EQ(g.to_string(), "-x^9 + 3x^8 - 3x^7 + 3x^6 - 6x^5 + 6x^4 - 3x^3 + 3x^2 - 3x + 1");
    EXPECT_EQ(poly({0}).to_string(), "0");
    EXPECT_EQ(poly({0, 0, 1}).to_string(), "x^2");
}

TEST(EvalPoly, Examples)
{
    const IntPolynomial g018 = char_poly(build_matrix(set("0,1,8")));
    EXPECT_EQ(eval_poly(g018, 3), -5408);
    EXPECT_EQ(eval_poly(char_poly(build_matrix(set("0,1,3"))), 3), 20);
    EXPECT_EQ(eval_poly(g018, 0), g018.coefficient(0));
}

TEST(RowSumBound, Examples)
{
    const auto r012 = row_sum_bound_check(build_matrix(set("0,1,2")), set("0,1,2"));
    EXPECT_TRUE(r012.holds);
    EXPECT_EQ(r012.max_row_sum, 2);
    EXPECT_EQ(r012.bound, 2);

    const auto r0134 = row_sum_bound_check(build_matrix(set("0,1,3,4")), set("0,1,3,4"));
    EXPECT_TRUE(r0134.holds);
    EXPECT_EQ(r0134.max_row_sum, 2);
    EXPECT_EQ(r0134.bound, 3);

    try {
        row_sum_bound_check(build_matrix(set("0,2")), set("0,2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddElementRequired);
    }
}

TEST(RowSumBound, HoldsForMixedParityAlphabets)
{
    for (const auto& a : random_alphabets(200, 30, 3u)) {
        if (!a.has_odd())
            continue;
        EXPECT_TRUE(row_sum_bound_check(build_matrix(a), a).holds) << a.to_string();
    }
}
