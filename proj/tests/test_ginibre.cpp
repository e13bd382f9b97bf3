#include <gtest/gtest.h>

#include <cmath>

#include "ncpair/ginibre.hpp"

using namespace ncpair;

TEST(Sample, DeterministicPerSeedAndStream)
{
    const auto a = sample(16, 7, 3);
    const auto b = sample(16, 7, 3);
    EXPECT_TRUE(a.X == b.X);
    EXPECT_FALSE(a.X == sample(16, 7, 4).X);
    EXPECT_FALSE(a.X == sample(16, 8, 3).X);
    EXPECT_THROW(sample(0, 1), std::invalid_argument);
}

TEST(Sample, EntryMoments)
{
    const std::size_t N = 64, S = 100;
    double re = 0, im = 0, sq = 0;
    for (std::size_t s = 0; s < S; ++s) {
        const auto X = sample(N, 42, s).X;
        for (Eigen::Index j = 0; j < X.rows(); ++j)
            for (Eigen::Index k = 0; k < X.cols(); ++k) {
                re += X(j, k).real();
                im += X(j, k).imag();
                sq += std::norm(X(j, k));
            }
    }
    const double count = static_cast<double>(N * N * S);
    // Each part has variance 1/(2N).
    const double se = std::sqrt(1.0 / (2.0 * N) / count);
    EXPECT_LT(std::abs(re / count), 4 * se);
    EXPECT_LT(std::abs(im / count), 4 * se);
    EXPECT_NEAR(sq / count * N, 1.0, 0.01);
}

TEST(Trace, EmptyAndSmall)
{
    const auto X = sample(8, 1).X;
    EXPECT_EQ(normalized_trace(X, Word("")), std::complex<double>(1.0));
    const std::complex<double> t = normalized_trace(X, Word("10"));
    EXPECT_NEAR(t.imag(), 0.0, 1e-12);
    EXPECT_NEAR(t.real(), X.squaredNorm() / 8.0, 1e-12);
}

TEST(Moments, NestedWordsPass)
{
    for (int n = 1; n <= 3; ++n) {
        const Word w = Word::from_ones_zeros({n}, {n});
        const MomentComparison c = compare(w, 64, 60, 42);
        EXPECT_TRUE(c.pass) << w.str() << " rel " << c.rel_error;
    }
}

TEST(Moments, CatalanWordNearFive)
{
    const MomentEstimate e = moment_estimate(Word("101010"), 96, 80, 42);
    EXPECT_EQ(e.phi, 5);
    EXPECT_NEAR(e.mean, 5.0, 0.5);
    EXPECT_LT(std::abs(e.mean_imag), 0.2);
}

TEST(Moments, UnbalancedMeanIsZero)
{
    const MomentEstimate e = moment_estimate(Word("110"), 64, 60, 42);
    EXPECT_EQ(e.phi, 0);
    EXPECT_LT(std::abs(e.mean), 0.1);
}

TEST(Moments, ZeroToleranceAlwaysFlags)
{
    const MomentEstimate e = moment_estimate(Word("10"), 32, 10, 1);
    EXPECT_FALSE(compare(e, 0.0).pass);
    EXPECT_TRUE(compare(e, 0.5).pass);
}

TEST(Moments, Reproducible)
{
    const MomentEstimate a = moment_estimate(Word("1100"), 32, 20, 9);
    const MomentEstimate b = moment_estimate(Word("1100"), 32, 20, 9, 3);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
}

TEST(Moments, BatchedAgreesWithDirect)
{
    const std::vector<Word> words{Word("10"), Word("1100"), Word("110100"), Word("11001010"), Word("1")};
    const auto batched = moment_estimates_batched(words, 24, 12, 5, 2);
    ASSERT_EQ(batched.size(), words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        const MomentEstimate d = moment_estimate(words[i], 24, 12, 5);
        EXPECT_NEAR(batched[i].mean, d.mean, 1e-9 * std::max(1.0, std::abs(d.mean))) << words[i].str();
    }
    EXPECT_THROW(moment_estimates_batched({Word("1111100000")}, 8, 2, 1), std::invalid_argument);
}

TEST(Moments, ErrorShrinksWithDimension)
{
    // Finite-N bias for a word with several pairings.
    const Word w("11001100");
    const double small = compare(moment_estimate(w, 16, 200, 42)).rel_error;
    const double large = compare(moment_estimate(w, 128, 200, 42)).rel_error;
    EXPECT_LT(large, small);
}

TEST(Moments, BudgetGuard)
{
    EXPECT_THROW(moment_estimate(Word("10"), 4096, 1000, 1), std::length_error);
}
