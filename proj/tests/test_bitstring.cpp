#include <gtest/gtest.h>

#include <set>

#include "ncpair/bitstring.hpp"

using namespace ncpair;

namespace {

std::string joined(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

TEST(Decompose, ReadsRuns)
{
    const RunProfile p = Word("110100").profile();
    EXPECT_EQ(p.leading_zeros, 0);
    EXPECT_EQ(p.ones, (std::vector<int>{2, 1}));
    EXPECT_EQ(p.zeros, (std::vector<int>{1, 2}));
    EXPECT_TRUE(p.strict());

    const RunProfile q = Word("0011").profile();
    EXPECT_EQ(q.leading_zeros, 2);
    EXPECT_EQ(q.ones, (std::vector<int>{2}));
    EXPECT_EQ(q.zeros, (std::vector<int>{0}));
    EXPECT_FALSE(q.strict());

    const RunProfile f = parse_word("1^4 0^2 1^2 0^5 1^2 0").profile();
    EXPECT_EQ(f.ones, (std::vector<int>{4, 2, 2}));
    EXPECT_EQ(f.zeros, (std::vector<int>{2, 5, 1}));
}

TEST(Decompose, RoundTrips)
{
    for (const char* s : {"", "0", "1", "0011", "110100", "0101101000"}) {
        const Word w(s);
        EXPECT_EQ(recompose(decompose(w)), w) << s;
    }
    EXPECT_TRUE(Word("").profile().ones.empty());
}

TEST(Symmetry, Examples)
{
    EXPECT_EQ(rotate(Word("1100"), 3).str(), "0011");
    EXPECT_EQ(rotate(Word("1100"), 1).str(), "1100");
    EXPECT_EQ(reflect(Word("1101")).str(), "1011");
    EXPECT_EQ(negate(Word("1100")).str(), "0011");
    EXPECT_THROW(rotate(Word("1100"), 0), std::out_of_range);
    EXPECT_THROW(rotate(Word("1100"), 5), std::out_of_range);
    EXPECT_EQ(apply_symmetry(Word("1101"), Symmetry::reflection()).str(), "1011");
}

TEST(Symmetry, CanonicalForm)
{
    EXPECT_EQ(canonical_form(Word("0011")).str(), "0011");
    for (const char* s : {"1100", "0110", "1001"})
        EXPECT_EQ(canonical_form(Word(s)).str(), "0011") << s;
    EXPECT_EQ(canonical_form(Word("10")), canonical_form(Word("01")));
    // Every member of an orbit shares the key.
    const Word w("110100");
    const Word key = canonical_form(w);
    for (std::size_t k = 1; k <= w.size(); ++k) {
        EXPECT_EQ(canonical_form(rotate(w, k)), key);
        EXPECT_EQ(canonical_form(negate(reflect(rotate(w, k)))), key);
    }
}

TEST(Symmetry, StrictRotation)
{
    EXPECT_EQ(strict_rotation(Word("0011")).str(), "1100");
    EXPECT_EQ(strict_rotation(Word("010110")).str(), "101100");
    EXPECT_TRUE(strict_rotation(Word("00101101")).profile().strict());
}

TEST(Heights, PathExample)
{
    const HeightProfile h = heights(parse_word("1^4 0^2 1^2 0^5 1^2 0"));
    EXPECT_EQ(joined(h.heights), "2 3 4 5 5 4 4 5 5 4 3 2 1 1 2 2");
    EXPECT_EQ(h.max_height, 5);
}

TEST(Heights, Small)
{
    EXPECT_EQ(joined(heights(Word("1100")).heights), "1 2 2 1");
    EXPECT_EQ(heights(Word("1100")).max_height, 2);
    EXPECT_EQ(joined(heights(Word("1010")).heights), "1 1 1 1");
    EXPECT_EQ(heights(Word("1010")).max_height, 1);
    EXPECT_TRUE(heights(Word("")).heights.empty());
}

TEST(Heights, FormulaForStaircase)
{
    // (1^k 0)^l (1 0^k)^l at k = l = 2
    EXPECT_EQ(heights(parse_word("1^2 0 1^2 0 1 0^2 1 0^2")).max_height, 3);
}

TEST(PeakReduce, TrimsUniqueTallestPeak)
{
    EXPECT_EQ(peak_reduce(parse_word("1 0 1^2 0^2 1^3 0^3")), parse_word("1 0 1^2 0^2 1^2 0^2"));
}

TEST(PeakReduce, LeavesTiesAlone)
{
    EXPECT_EQ(peak_reduce(parse_word("1^2 0^2 1^2 0^2")), parse_word("1^2 0^2 1^2 0^2"));
    EXPECT_EQ(peak_reduce(parse_word("1^3 0^3")), parse_word("1^3 0^3"));
}

TEST(Generate, Counts)
{
    EXPECT_EQ(generate_balanced(2, 1), (std::vector<Word>{Word("1100")}));
    EXPECT_EQ(generate_balanced(3, 2).size(), 4u);
    EXPECT_EQ(generate_balanced(4, 2).size(), 9u);
    EXPECT_TRUE(generate_balanced(2, 3).empty());
    EXPECT_EQ(all_balanced_words(6).size(), 924u);
    std::set<Word> distinct;
    for_each_balanced(5, 3, [&](const Word& w) {
        EXPECT_TRUE(w.balanced());
        EXPECT_TRUE(w.profile().strict());
        EXPECT_EQ(w.profile().runs(), 3u);
        distinct.insert(w);
    });
    EXPECT_EQ(distinct.size(), 36u);  // binom(4,2)^2
}

TEST(Parse, Notations)
{
    EXPECT_EQ(parse_word("110100").str(), "110100");
    EXPECT_EQ(parse_word("2,1,1,2").str(), "110100");
    EXPECT_EQ(parse_word(" 1^2 0 1 0^2 ").str(), "110100");
    EXPECT_EQ(run_notation(Word("110100")), "2,1,1,2");
    EXPECT_EQ(parse_word(run_notation(Word("0110"))).str(), "0110");
}

TEST(Parse, ErrorsCarryPosition)
{
    try {
        parse_word("11x0");
        FAIL() << "no throw";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
    EXPECT_THROW(parse_word("1^ 0"), ParseError);
    EXPECT_THROW(parse_word("2,,1"), ParseError);
    EXPECT_THROW(parse_word("2,1,"), ParseError);
}
