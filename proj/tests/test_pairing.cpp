#include <gtest/gtest.h>

#include "ncpair/pairing.hpp"

using namespace ncpair;

TEST(Noncrossing, Examples)
{
    EXPECT_TRUE(is_noncrossing(parse_pairing("1-4,2-3", 4)));
    EXPECT_FALSE(is_noncrossing(parse_pairing("1-3,2-4", 4)));
    EXPECT_TRUE(is_noncrossing(parse_pairing("1-2,3-4", 4)));
}

TEST(WordPairing, Examples)
{
    EXPECT_TRUE(is_word_pairing(parse_pairing("1-4,2-3", 4), Word("1100")));
    EXPECT_FALSE(is_word_pairing(parse_pairing("1-2,3-4", 4), Word("1100")));
    EXPECT_TRUE(is_word_pairing(parse_pairing("1-2,3-4", 4), Word("1010")));
    EXPECT_THROW(is_word_pairing(parse_pairing("1-2", 2), Word("1010")), std::invalid_argument);
}

TEST(Enumerate, SmallWords)
{
    const auto a = enumerate_pairings(Word("1100"));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(to_string(a[0]), "1-4,2-3");

    const auto b = enumerate_pairings(Word("1010"));
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(to_string(b[0]), "1-2,3-4");
    EXPECT_EQ(to_string(b[1]), "1-4,2-3");

    EXPECT_EQ(enumerate_pairings(Word("101010")).size(), 5u);
    EXPECT_TRUE(enumerate_pairings(Word("110")).empty());
    EXPECT_TRUE(enumerate_pairings(Word("1110")).empty());
}

TEST(Enumerate, EveryListedPairingIsValid)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_balanced_words(n))
            for_each_pairing(w, [&](const Pairing& p) {
                EXPECT_TRUE(is_noncrossing(p));
                EXPECT_TRUE(is_word_pairing(p, w));
            });
}

TEST(Oracle, Examples)
{
    EXPECT_EQ(oracle_count(Word("110010")), 2);
    EXPECT_EQ(oracle_count(parse_word("1^2 0^2 1^2 0^2")), 3);
    EXPECT_EQ(oracle_count(Word("10")), 1);
    EXPECT_EQ(oracle_count(Word("1")), 0);
    EXPECT_THROW(oracle_count(Word(std::string(18, '1'))), std::length_error);
}

TEST(Oracle, RotationCommutesWithPairings)
{
    const Word w("110100");
    for (std::size_t k = 1; k <= w.size(); ++k) {
        EXPECT_EQ(oracle_count(rotate(w, k)), oracle_count(w));
        for (const auto& p : enumerate_pairings(w))
            EXPECT_TRUE(is_word_pairing(rotate(p, k), rotate(w, k)));
    }
}

TEST(FirstReturn, Examples)
{
    EXPECT_EQ(to_string(first_return(Word("1100"))), "1-4,2-3");
    EXPECT_EQ(to_string(first_return(Word("1010"))), "1-2,3-4");
    EXPECT_EQ(to_string(first_return(Word("110010"))), "1-4,2-3,5-6");
    EXPECT_THROW(first_return(Word("0110")), std::invalid_argument);
}

TEST(ParsePairing, Errors)
{
    EXPECT_THROW(parse_pairing("1-", 2), ParseError);
    EXPECT_THROW(parse_pairing("1+2", 2), ParseError);
    EXPECT_THROW(parse_pairing("1-2 3-4", 4), ParseError);
}
