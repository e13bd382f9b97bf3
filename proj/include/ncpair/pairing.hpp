#ifndef NCPAIR_PAIRING_HPP
#define NCPAIR_PAIRING_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitstring.hpp"
#include "count.hpp"

namespace ncpair {

/// A perfect matching of positions {1..2n}. Pairs are (smaller, larger) and
/// kept sorted by the smaller endpoint.
class Pairing {
  public:
    using Pair = std::pair<int, int>;

    Pairing() = default;

    Pairing(std::vector<Pair> pairs, std::size_t word_length) : length_(word_length)
    {
        for (auto& p : pairs)
            if (p.first > p.second)
                std::swap(p.first, p.second);
        std::sort(pairs.begin(), pairs.end());
        pairs_ = std::move(pairs);
        std::vector<char> seen(length_ + 1, 0);
        for (const auto& [i, j] : pairs_) {
            if (i < 1 || static_cast<std::size_t>(j) > length_ || i == j)
                throw std::invalid_argument("pair " + std::to_string(i) + "-" + std::to_string(j) +
                                            " outside 1.." + std::to_string(length_));
            if (seen[static_cast<std::size_t>(i)] || seen[static_cast<std::size_t>(j)])
                throw std::invalid_argument("position used twice in pairing");
            seen[static_cast<std::size_t>(i)] = seen[static_cast<std::size_t>(j)] = 1;
        }
        if (2 * pairs_.size() != length_)
            throw std::invalid_argument("pairing does not cover every position");
    }

    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    std::size_t word_length() const noexcept { return length_; }
    std::size_t size() const noexcept { return pairs_.size(); }

    /// Partner of a 1-based position.
    int partner(int position) const
    {
        for (const auto& [i, j] : pairs_) {
            if (i == position)
                return j;
            if (j == position)
                return i;
        }
        throw std::out_of_range("position not in pairing");
    }

    bool operator==(const Pairing&) const = default;
    auto operator<=>(const Pairing&) const = default;

  private:
    std::vector<Pair> pairs_;
    std::size_t length_ = 0;
};

/// "1-4,2-3"
inline std::string to_string(const Pairing& p)
{
    std::string out;
    for (const auto& [i, j] : p.pairs()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(i) + "-" + std::to_string(j);
    }
    return out;
}

inline Pairing parse_pairing(const std::string& text, std::size_t word_length)
{
    std::vector<Pairing::Pair> pairs;
    std::size_t i = 0;
    auto number = [&]() {
        if (i >= text.size() || text[i] < '0' || text[i] > '9')
            throw ParseError("expected a position", i);
        int v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            v = v * 10 + (text[i++] - '0');
        return v;
    };
    while (i < text.size()) {
        const int a = number();
        if (i >= text.size() || text[i] != '-')
            throw ParseError("expected '-'", i);
        ++i;
        const int b = number();
        pairs.emplace_back(a, b);
        if (i < text.size()) {
            if (text[i] != ',')
                throw ParseError("expected ','", i);
            ++i;
        }
    }
    return Pairing(std::move(pairs), word_length);
}

/// No two pairs interleave as i1 < j1 < i2 < j2.
inline bool is_noncrossing(const Pairing& p)
{
    // Scan positions left to right with a stack of open pairs; a closing
    // position must close the most recently opened pair.
    std::vector<int> partner(p.word_length() + 1, 0);
    for (const auto& [i, j] : p.pairs()) {
        partner[static_cast<std::size_t>(i)] = j;
        partner[static_cast<std::size_t>(j)] = i;
    }
    std::vector<int> open;
    for (int pos = 1; pos <= static_cast<int>(p.word_length()); ++pos) {
        const int other = partner[static_cast<std::size_t>(pos)];
        if (other > pos) {
            open.push_back(pos);
        } else {
            if (open.empty() || open.back() != other)
                return false;
            open.pop_back();
        }
    }
    return true;
}

/// Every pair joins a 1 to a 0.
inline bool is_word_pairing(const Pairing& p, const Word& w)
{
    if (p.word_length() != w.size())
        throw std::invalid_argument("pairing length " + std::to_string(p.word_length()) +
                                    " does not match word length " + std::to_string(w.size()));
    for (const auto& [i, j] : p.pairs())
        if (w[static_cast<std::size_t>(i - 1)] == w[static_cast<std::size_t>(j - 1)])
            return false;
    return true;
}

/// Rotate a pairing along with its word: the pairing on Rot_k(w) that
/// corresponds to p on w.
inline Pairing rotate(const Pairing& p, std::size_t k)
{
    const int L = static_cast<int>(p.word_length());
    if (L == 0)
        return p;
    if (k < 1 || static_cast<int>(k) > L)
        throw std::out_of_range("rotation index out of range");
    auto moved = [&](int pos) { return ((pos - static_cast<int>(k)) % L + L) % L + 1; };
    std::vector<Pairing::Pair> out;
    out.reserve(p.size());
    for (const auto& [i, j] : p.pairs())
        out.emplace_back(moved(i), moved(j));
    return Pairing(std::move(out), p.word_length());
}

namespace detail {

// Interval recursion over [lo, hi) (0-based). The first position pairs to each
// admissible j in increasing order; inner interval first, then outer.
inline void enumerate_interval(const std::string& s, int lo, int hi, std::vector<Pairing::Pair>& acc,
                               const std::function<void()>& done)
{
    if (lo >= hi) {
        done();
        return;
    }
    const char first = s[static_cast<std::size_t>(lo)];
    int balance = 0;  // (#first) - (#other) over (lo, j)
    for (int j = lo + 1; j < hi; ++j) {
        const char c = s[static_cast<std::size_t>(j)];
        if (c != first && balance == 0 && ((hi - j - 1) % 2 == 0)) {
            acc.emplace_back(lo + 1, j + 1);
            enumerate_interval(s, lo + 1, j, acc, [&]() { enumerate_interval(s, j + 1, hi, acc, done); });
            acc.pop_back();
        }
        balance += c == first ? 1 : -1;
    }
}

}  // namespace detail

/// Visit every pairing in NC_2(w) in the documented deterministic order.
/// Unbalanced words have none.
inline void for_each_pairing(const Word& w, const std::function<void(const Pairing&)>& fn)
{
    if (!w.balanced())
        return;
    std::vector<Pairing::Pair> acc;
    const std::size_t L = w.size();
    detail::enumerate_interval(w.str(), 0, static_cast<int>(L), acc, [&]() { fn(Pairing(acc, L)); });
}

inline std::vector<Pairing> enumerate_pairings(const Word& w)
{
    std::vector<Pairing> out;
    for_each_pairing(w, [&](const Pairing& p) { out.push_back(p); });
    return out;
}

constexpr std::size_t oracle_max_length = 16;

/// Independent brute-force count: tries every bijection from 1-positions to
/// 0-positions and keeps the non-crossing ones. Refuses words longer than 16.
inline Count oracle_count(const Word& w)
{
    if (w.size() > oracle_max_length)
        throw std::length_error("oracle_count refuses words longer than " +
                                std::to_string(oracle_max_length) + " (got " + std::to_string(w.size()) +
                                ")");
    if (!w.balanced())
        return 0;
    std::vector<int> ones, zeros;
    for (std::size_t i = 0; i < w.size(); ++i)
        (w[i] ? ones : zeros).push_back(static_cast<int>(i));
    Count total = 0;
    std::vector<int> perm = zeros;  // sorted, so next_permutation visits all
    do {
        bool ok = true;
        for (std::size_t a = 0; a < ones.size() && ok; ++a) {
            const int i1 = std::min(ones[a], perm[a]), j1 = std::max(ones[a], perm[a]);
            for (std::size_t b = a + 1; b < ones.size(); ++b) {
                const int i2 = std::min(ones[b], perm[b]), j2 = std::max(ones[b], perm[b]);
                if ((i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok)
            ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// First position where the prefix has more 0s than 1s (1-based), or 0.
inline std::size_t first_dominance_violation(const Word& w)
{
    long level = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        level += w[i] ? 1 : -1;
        if (level < 0)
            return i + 1;
    }
    return 0;
}

/// First-return pairing: each 1 pairs with the nearest later position of the
/// same height. Requires a Catalan (Dyck) word.
inline Pairing first_return(const Word& w)
{
    if (const std::size_t bad = first_dominance_violation(w))
        throw std::invalid_argument("not a Catalan word: prefix of length " + std::to_string(bad) +
                                    " has more 0s than 1s");
    if (!w.balanced())
        throw std::invalid_argument("not a Catalan word: " + std::to_string(w.count_ones()) + " ones vs " +
                                    std::to_string(w.size() - w.count_ones()) + " zeros");
    const auto h = heights(w).heights;
    std::vector<Pairing::Pair> pairs;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i])
            continue;
        std::size_t j = i + 1;
        while (h[j] != h[i])
            ++j;
        pairs.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
    return Pairing(std::move(pairs), w.size());
}

}  // namespace ncpair

#endif  // NCPAIR_PAIRING_HPP
