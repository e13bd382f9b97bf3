#ifndef NCPAIR_CATALAN_WORDS_HPP
#define NCPAIR_CATALAN_WORDS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitstring.hpp"
#include "count.hpp"
#include "pairing.hpp"
#include "phi.hpp"
#include "trees.hpp"

namespace ncpair {

/// Every prefix sum of a is at least the matching prefix sum of b.
template <class T>
bool dominates(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: sequences have different lengths");
    T sa{}, sb{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb)
            return false;
    }
    return true;
}

/// Rot_i(a) = (a_i, ..., a_r, a_1, ..., a_{i-1}), 1-based.
template <class T>
std::vector<T> rotate_sequence(const std::vector<T>& a, std::size_t i)
{
    if (a.empty())
        return a;
    if (i < 1 || i > a.size())
        throw std::out_of_range("rotation index outside [1, r]");
    std::vector<T> out(a.begin() + static_cast<long>(i - 1), a.end());
    out.insert(out.end(), a.begin(), a.begin() + static_cast<long>(i - 1));
    return out;
}

/// Smallest i with Rot_i(g) dominating Rot_i(f). Takes h = r(g - f) - c with
/// c = sum g - sum f, so sum h = 0, and returns the first argmin of the
/// partial sums H(i) = h_1 + ... + h_{i-1}.
inline std::size_t cyclic_dom_rotation(const std::vector<long>& f, const std::vector<long>& g)
{
    if (f.size() != g.size() || f.empty())
        throw std::invalid_argument("cyclic_dom_rotation: sequences must be nonempty and of equal length");
    const long sf = std::accumulate(f.begin(), f.end(), 0L);
    const long sg = std::accumulate(g.begin(), g.end(), 0L);
    if (sf > sg)
        throw std::invalid_argument("cyclic_dom_rotation: sum f exceeds sum g");
    const long r = static_cast<long>(f.size());
    const long c = sg - sf;
    long H = 0, best = 0;
    std::size_t arg = 1;
    for (std::size_t i = 1; i < f.size(); ++i) {
        H += r * (g[i - 1] - f[i - 1]) - c;
        if (H < best) {
            best = H;
            arg = i + 1;
        }
    }
    return arg;
}

// ---------------------------------------------------------------------------
// Catalan words

/// w(n, m) = 1^{n_1} 0^{m_1} ... 1^{n_r} 0^{m_r} with n dominating m and equal
/// totals. Zero runs m_i = 0 are allowed.
class CatalanWord {
  public:
    CatalanWord(std::vector<int> ones, std::vector<int> zeros) : ones_(std::move(ones)), zeros_(std::move(zeros))
    {
        if (ones_.size() != zeros_.size() || ones_.empty())
            throw std::invalid_argument("CatalanWord: ones and zeros must be nonempty and of equal length");
        for (std::size_t i = 0; i < ones_.size(); ++i)
            if (ones_[i] < 1 || zeros_[i] < 0)
                throw std::invalid_argument("CatalanWord: need n_i >= 1 and m_i >= 0");
        long prefix = 0;
        for (std::size_t i = 0; i < ones_.size(); ++i) {
            prefix += ones_[i] - zeros_[i];
            if (prefix < 0)
                throw std::invalid_argument("CatalanWord: prefix " + std::to_string(i + 1) + " has more 0s than 1s");
        }
        if (prefix != 0)
            throw std::invalid_argument("CatalanWord: totals differ");
    }

    const std::vector<int>& ones() const noexcept { return ones_; }
    const std::vector<int>& zeros() const noexcept { return zeros_; }
    std::size_t runs() const noexcept { return ones_.size(); }
    Word word() const { return Word::from_ones_zeros(ones_, zeros_); }

    bool operator==(const CatalanWord&) const = default;
    auto operator<=>(const CatalanWord&) const = default;

  private:
    std::vector<int> ones_;
    std::vector<int> zeros_;
};

inline std::string to_string(const CatalanWord& c) { return run_notation(c.word()); }

namespace detail {

inline void require_positive(const std::vector<int>& n, const char* who)
{
    if (n.empty())
        throw std::invalid_argument(std::string(who) + ": empty sequence");
    for (int v : n)
        if (v < 1)
            throw std::invalid_argument(std::string(who) + ": entries must be positive");
}

}  // namespace detail

/// |CF(n)| by dynamic programming over the running zero total.
inline Count count_CF(const std::vector<int>& n)
{
    detail::require_positive(n, "count_CF");
    const long N = std::accumulate(n.begin(), n.end(), 0L);
    // ways[s] = number of (m_1..m_i) with prefix sums dominated and total s.
    std::vector<Count> ways(static_cast<std::size_t>(N) + 1, Count(0));
    ways[0] = 1;
    long cap = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
        cap += n[i];
        std::vector<Count> next(ways.size(), Count(0));
        Count running = 0;
        // next[t] = sum of ways[s] for s <= t, restricted to t <= cap.
        for (long t = 0; t <= cap; ++t) {
            running += ways[static_cast<std::size_t>(t)];
            next[static_cast<std::size_t>(t)] = running;
        }
        ways = std::move(next);
    }
    // m_r takes up the remainder, which is nonnegative for every reachable total.
    Count total = 0;
    for (const Count& c : ways)
        total += c;
    return total;
}

inline void for_each_CF(const std::vector<int>& n, const std::function<void(const CatalanWord&)>& fn)
{
    detail::require_positive(n, "enumerate_CF");
    const std::size_t r = n.size();
    const int N = std::accumulate(n.begin(), n.end(), 0);
    std::vector<int> m(r, 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int ones_so_far, int zeros_so_far) {
        if (i + 1 == r) {
            m[i] = N - zeros_so_far;
            fn(CatalanWord(n, m));
            return;
        }
        const int limit = ones_so_far + n[i] - zeros_so_far;
        for (int v = 0; v <= limit; ++v) {
            m[i] = v;
            rec(i + 1, ones_so_far + n[i], zeros_so_far + v);
        }
    };
    rec(0, 0, 0);
}

inline std::vector<CatalanWord> enumerate_CF(const std::vector<int>& n)
{
    std::vector<CatalanWord> out;
    for_each_CF(n, [&](const CatalanWord& c) { out.push_back(c); });
    return out;
}

// ---------------------------------------------------------------------------
// Word families

/// 0^{m_0} 1^{n_1} 0^{m_1} ... 1^{n_r} 0^{m_r}, m_i >= 0, balanced.
inline bool in_W(const Word& w, const std::vector<int>& n)
{
    if (n.empty() || !w.balanced())
        return false;
    for (int v : n)
        if (v < 1)
            return false;
    const long N = std::accumulate(n.begin(), n.end(), 0L);
    if (static_cast<long>(w.count_ones()) != N)
        return false;
    std::size_t pos = 0;
    for (int block : n) {
        while (pos < w.size() && !w[pos])
            ++pos;
        for (int k = 0; k < block; ++k, ++pos)
            if (pos >= w.size() || !w[pos])
                return false;
    }
    return true;
}

/// 0^a 1^{n_1} 0^{n_1} ... 1^{n_r} 0^{n_r - a} with 0 <= a <= n_r.
inline bool in_W_star(const Word& w, const std::vector<int>& n)
{
    if (n.empty())
        return false;
    for (int a = 0; a <= n.back(); ++a) {
        std::vector<int> zeros = n;
        zeros.back() -= a;
        if (Word::from_ones_zeros(n, zeros, a) == w)
            return true;
    }
    return false;
}

inline void for_each_W(const std::vector<int>& n, const std::function<void(const Word&)>& fn)
{
    detail::require_positive(n, "W(n)");
    const std::size_t r = n.size();
    const int N = std::accumulate(n.begin(), n.end(), 0);
    std::vector<int> m(r + 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == r) {
            m[r] = left;
            std::vector<int> zeros(m.begin() + 1, m.end());
            fn(Word::from_ones_zeros(n, zeros, m[0]));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            m[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, N);
}

inline std::vector<Word> enumerate_W(const std::vector<int>& n)
{
    std::vector<Word> out;
    for_each_W(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

inline std::vector<Word> enumerate_W_star(const std::vector<int>& n)
{
    detail::require_positive(n, "W*(n)");
    std::vector<Word> out;
    for (int a = 0; a <= n.back(); ++a) {
        std::vector<int> zeros = n;
        zeros.back() -= a;
        out.push_back(Word::from_ones_zeros(n, zeros, a));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pairings and labeled trees

namespace detail {

struct TreeParts {
    std::vector<int> degrees;
    std::vector<Label> labels;
};

// seq holds 0-based positions of one closed region of the word, in order.
inline TreeParts region_to_tree(const Word& w, const std::vector<int>& partner, std::vector<int> seq,
                                const std::vector<int>& n)
{
    std::size_t lead = 0;
    while (lead < seq.size() && !w[static_cast<std::size_t>(seq[lead])])
        ++lead;
    std::rotate(seq.begin(), seq.begin() + static_cast<long>(lead), seq.end());

    const int n1 = n.front();
    std::vector<char> in_y(w.size(), 0);
    for (int k = 0; k < n1; ++k) {
        if (!w[static_cast<std::size_t>(seq[static_cast<std::size_t>(k)])])
            throw std::invalid_argument("word is not in W(n): first block too short");
        in_y[static_cast<std::size_t>(partner[static_cast<std::size_t>(seq[static_cast<std::size_t>(k)])])] = 1;
    }

    Label label{0};
    std::vector<std::vector<int>> segments;
    bool in_segment = false;
    for (std::size_t k = static_cast<std::size_t>(n1); k < seq.size(); ++k) {
        if (in_y[static_cast<std::size_t>(seq[k])]) {
            if (in_segment) {
                label.push_back(0);
                in_segment = false;
            }
            ++label.back();
        } else {
            if (!in_segment) {
                segments.emplace_back();
                in_segment = true;
            }
            segments.back().push_back(seq[k]);
        }
    }
    if (in_segment)
        label.push_back(0);

    TreeParts out;
    out.degrees.push_back(static_cast<int>(segments.size()));
    out.labels.push_back(label);
    std::size_t next_block = 1;
    for (const auto& segment : segments) {
        long ones = 0;
        for (int p : segment)
            ones += w[static_cast<std::size_t>(p)];
        std::vector<int> sub;
        while (ones > 0 && next_block < n.size()) {
            ones -= n[next_block];
            sub.push_back(n[next_block++]);
        }
        if (ones != 0 || sub.empty())
            throw std::invalid_argument("word is not in W(n): a region does not hold whole blocks");
        TreeParts child = region_to_tree(w, partner, segment, sub);
        out.degrees.insert(out.degrees.end(), child.degrees.begin(), child.degrees.end());
        out.labels.insert(out.labels.end(), child.labels.begin(), child.labels.end());
    }
    if (next_block != n.size())
        throw std::invalid_argument("word is not in W(n): blocks left over");
    return out;
}

}  // namespace detail

/// T_{w,n}(pi): the labeled tree recording how the first block is paired and
/// what the pairing does inside each region it leaves behind.
inline LabeledTree pairing_to_labeled_tree(const Word& w, const std::vector<int>& n, const Pairing& pi)
{
    if (!in_W(w, n))
        throw std::invalid_argument("pairing_to_labeled_tree: word " + w.str() + " is not in W(n)");
    if (!is_word_pairing(pi, w))
        throw std::invalid_argument("pairing_to_labeled_tree: pairing joins equal bits");
    if (!is_noncrossing(pi))
        throw std::invalid_argument("pairing_to_labeled_tree: pairing is crossing");
    std::vector<int> partner(w.size(), 0);
    for (const auto& [i, j] : pi.pairs()) {
        partner[static_cast<std::size_t>(i - 1)] = j - 1;
        partner[static_cast<std::size_t>(j - 1)] = i - 1;
    }
    std::vector<int> seq(w.size());
    std::iota(seq.begin(), seq.end(), 0);
    detail::TreeParts parts = detail::region_to_tree(w, partner, std::move(seq), n);
    return LabeledTree{PlaneTree(parts.degrees), parts.labels};
}

namespace detail {

inline bool is_weakly_increasing(const std::vector<int>& n)
{
    return std::is_sorted(n.begin(), n.end());
}

inline bool in_LT(const LabeledTree& t, const std::vector<int>& n)
{
    if (t.tree.size() != n.size() || t.labels.size() != n.size())
        return false;
    for (std::size_t i = 0; i < n.size(); ++i)
        if (!is_label(t.labels[i], n[i], t.tree.degrees()[i]))
            return false;
    return true;
}

inline void region_from_tree(const Word& w, const LabeledTree& t, std::size_t v, std::vector<int> seq,
                             std::vector<Pairing::Pair>& pairs)
{
    std::size_t lead = 0;
    while (lead < seq.size() && !w[static_cast<std::size_t>(seq[lead])])
        ++lead;
    std::rotate(seq.begin(), seq.begin() + static_cast<long>(lead), seq.end());

    const Label& label = t.labels[v - 1];
    const int n1 = std::accumulate(label.begin(), label.end(), 0);
    std::vector<int> ys;
    std::size_t cursor = static_cast<std::size_t>(n1);
    const auto& kids = t.tree.children(v);
    for (std::size_t j = 0; j < label.size(); ++j) {
        for (int k = 0; k < label[j]; ++k)
            ys.push_back(seq.at(cursor++));
        if (j < kids.size()) {
            const std::size_t c = kids[j];
            int weight = 0;
            for (std::size_t u = c; u <= t.tree.subtree_end(c); ++u) {
                const Label& lu = t.labels[u - 1];
                weight += std::accumulate(lu.begin(), lu.end(), 0);
            }
            const std::size_t len = 2 * static_cast<std::size_t>(weight);
            if (cursor + len > seq.size())
                throw std::invalid_argument("labeled tree does not fit the word");
            region_from_tree(w, t, c,
                             std::vector<int>(seq.begin() + static_cast<long>(cursor),
                                              seq.begin() + static_cast<long>(cursor + len)),
                             pairs);
            cursor += len;
        }
    }
    if (cursor != seq.size())
        throw std::invalid_argument("labeled tree does not fit the word");
    for (int k = 0; k < n1; ++k)
        pairs.emplace_back(seq[static_cast<std::size_t>(n1 - 1 - k)] + 1, ys[static_cast<std::size_t>(k)] + 1);
}

}  // namespace detail

/// Inverse of pairing_to_labeled_tree for weakly increasing n and w in W*(n).
inline Pairing labeled_tree_to_pairing(const Word& w, const std::vector<int>& n, const LabeledTree& t)
{
    detail::require_positive(n, "labeled_tree_to_pairing");
    if (!detail::is_weakly_increasing(n))
        throw std::invalid_argument("labeled_tree_to_pairing: n must be weakly increasing");
    if (!in_W_star(w, n))
        throw std::invalid_argument("labeled_tree_to_pairing: word " + w.str() + " is not in W*(n)");
    if (!detail::in_LT(t, n))
        throw std::invalid_argument("labeled_tree_to_pairing: tree is not in LT(n)");
    std::vector<int> seq(w.size());
    std::iota(seq.begin(), seq.end(), 0);
    std::vector<Pairing::Pair> pairs;
    detail::region_from_tree(w, t, 1, std::move(seq), pairs);
    Pairing pi(std::move(pairs), w.size());
    if (!is_word_pairing(pi, w) || !is_noncrossing(pi) || !(pairing_to_labeled_tree(w, n, pi) == t))
        throw std::logic_error("labeled_tree_to_pairing: reconstruction failed for " + w.str());
    return pi;
}

/// f_n: the labeled tree of the first-return pairing.
inline LabeledTree word_to_tree(const CatalanWord& c)
{
    const Word w = c.word();
    return pairing_to_labeled_tree(w, c.ones(), first_return(w));
}

/// g_n(T) = 1^{n_1} 0^{l_0} g(T_1) 0^{l_1} ... g(T_d) 0^{l_d}.
inline CatalanWord tree_to_word(const LabeledTree& t)
{
    std::vector<std::pair<int, int>> blocks;  // (ones, trailing zeros)
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        const Label& label = t.labels.at(v - 1);
        const int weight = std::accumulate(label.begin(), label.end(), 0);
        if (weight < 1)
            throw std::invalid_argument("tree_to_word: vertex weights must be positive");
        blocks.emplace_back(weight, label[0]);
        const auto& kids = t.tree.children(v);
        for (std::size_t j = 0; j < kids.size(); ++j) {
            rec(kids[j]);
            blocks.back().second += label[j + 1];
        }
    };
    rec(1);
    std::vector<int> ones, zeros;
    for (const auto& [a, b] : blocks) {
        ones.push_back(a);
        zeros.push_back(b);
    }
    return CatalanWord(std::move(ones), std::move(zeros));
}

// ---------------------------------------------------------------------------
// Inequalities

struct ShiftIdentity {
    Count difference;  // |CF(n')| - |CF(n)|
    Count product;     // |CF(n_1..n_{i-1}, n_i+1)| * |CF(n_{i+1}-1, n_{i+2}..n_r)|
    bool holds() const { return difference == product; }
};

/// n' moves one unit from position i+1 to position i (1-based i).
inline ShiftIdentity shift_difference(const std::vector<int>& n, std::size_t i)
{
    detail::require_positive(n, "shift_difference");
    if (i < 1 || i >= n.size())
        throw std::invalid_argument("shift_difference: need 1 <= i < r");
    if (n[i] < 2)
        throw std::invalid_argument("shift_difference: need n_{i+1} >= 2");
    std::vector<int> shifted = n;
    shifted[i - 1] += 1;
    shifted[i] -= 1;
    std::vector<int> head(n.begin(), n.begin() + static_cast<long>(i));
    head.back() += 1;
    std::vector<int> tail(n.begin() + static_cast<long>(i), n.end());
    tail.front() -= 1;
    return {count_CF(shifted) - count_CF(n), count_CF(head) * count_CF(tail)};
}

struct CFBound {
    std::size_t rotation = 1;
    Count bound;
};

/// phi(n, m) <= |CF(Rot_i(n'))| for the cyclic-domination rotation i.
inline CFBound cf_bound(const std::vector<int>& n, const std::vector<int>& m, const std::vector<int>& nPrime)
{
    detail::require_positive(n, "cf_bound");
    detail::require_positive(nPrime, "cf_bound");
    if (m.size() != n.size() || nPrime.size() != n.size())
        throw std::invalid_argument("cf_bound: n, m and n' must have equal lengths");
    if (std::accumulate(n.begin(), n.end(), 0L) != std::accumulate(m.begin(), m.end(), 0L))
        throw std::invalid_argument("cf_bound: w(n, m) is not balanced");
    const std::vector<long> f(n.begin(), n.end()), g(nPrime.begin(), nPrime.end());
    const std::size_t i = cyclic_dom_rotation(f, g);
    return {i, count_CF(rotate_sequence(nPrime, i))};
}

/// Both sides of phi*(n') <= phi*(n' with n'_i + 1, n'_j - 1), 1-based i < j.
/// Only offered when both sequences are weakly increasing.
inline std::pair<Count, Count> phi_star_shift(const std::vector<int>& nPrime, std::size_t i, std::size_t j)
{
    if (i < 1 || j > nPrime.size() || i >= j)
        throw std::invalid_argument("phi_star_shift: need 1 <= i < j <= r");
    std::vector<int> moved = nPrime;
    moved[i - 1] += 1;
    moved[j - 1] -= 1;
    if (!detail::is_weakly_increasing(nPrime) || !detail::is_weakly_increasing(moved) || moved[j - 1] < 1)
        throw std::invalid_argument("phi_star_shift: both sequences must be weakly increasing and positive");
    return {phi_star(nPrime), phi_star(moved)};
}

}  // namespace ncpair

#endif  // NCPAIR_CATALAN_WORDS_HPP
