#ifndef NCPAIR_BITSTRING_HPP
#define NCPAIR_BITSTRING_HPP

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncpair {

/// Raised by the text parsers; carries the 0-based character position.
class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Run decomposition 0^{m_0} 1^{n_1} 0^{m_1} ... 1^{n_r} 0^{m_r}.
///
/// In a decomposition produced from a word every n_i is positive, every
/// m_i with i < r is positive, and m_r is zero exactly when the word ends in 1.
struct RunProfile {
    int leading_zeros = 0;
    std::vector<int> ones;
    std::vector<int> zeros;

    std::size_t runs() const { return ones.size(); }
    long total_ones() const { return std::accumulate(ones.begin(), ones.end(), 0L); }
    long total_zeros() const
    {
        return leading_zeros + std::accumulate(zeros.begin(), zeros.end(), 0L);
    }
    bool balanced() const { return total_ones() == total_zeros(); }
    /// Strict form: starts with 1, ends with 0, every exponent positive.
    bool strict() const
    {
        if (leading_zeros != 0)
            return false;
        for (std::size_t i = 0; i < ones.size(); ++i)
            if (ones[i] <= 0 || zeros[i] <= 0)
                return false;
        return true;
    }
    /// Interleaved integer arguments (n_1, m_1, ..., n_r, m_r); ignores m_0.
    std::vector<int> interleaved() const
    {
        std::vector<int> out;
        out.reserve(2 * ones.size());
        for (std::size_t i = 0; i < ones.size(); ++i) {
            out.push_back(ones[i]);
            out.push_back(zeros[i]);
        }
        return out;
    }
    bool operator==(const RunProfile&) const = default;
};

/// A finite bitstring. Immutable; the run profile is computed once.
class Word {
  public:
    Word() = default;

    /// From '0'/'1' characters.
    explicit Word(std::string bits) : bits_(std::move(bits))
    {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] != '0' && bits_[i] != '1')
                throw ParseError(std::string("invalid bit '") + bits_[i] + "'", i);
        profile_ = decompose_bits(bits_);
    }

    /// 1^{a_1} 0^{a_2} 1^{a_3} ... from interleaved exponents; zero exponents
    /// simply contribute nothing, which merges neighbouring runs.
    static Word from_runs(const std::vector<int>& exponents)
    {
        std::string s;
        char bit = '1';
        for (int e : exponents) {
            if (e < 0)
                throw std::invalid_argument("negative run length");
            s.append(static_cast<std::size_t>(e), bit);
            bit = bit == '1' ? '0' : '1';
        }
        return Word(std::move(s));
    }

    /// 1^{n_1} 0^{m_1} ... 1^{n_r} 0^{m_r}.
    static Word from_ones_zeros(const std::vector<int>& ones, const std::vector<int>& zeros,
                                int leading_zeros = 0)
    {
        if (ones.size() != zeros.size())
            throw std::invalid_argument("ones/zeros length mismatch");
        std::string s(static_cast<std::size_t>(leading_zeros), '0');
        for (std::size_t i = 0; i < ones.size(); ++i) {
            if (ones[i] < 0 || zeros[i] < 0)
                throw std::invalid_argument("negative run length");
            s.append(static_cast<std::size_t>(ones[i]), '1');
            s.append(static_cast<std::size_t>(zeros[i]), '0');
        }
        return Word(std::move(s));
    }

    const std::string& str() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
    const RunProfile& profile() const noexcept { return profile_; }

    std::size_t count_ones() const
    {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
    }
    bool balanced() const { return 2 * count_ones() == bits_.size(); }

    auto operator<=>(const Word& other) const { return bits_ <=> other.bits_; }
    bool operator==(const Word& other) const { return bits_ == other.bits_; }

  private:
    static RunProfile decompose_bits(const std::string& s)
    {
        RunProfile p;
        std::size_t i = 0;
        while (i < s.size() && s[i] == '0')
            ++i;
        p.leading_zeros = static_cast<int>(i);
        while (i < s.size()) {
            int n = 0, m = 0;
            while (i < s.size() && s[i] == '1') {
                ++n;
                ++i;
            }
            while (i < s.size() && s[i] == '0') {
                ++m;
                ++i;
            }
            p.ones.push_back(n);
            p.zeros.push_back(m);
        }
        return p;
    }

    std::string bits_;
    RunProfile profile_;
};

inline RunProfile decompose(const Word& w) { return w.profile(); }

/// Inverse of decompose.
inline Word recompose(const RunProfile& p)
{
    return Word::from_ones_zeros(p.ones, p.zeros, p.leading_zeros);
}

// ---------------------------------------------------------------------------
// Symmetries

enum class SymmetryKind { rotate, reflect, negate };

struct Symmetry {
    SymmetryKind kind = SymmetryKind::rotate;
    std::size_t k = 1;  // rotation index, 1-based; Rot_1 is the identity

    static Symmetry rotation(std::size_t k) { return {SymmetryKind::rotate, k}; }
    static Symmetry reflection() { return {SymmetryKind::reflect, 0}; }
    static Symmetry negation() { return {SymmetryKind::negate, 0}; }
};

/// Rot_k(S) = s_k s_{k+1} ... s_{2n} s_1 ... s_{k-1}, for 1 <= k <= |S|.
inline Word rotate(const Word& w, std::size_t k)
{
    if (k < 1 || k > std::max<std::size_t>(w.size(), 1))
        throw std::out_of_range("rotation index " + std::to_string(k) + " outside [1, " +
                                std::to_string(w.size()) + "]");
    if (w.empty())
        return w;
    const std::string& s = w.str();
    return Word(s.substr(k - 1) + s.substr(0, k - 1));
}

inline Word reflect(const Word& w)
{
    std::string s = w.str();
    std::reverse(s.begin(), s.end());
    return Word(std::move(s));
}

inline Word negate(const Word& w)
{
    std::string s = w.str();
    for (char& c : s)
        c = c == '1' ? '0' : '1';
    return Word(std::move(s));
}

inline Word apply_symmetry(const Word& w, const Symmetry& sym)
{
    switch (sym.kind) {
    case SymmetryKind::rotate:
        return rotate(w, sym.k);
    case SymmetryKind::reflect:
        return reflect(w);
    case SymmetryKind::negate:
        return negate(w);
    }
    throw std::logic_error("unknown symmetry");
}

/// Lexicographically least word in the dihedral-and-negation orbit of w.
inline Word canonical_form(const Word& w)
{
    const std::string& s = w.str();
    const std::size_t L = s.size();
    if (L == 0)
        return w;
    std::string best = s;
    std::string cand(L, '0');
    for (int variant = 0; variant < 4; ++variant) {
        const bool rev = variant & 1;
        const bool neg = variant & 2;
        for (std::size_t k = 0; k < L; ++k) {
            for (std::size_t i = 0; i < L; ++i) {
                std::size_t src = (k + i) % L;
                if (rev)
                    src = L - 1 - src;
                char c = s[src];
                cand[i] = neg ? (c == '1' ? '0' : '1') : c;
            }
            if (cand < best)
                best = cand;
        }
    }
    return Word(std::move(best));
}

/// Rotate leading zeros to the back, so a balanced nonempty word becomes
/// strict 1^{n_1} 0^{m_1} ... 1^{n_r} 0^{m_r}.
inline Word strict_rotation(const Word& w)
{
    const int m0 = w.profile().leading_zeros;
    if (m0 == 0 || static_cast<std::size_t>(m0) == w.size())
        return w;
    return rotate(w, static_cast<std::size_t>(m0) + 1);
}

// ---------------------------------------------------------------------------
// Heights

struct HeightProfile {
    std::vector<int> heights;  // h_1..h_{2n}
    int max_height = 0;        // h(S)
    int min_shift = 0;         // m = min_i Y_i
};

inline HeightProfile heights(const Word& w)
{
    HeightProfile hp;
    if (w.empty())
        return hp;
    std::vector<int> y(w.size());
    int level = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        level += w[i] ? 1 : -1;
        y[i] = level;
    }
    hp.min_shift = *std::min_element(y.begin(), y.end());
    hp.heights.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        hp.heights[i] = w[i] ? y[i] - hp.min_shift : y[i] - hp.min_shift + 1;
    hp.max_height = *std::max_element(hp.heights.begin(), hp.heights.end());
    return hp;
}

// ---------------------------------------------------------------------------
// Peak reduction

namespace detail {

// Cyclic runs of a balanced word that contains both letters. Each entry is
// (start position, length, bit); consecutive entries alternate bits and the
// first starts at a 1 that follows a 0 cyclically.
struct CyclicRun {
    std::size_t start;
    std::size_t length;
    int bit;
};

inline std::vector<CyclicRun> cyclic_runs(const Word& w)
{
    std::vector<CyclicRun> runs;
    const std::size_t L = w.size();
    std::size_t origin = 0;
    while (origin < L && !(w[origin] == 1 && w[(origin + L - 1) % L] == 0))
        ++origin;
    if (origin == L)
        return runs;
    std::size_t i = 0;
    while (i < L) {
        const std::size_t pos = (origin + i) % L;
        const int bit = w[pos];
        std::size_t len = 0;
        while (i < L && w[(origin + i) % L] == bit) {
            ++len;
            ++i;
        }
        runs.push_back({pos, len, bit});
    }
    return runs;
}

// Positions to delete to flatten the unique tallest peak (or, on the negated
// word, the unique lowest valley). Empty when there is no unique extremum.
inline std::vector<std::size_t> peak_trim_positions(const Word& w)
{
    const auto runs = cyclic_runs(w);
    if (runs.size() < 4)
        return {};
    const HeightProfile hp = heights(w);
    const std::size_t L = w.size();
    // Peak k: ones run 2k followed by zeros run 2k+1; apex height = height of
    // the last 1 of the ones run.
    std::vector<int> apex;
    for (std::size_t k = 0; k + 1 < runs.size(); k += 2) {
        const std::size_t last = (runs[k].start + runs[k].length - 1) % L;
        apex.push_back(hp.heights[last]);
    }
    const int top = *std::max_element(apex.begin(), apex.end());
    if (std::count(apex.begin(), apex.end(), top) != 1)
        return {};
    int second = 0;
    std::size_t which = 0;
    for (std::size_t k = 0; k < apex.size(); ++k) {
        if (apex[k] == top)
            which = k;
        else
            second = std::max(second, apex[k]);
    }
    const std::size_t cut = static_cast<std::size_t>(top - second);
    const CyclicRun& up = runs[2 * which];
    const CyclicRun& down = runs[2 * which + 1];
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < cut; ++j) {
        out.push_back((up.start + up.length - 1 - j) % L);
        out.push_back((down.start + j) % L);
    }
    return out;
}

inline Word erase_positions(const Word& w, std::vector<std::size_t> positions)
{
    std::sort(positions.begin(), positions.end());
    std::string s;
    s.reserve(w.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (next < positions.size() && positions[next] == i) {
            ++next;
            continue;
        }
        s.push_back(w.str()[i]);
    }
    return Word(std::move(s));
}

}  // namespace detail

/// Flatten a unique tallest peak to the second-highest peak level, then a
/// unique lowest valley to the second-lowest valley level. Ties leave the
/// corresponding side untouched. The word is treated circularly; deleted
/// bits are removed from their original positions.
inline Word peak_reduce(const Word& w)
{
    if (!w.balanced())
        throw std::invalid_argument("peak_reduce requires a balanced word");
    Word out = detail::erase_positions(w, detail::peak_trim_positions(w));
    // A valley of w is a peak of 1 - w at the same positions.
    out = detail::erase_positions(out, detail::peak_trim_positions(negate(out)));
    return out;
}

// ---------------------------------------------------------------------------
// Sweep driver

namespace detail {

// All compositions of total into parts positive integers, in lexicographic order.
inline void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn)
{
    if (parts <= 0 || total < parts)
        return;
    std::vector<int> c(static_cast<std::size_t>(parts), 1);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int remaining) {
        if (idx + 1 == c.size()) {
            c[idx] = remaining;
            fn(c);
            return;
        }
        const int slots_after = static_cast<int>(c.size() - idx - 1);
        for (int v = 1; v <= remaining - slots_after; ++v) {
            c[idx] = v;
            rec(idx + 1, remaining - v);
        }
    };
    rec(0, total);
}

}  // namespace detail

/// Visit every strict balanced word 1^{n_1}0^{m_1}...1^{n_r}0^{m_r} with
/// sum n_i = sum m_i = n, all exponents >= 1. There are C(n-1, r-1)^2.
inline void for_each_balanced(int n, int r, const std::function<void(const Word&)>& fn)
{
    if (r < 1 || r > n)
        return;
    std::vector<std::vector<int>> comps;
    detail::for_each_composition(n, r, [&](const std::vector<int>& c) { comps.push_back(c); });
    for (const auto& ones : comps)
        for (const auto& zeros : comps)
            fn(Word::from_ones_zeros(ones, zeros));
}

inline std::vector<Word> generate_balanced(int n, int r)
{
    std::vector<Word> out;
    for_each_balanced(n, r, [&](const Word& w) { out.push_back(w); });
    return out;
}

/// Every balanced word (any rotation, not only strict ones) of length 2n.
inline std::vector<Word> all_balanced_words(int n)
{
    std::vector<Word> out;
    const int L = 2 * n;
    std::string s(static_cast<std::size_t>(L), '0');
    for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
        if (std::popcount(mask) != n)
            continue;
        for (int i = 0; i < L; ++i)
            s[static_cast<std::size_t>(i)] = (mask >> (L - 1 - i)) & 1u ? '1' : '0';
        out.emplace_back(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text formats

/// Parse a word from one of:
///   literal bits        "110100"
///   run notation        "2,1,1,2"          (n_1,m_1,n_2,m_2)
///   exponent notation   "1^4 0^2 1^2 0"
inline Word parse_word(std::string_view text)
{
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first])))
        ++first;
    std::size_t last = text.size();
    while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1])))
        --last;
    if (first == last)
        return Word();

    const std::string_view body = text.substr(first, last - first);
    const bool has_caret = body.find('^') != std::string_view::npos;
    const bool has_comma = body.find(',') != std::string_view::npos;

    if (has_caret) {
        std::string bits;
        std::size_t i = first;
        while (i < last) {
            const char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (c != '0' && c != '1')
                throw ParseError(std::string("expected '0' or '1', found '") + c + "'", i);
            ++i;
            long exponent = 1;
            if (i < last && text[i] == '^') {
                ++i;
                if (i >= last || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError("expected exponent after '^'", i);
                exponent = 0;
                while (i < last && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    exponent = exponent * 10 + (text[i] - '0');
                    if (exponent > 1'000'000)
                        throw ParseError("exponent too large", i);
                    ++i;
                }
            }
            bits.append(static_cast<std::size_t>(exponent), c);
        }
        return Word(std::move(bits));
    }

    bool only_bits = true;
    for (char c : body)
        if (c != '0' && c != '1')
            only_bits = false;
    if (only_bits && !has_comma)
        return Word(std::string(body));

    std::vector<int> exps;
    std::size_t i = first;
    while (i < last) {
        while (i < last && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i >= last || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected a nonnegative run length", i);
        long v = 0;
        while (i < last && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000)
                throw ParseError("run length too large", i);
            ++i;
        }
        exps.push_back(static_cast<int>(v));
        while (i < last && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i < last) {
            if (text[i] != ',')
                throw ParseError(std::string("expected ',' found '") + text[i] + "'", i);
            ++i;
            if (i >= last)
                throw ParseError("trailing ','", i - 1);
        }
    }
    return Word::from_runs(exps);
}

/// Run notation of the strict reading n_1,m_1,...; leading zeros are written
/// as an initial "0," pair so the text round-trips through parse_word.
inline std::string run_notation(const Word& w)
{
    const RunProfile& p = w.profile();
    std::string out;
    auto put = [&](int v) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    };
    if (p.leading_zeros > 0) {
        put(0);
        put(p.leading_zeros);
    }
    for (std::size_t i = 0; i < p.runs(); ++i) {
        put(p.ones[i]);
        if (p.zeros[i] > 0 || i + 1 < p.runs())
            put(p.zeros[i]);
    }
    return out;
}

}  // namespace ncpair

#endif  // NCPAIR_BITSTRING_HPP
