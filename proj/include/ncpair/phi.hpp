#ifndef NCPAIR_PHI_HPP
#define NCPAIR_PHI_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitstring.hpp"
#include "count.hpp"

namespace ncpair {

/// One term of the first-1 recurrence: the first 1 pairs into zero-run k.
/// The term is left(profile) * right(profile), or zero when `vanishes`.
struct SplitTerm {
    std::size_t k = 0;  // 1-based run index
    long offset = 0;    // d_k = -(n_1+...+n_k) + (m_1+...+m_k)
    bool vanishes = false;
    RunProfile left;    // 1^{n_1-1} 0^{m_1} ... 1^{n_k} 0^{m_k-d_k-1}
    RunProfile right;   // 0^{d_k} 1^{n_{k+1}} 0^{m_{k+1}} ... 1^{n_r} 0^{m_r}
};

/// Expand a strict balanced profile by where the first 1 is paired.
inline std::vector<SplitTerm> split_terms(const RunProfile& p)
{
    if (!p.strict() || !p.balanced())
        throw std::invalid_argument("split_terms needs a strict balanced run profile");
    const std::size_t r = p.runs();
    std::vector<SplitTerm> terms;
    terms.reserve(r);
    long prefix = 0;
    for (std::size_t k = 0; k < r; ++k) {
        prefix += p.zeros[k] - p.ones[k];
        SplitTerm t;
        t.k = k + 1;
        t.offset = prefix;
        const long tail = p.zeros[k] - prefix - 1;
        t.vanishes = prefix < 0 || tail < 0;
        if (!t.vanishes) {
            t.left.ones.assign(p.ones.begin(), p.ones.begin() + static_cast<long>(k) + 1);
            t.left.zeros.assign(p.zeros.begin(), p.zeros.begin() + static_cast<long>(k) + 1);
            t.left.ones[0] -= 1;
            t.left.zeros[k] = static_cast<int>(tail);
            t.right.leading_zeros = static_cast<int>(prefix);
            t.right.ones.assign(p.ones.begin() + static_cast<long>(k) + 1, p.ones.end());
            t.right.zeros.assign(p.zeros.begin() + static_cast<long>(k) + 1, p.zeros.end());
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

/// Memoized evaluator for phi and phi*. Readers share the tables; inserts
/// take an exclusive lock. Two threads may compute the same entry at once,
/// which is harmless since the value is a pure function of the key.
class PhiEngine {
  public:
    /// phi of any word; unbalanced words give 0, the empty word gives 1.
    Count phi(const Word& w)
    {
        if (w.empty())
            return 1;
        if (!w.balanced())
            return 0;
        const Word key = canonical_form(w);
        {
            std::shared_lock lock(phi_mutex_);
            if (auto it = phi_memo_.find(key.str()); it != phi_memo_.end())
                return it->second;
        }
        Count total = 0;
        for (const SplitTerm& t : split_terms(strict_rotation(key).profile())) {
            if (t.vanishes)
                continue;
            const Count left = phi(recompose(t.left));
            if (left == 0)
                continue;
            total += left * phi(recompose(t.right));
        }
        std::unique_lock lock(phi_mutex_);
        phi_memo_.emplace(key.str(), total);
        return total;
    }

    /// phi* via its own recurrence, rotating the minimum to the front at each step.
    Count phi_star(std::vector<int> n)
    {
        std::erase(n, 0);
        if (n.empty())
            return 1;
        for (int v : n)
            if (v < 0)
                return 0;
        n = canonical_sequence(n);
        {
            std::shared_lock lock(star_mutex_);
            if (auto it = star_memo_.find(n); it != star_memo_.end())
                return it->second;
        }
        const std::size_t r = n.size();
        Count total = 0;
        if (r == 1) {
            total = 1;
        } else {
            for (std::size_t i = 1; i <= r; ++i) {
                std::vector<int> head(n.begin(), n.begin() + static_cast<long>(i));
                head[0] -= 1;
                std::vector<int> tail(n.begin() + static_cast<long>(i), n.end());
                total += phi_star(head) * phi_star(tail);
            }
        }
        std::unique_lock lock(star_mutex_);
        star_memo_.emplace(n, total);
        return total;
    }

    std::size_t memo_size() const
    {
        std::shared_lock lock(phi_mutex_);
        return phi_memo_.size();
    }

    /// Least rotation/reversal of a cyclic sequence; it starts at a minimum.
    static std::vector<int> canonical_sequence(const std::vector<int>& n)
    {
        std::vector<int> best = n;
        const std::size_t r = n.size();
        for (int rev = 0; rev < 2; ++rev) {
            std::vector<int> base = n;
            if (rev)
                std::reverse(base.begin(), base.end());
            for (std::size_t k = 0; k < r; ++k) {
                std::vector<int> cand(r);
                for (std::size_t i = 0; i < r; ++i)
                    cand[i] = base[(k + i) % r];
                if (cand < best)
                    best = std::move(cand);
            }
        }
        return best;
    }

  private:
    mutable std::shared_mutex phi_mutex_;
    std::unordered_map<std::string, Count> phi_memo_;
    mutable std::shared_mutex star_mutex_;
    std::map<std::vector<int>, Count> star_memo_;
};

inline PhiEngine& default_engine()
{
    static PhiEngine engine;
    return engine;
}

inline Count phi(const Word& w) { return default_engine().phi(w); }

inline Count phi(const RunProfile& p)
{
    if (p.leading_zeros < 0)
        return 0;
    for (std::size_t i = 0; i < p.runs(); ++i)
        if (p.ones[i] < 0 || p.zeros[i] < 0)
            return 0;
    return phi(recompose(p));
}

/// phi(a_1, a_2, ..., a_k) = phi(1^{a_1} 0^{a_2} 1^{a_3} ...) with the
/// integer-argument conventions: any negative argument gives 0, zero runs merge.
inline Count phi_args(const std::vector<long>& args)
{
    std::vector<int> exps;
    exps.reserve(args.size());
    for (long a : args) {
        if (a < 0)
            return 0;
        exps.push_back(static_cast<int>(a));
    }
    return phi(Word::from_runs(exps));
}

/// phi*(n_1..n_r) = phi(1^{n_1} 0^{n_1} ... 1^{n_r} 0^{n_r}); phi*() = 1.
inline Count phi_star(const std::vector<int>& n) { return default_engine().phi_star(n); }

namespace detail {

inline std::vector<int> rotate_min_first(const std::vector<int>& n)
{
    const auto it = std::min_element(n.begin(), n.end());
    std::vector<int> out(it, n.end());
    out.insert(out.end(), n.begin(), it);
    return out;
}

}  // namespace detail

/// phi* through the subset expansion
///   sum over S in [2, r-1] of binom(n_1 + 1, |S|+1) * prod of phi* on the blocks
/// cut at 1 and at each element of S. Recursive calls use the same expansion.
inline Count phi_star_subset_expansion(std::vector<int> n)
{
    std::erase(n, 0);
    if (n.empty())
        return 1;
    n = detail::rotate_min_first(n);
    const std::size_t r = n.size();
    if (r == 1)
        return 1;
    if (r == 2)
        return Count(1 + n[0]);
    Count total = 0;
    const std::size_t interior = r - 2;  // candidates 2..r-1
    for (std::uint32_t mask = 0; mask < (1u << interior); ++mask) {
        // Cut points (1-based): 1, then chosen elements of [2, r-1].
        std::vector<std::size_t> cuts{1};
        for (std::size_t b = 0; b < interior; ++b)
            if (mask & (1u << b))
                cuts.push_back(b + 2);
        Count product = binomial(n[0] + 1, static_cast<std::int64_t>(cuts.size()));
        if (product == 0)
            continue;
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            const std::size_t from = cuts[c];  // block is n_{from+1} .. n_{to}
            const std::size_t to = c + 1 < cuts.size() ? cuts[c + 1] : r;
            std::vector<int> block(n.begin() + static_cast<long>(from), n.begin() + static_cast<long>(to));
            product *= phi_star_subset_expansion(block);
        }
        total += product;
    }
    return total;
}

/// 1 + min{n_1, m_1, n_2, m_2} for a balanced two-run word.
inline Count closed_form_2run(long n1, long m1, long n2, long m2)
{
    if (n1 <= 0 || m1 <= 0 || n2 <= 0 || m2 <= 0)
        throw std::invalid_argument("closed_form_2run: exponents must be positive");
    if (n1 + n2 != m1 + m2)
        throw std::invalid_argument("closed_form_2run: word is not balanced");
    return Count(1 + std::min({n1, m1, n2, m2}));
}

/// phi*(n_1, n_2, n_3) = i^2/2 + ij + 3i/2 + j + 1 with i <= j the two smallest.
inline Count closed_form_3run_sym(long n1, long n2, long n3)
{
    if (n1 <= 0 || n2 <= 0 || n3 <= 0)
        throw std::invalid_argument("closed_form_3run_sym: exponents must be positive");
    std::vector<long> v{n1, n2, n3};
    std::sort(v.begin(), v.end());
    const Count i = v[0], j = v[1];
    return exact_div(i * i + 2 * i * j + 3 * i + 2 * j + 2, 2);
}

// ---------------------------------------------------------------------------
// Generating-function fixpoint

/// Coefficients psi(S) of F = 1 + x_0 F x_1 F + x_1 F x_0 F for all words up
/// to a maximum length, computed length by length from the equation alone.
class SeriesTable {
  public:
    static constexpr int max_supported_length = 14;

    explicit SeriesTable(int max_length) : max_length_(max_length)
    {
        if (max_length < 0 || max_length > max_supported_length)
            throw std::invalid_argument("series_fixpoint: max length must be in [0, 14]");
        table_.resize(static_cast<std::size_t>(max_length) + 1);
        table_[0] = {Count(1)};
        for (int L = 1; L <= max_length; ++L) {
            auto& row = table_[static_cast<std::size_t>(L)];
            row.assign(std::size_t{1} << L, Count(0));
            for (std::uint32_t code = 0; code < (1u << L); ++code) {
                // Bit for position p (0-based from the left) is (code >> (L-1-p)) & 1.
                const auto bit = [&](int p) { return (code >> (L - 1 - p)) & 1u; };
                const unsigned first = bit(0);
                Count sum = 0;
                for (int j = 1; j < L; ++j) {
                    if (bit(j) == first)
                        continue;
                    const int inner_len = j - 1;
                    const int outer_len = L - j - 1;
                    const std::uint32_t inner = (code >> (L - j)) & ((1u << inner_len) - 1u);
                    const std::uint32_t outer = code & ((1u << outer_len) - 1u);
                    const Count& a = table_[static_cast<std::size_t>(inner_len)][inner];
                    if (a == 0)
                        continue;
                    sum += a * table_[static_cast<std::size_t>(outer_len)][outer];
                }
                row[code] = std::move(sum);
            }
        }
    }

    int max_length() const noexcept { return max_length_; }

    const Count& coefficient(const Word& w) const
    {
        if (w.size() > static_cast<std::size_t>(max_length_))
            throw std::out_of_range("word longer than the series table");
        std::uint32_t code = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            code = (code << 1) | static_cast<std::uint32_t>(w[i]);
        return table_[w.size()][code];
    }

    std::size_t entries() const
    {
        std::size_t n = 0;
        for (const auto& row : table_)
            n += row.size();
        return n;
    }

  private:
    int max_length_;
    std::vector<std::vector<Count>> table_;
};

inline SeriesTable series_fixpoint(int max_length) { return SeriesTable(max_length); }

// ---------------------------------------------------------------------------

struct AphiSides {
    Count left;   // phi(n_1-a, n_1-1, n_2, n_2, ..., n_r, n_r-(a-1))
    Count right;  // phi(n_1-a, n_1, n_2, n_2, ..., n_r, n_r-a)
};

inline AphiSides aphi_sides(const std::vector<int>& n, int a)
{
    if (n.size() < 2)
        throw std::invalid_argument("aphi identity needs at least two runs");
    if (*std::min_element(n.begin(), n.end()) != n[0])
        throw std::invalid_argument("aphi identity needs n_1 minimal");
    if (a < 0 || a > n[0])
        throw std::invalid_argument("aphi identity needs 0 <= a <= n_1");
    std::vector<long> lhs{n[0] - a, n[0] - 1L};
    std::vector<long> rhs{n[0] - a, static_cast<long>(n[0])};
    for (std::size_t i = 1; i < n.size(); ++i) {
        lhs.insert(lhs.end(), {n[i], n[i]});
        rhs.insert(rhs.end(), {n[i], n[i]});
    }
    lhs.back() = n.back() - (a - 1L);
    rhs.back() = n.back() - static_cast<long>(a);
    return {phi_args(lhs), phi_args(rhs)};
}

inline bool check_aphi_identity(const std::vector<int>& n, int a)
{
    const AphiSides s = aphi_sides(n, a);
    return s.left == s.right;
}

}  // namespace ncpair

#endif  // NCPAIR_PHI_HPP
