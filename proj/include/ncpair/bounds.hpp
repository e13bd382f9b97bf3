#ifndef NCPAIR_BOUNDS_HPP
#define NCPAIR_BOUNDS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitstring.hpp"
#include "count.hpp"
#include "pairing.hpp"
#include "parallel.hpp"
#include "phi.hpp"
#include "trees.hpp"

namespace ncpair {

namespace detail {

// Cyclic block sizes (n_1, m_1, ..., n_r, m_r) of a balanced word.
inline std::vector<long> block_sizes(const Word& w)
{
    if (!w.balanced() || w.empty())
        throw std::invalid_argument("bounds need a nonempty balanced word");
    const RunProfile p = strict_rotation(w).profile();
    std::vector<long> b;
    for (std::size_t i = 0; i < p.runs(); ++i) {
        b.push_back(p.ones[i]);
        b.push_back(p.zeros[i]);
    }
    return b;
}

inline Count power(Count base, long e)
{
    Count out = 1;
    while (e-- > 0)
        out *= base;
    return out;
}

}  // namespace detail

/// Cyclic run count r of a balanced word.
inline std::size_t run_count(const Word& w) { return detail::block_sizes(w).size() / 2; }

/// (1 + i)^{r-1}, i the smallest block.
inline Count lower_bound_simple(const Word& w)
{
    const auto b = detail::block_sizes(w);
    const long i = *std::min_element(b.begin(), b.end());
    return detail::power(Count(1 + i), static_cast<long>(b.size() / 2) - 1);
}

/// prod (1 + i_k): at each stage bring the first smallest block to the front,
/// pair it across its neighbour, and merge the neighbour's leftover into the
/// opposite end. Blocks of 0s and 1s play symmetric roles.
inline Count lower_bound_iterated(const Word& w)
{
    std::vector<long> b = detail::block_sizes(w);
    Count bound = 1;
    while (b.size() > 2) {
        const auto it = std::min_element(b.begin(), b.end());
        std::rotate(b.begin(), it, b.end());
        const long i = b[0];
        bound *= (1 + i);
        const long carry = b[1] - i;
        b.erase(b.begin(), b.begin() + 2);
        b.back() += carry;
    }
    return bound;
}

struct HeightBound {
    int h = 0;
    std::size_t r = 0;
    Count fuss;      // C^{(h)}_r
    Rational crude;  // r^{r-1} / r! * (1 + h)^{r-1}
};

inline HeightBound upper_bound_height(const Word& w)
{
    HeightBound out;
    out.r = run_count(w);
    out.h = heights(w).max_height;
    out.fuss = fuss_catalan(out.h, static_cast<std::int64_t>(out.r));
    const long r = static_cast<long>(out.r);
    Count fact = 1;
    for (long k = 2; k <= r; ++k)
        fact *= k;
    out.crude = Rational(detail::power(Count(r), r - 1) * detail::power(Count(1 + out.h), r - 1), fact);
    return out;
}

struct BoundReport {
    Word word;
    std::size_t n = 0;  // half length
    std::size_t r = 0;
    int h = 0;
    long k = 0;  // ceil(n / r)
    Count phi;
    Count lower_simple;
    Count lower_iterated;
    Count upper_height;
    Count upper_main;
    Rational upper_crude;

    bool simple_le_iterated() const { return lower_simple <= lower_iterated; }
    bool iterated_le_phi() const { return lower_iterated <= phi; }
    bool phi_le_main() const { return phi <= upper_main; }
    bool phi_le_height() const { return phi <= upper_height; }
    bool height_le_crude() const { return Rational(upper_height) <= upper_crude; }
    /// Only meaningful when k <= h.
    bool main_le_height() const { return upper_main <= upper_height; }
    bool all_hold() const
    {
        return simple_le_iterated() && iterated_le_phi() && phi_le_main() && phi_le_height() && height_le_crude() &&
               (k > h || main_le_height());
    }
};

inline BoundReport main_theorem_check(const Word& w)
{
    BoundReport rep;
    rep.word = w;
    rep.n = w.size() / 2;
    rep.r = run_count(w);
    const HeightBound hb = upper_bound_height(w);
    rep.h = hb.h;
    rep.k = static_cast<long>((rep.n + rep.r - 1) / rep.r);
    rep.phi = phi(w);
    rep.lower_simple = lower_bound_simple(w);
    rep.lower_iterated = lower_bound_iterated(w);
    rep.upper_height = hb.fuss;
    rep.upper_crude = hb.crude;
    rep.upper_main = fuss_catalan(rep.k, static_cast<std::int64_t>(rep.r));
    return rep;
}

/// 1^{a_1+a_2} 0^{a_2} ... 1^{a_r+a_{r+1}} 0^{a_1+...+a_{r+1}}, for which the
/// iterated lower bound is exact.
inline Word sharp_family(const std::vector<int>& a)
{
    if (a.size() < 2)
        throw std::invalid_argument("sharp_family needs at least two parameters");
    for (int v : a)
        if (v < 1)
            throw std::invalid_argument("sharp_family parameters must be positive");
    const std::size_t r = a.size() - 1;
    std::vector<int> ones, zeros;
    for (std::size_t k = 0; k < r; ++k) {
        ones.push_back(a[k] + a[k + 1]);
        zeros.push_back(a[k + 1]);
    }
    zeros.back() = std::accumulate(a.begin(), a.end(), 0);
    return Word::from_ones_zeros(ones, zeros);
}

/// phi(n, m) and phi*(n) after rotating the run pairs so n_1 is the smallest n.
inline std::pair<Count, Count> phi_and_phi_star(std::vector<int> n, std::vector<int> m)
{
    if (n.size() != m.size() || n.empty())
        throw std::invalid_argument("phi_and_phi_star: n and m must be nonempty and of equal length");
    const auto shift = std::min_element(n.begin(), n.end()) - n.begin();
    std::rotate(n.begin(), n.begin() + shift, n.end());
    std::rotate(m.begin(), m.begin() + shift, m.end());
    return {phi(Word::from_ones_zeros(n, m)), phi_star(n)};
}

// ---------------------------------------------------------------------------
// Conjecture: the most symmetric word maximizes phi

struct OrbitWitness {
    Word word;         // canonical representative
    std::size_t size;  // number of swept words in the orbit
    Count phi;
    bool confirmed = false;  // re-counted independently
};

struct ConjectureReport {
    int n = 0;
    int r = 0;
    int ell = 0;
    int a = 0;
    Word symmetric_word;
    Count bound;  // phi of the symmetric word
    std::size_t words_swept = 0;
    std::size_t orbits = 0;
    Count max_phi;
    std::vector<OrbitWitness> maximizers;
    std::vector<OrbitWitness> counterexamples;

    bool holds() const { return counterexamples.empty(); }
};

/// (1^{l+1} 0^{l+1})^a (1^l 0^l)^{r-a} with n = l r + a.
inline Word most_symmetric_word(int n, int r)
{
    if (r < 1 || r > n)
        throw std::invalid_argument("most_symmetric_word: need 1 <= r <= n");
    const int ell = n / r, a = n % r;
    std::vector<int> ones;
    for (int k = 0; k < r; ++k)
        ones.push_back(k < a ? ell + 1 : ell);
    return Word::from_ones_zeros(ones, ones);
}

/// Independent recount for a surfaced word: brute force when short enough,
/// otherwise the explicit enumeration.
inline Count independent_count(const Word& w)
{
    if (w.size() <= oracle_max_length)
        return oracle_count(w);
    return Count(enumerate_pairings(w).size());
}

inline ConjectureReport verify_conjecture_refined(int n, int r, unsigned threads = 1)
{
    ConjectureReport rep;
    rep.n = n;
    rep.r = r;
    rep.ell = n / r;
    rep.a = n % r;
    rep.symmetric_word = most_symmetric_word(n, r);
    rep.bound = phi(rep.symmetric_word);

    std::map<std::string, std::size_t> orbit_size;
    for_each_balanced(n, r, [&](const Word& w) {
        ++rep.words_swept;
        ++orbit_size[canonical_form(w).str()];
    });
    rep.orbits = orbit_size.size();
    std::vector<std::pair<std::string, std::size_t>> reps(orbit_size.begin(), orbit_size.end());
    std::vector<Count> values(reps.size());
    parallel_for(reps.size(), threads, [&](std::size_t i) { values[i] = phi(Word(reps[i].first)); });

    rep.max_phi = 0;
    for (const Count& v : values)
        rep.max_phi = std::max(rep.max_phi, v);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        OrbitWitness wit{Word(reps[i].first), reps[i].second, values[i], false};
        if (values[i] == rep.max_phi) {
            wit.confirmed = independent_count(wit.word) == wit.phi;
            rep.maximizers.push_back(wit);
        }
        if (values[i] > rep.bound) {
            wit.confirmed = independent_count(wit.word) == wit.phi;
            if (wit.confirmed)
                rep.counterexamples.push_back(wit);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Conjecture: tree polynomials of sigma are dominated by those of id

namespace detail {

// Kuhn's augmenting paths; left vertices tried in index order.
inline std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adj, std::size_t right_size)
{
    std::vector<int> match_right(right_size, -1);
    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (visited[static_cast<std::size_t>(v)])
                continue;
            visited[static_cast<std::size_t>(v)] = 1;
            if (match_right[static_cast<std::size_t>(v)] < 0 ||
                augment(match_right[static_cast<std::size_t>(v)])) {
                match_right[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < adj.size(); ++u) {
        visited.assign(right_size, 0);
        augment(static_cast<int>(u));
    }
    std::vector<int> match_left(adj.size(), -1);
    for (std::size_t v = 0; v < right_size; ++v)
        if (match_right[v] >= 0)
            match_left[static_cast<std::size_t>(match_right[v])] = static_cast<int>(v);
    return match_left;
}

}  // namespace detail

struct TreeConjectureReport {
    Permutation sigma;
    std::vector<TreePolynomial> sigma_polys;  // p_{T, sigma} in tree order
    std::vector<TreePolynomial> id_polys;     // p_{T, id} in tree order
    std::vector<int> tau;                     // tau[T] = matched id-tree, or -1
    std::vector<std::size_t> unmatched;       // trees with no partner
    // Matched pairs whose numeric values disagree with the deduced order
    // somewhere in the sampled range (should never happen).
    std::vector<std::pair<std::size_t, std::vector<int>>> numeric_violations;

    bool perfect() const { return unmatched.empty(); }
};

/// Look for tau with p_{T,sigma} <= p_{tau(T),id} provable by the two rewrite
/// rules, as a perfect matching. Matched pairs are also checked numerically
/// over weakly increasing n' with entries in [0, nPrimeBound].
inline TreeConjectureReport verify_tree_conjecture(const Permutation& sigma, int nPrimeBound = 3)
{
    const std::size_t r = sigma.size();
    if (r < 1)
        throw std::invalid_argument("verify_tree_conjecture: empty permutation");
    TreeConjectureReport rep;
    rep.sigma = sigma;
    const auto trees = plane_trees(static_cast<int>(r));
    const Permutation id = Permutation::identity(r);
    for (const auto& T : trees) {
        rep.sigma_polys.push_back(tree_polynomial(T, sigma));
        rep.id_polys.push_back(tree_polynomial(T, id));
    }
    std::vector<std::vector<int>> adj(trees.size());
    for (std::size_t a = 0; a < trees.size(); ++a)
        for (std::size_t b = 0; b < trees.size(); ++b) {
            const Comparison c = comparable_leq(rep.sigma_polys[a], rep.id_polys[b], static_cast<int>(r));
            if (c == Comparison::leq || c == Comparison::both)
                adj[a].push_back(static_cast<int>(b));
        }
    rep.tau = detail::max_bipartite_matching(adj, trees.size());
    for (std::size_t a = 0; a < trees.size(); ++a)
        if (rep.tau[a] < 0)
            rep.unmatched.push_back(a);

    if (nPrimeBound >= 0) {
        std::vector<int> np(r, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == r) {
                for (std::size_t a = 0; a < trees.size(); ++a) {
                    if (rep.tau[a] < 0)
                        continue;
                    if (rep.sigma_polys[a].evaluate(np) > rep.id_polys[static_cast<std::size_t>(rep.tau[a])].evaluate(np))
                        rep.numeric_violations.emplace_back(a, np);
                }
                return;
            }
            for (int v = i ? np[i - 1] : 0; v <= nPrimeBound; ++v) {
                np[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return rep;
}

}  // namespace ncpair

#endif  // NCPAIR_BOUNDS_HPP
