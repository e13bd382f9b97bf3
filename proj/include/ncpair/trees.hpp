#ifndef NCPAIR_TREES_HPP
#define NCPAIR_TREES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "count.hpp"

namespace ncpair {

/// Depth-first out-degrees (d_1..d_r) of a rooted plane tree.
using DegreeSequence = std::vector<int>;

inline bool is_catalan_sequence(const DegreeSequence& d)
{
    const long r = static_cast<long>(d.size());
    if (r == 0)
        return false;
    long sum = 0;
    for (long i = 0; i < r; ++i) {
        if (d[static_cast<std::size_t>(i)] < 0)
            return false;
        sum += d[static_cast<std::size_t>(i)];
        if (i + 1 < r && sum < i + 1)
            return false;
    }
    return sum == r - 1;
}

/// All Catalan degree sequences of length r in lexicographic order.
inline std::vector<DegreeSequence> catalan_sequences(int r)
{
    if (r < 1)
        throw std::invalid_argument("catalan_sequences: r must be >= 1");
    std::vector<DegreeSequence> out;
    DegreeSequence d(static_cast<std::size_t>(r), 0);
    std::function<void(int, int)> rec = [&](int i, int sum) {
        if (i == r - 1) {
            d[static_cast<std::size_t>(i)] = r - 1 - sum;
            if (d[static_cast<std::size_t>(i)] >= 0)
                out.push_back(d);
            return;
        }
        // Prefix through i (1-based i+1) must reach i+1.
        for (int v = std::max(0, i + 1 - sum); sum + v <= r - 1; ++v) {
            d[static_cast<std::size_t>(i)] = v;
            rec(i + 1, sum + v);
        }
    };
    rec(0, 0);
    return out;
}

/// Vertices are numbered 1..r depth-first; vertex 1 is the root.
class PlaneTree {
  public:
    explicit PlaneTree(DegreeSequence degrees) : degrees_(std::move(degrees))
    {
        if (!is_catalan_sequence(degrees_))
            throw std::invalid_argument("not a Catalan degree sequence");
        const std::size_t r = degrees_.size();
        children_.assign(r + 1, {});
        parent_.assign(r + 1, 0);
        subtree_end_.assign(r + 1, 0);
        std::size_t next = 2;
        std::function<void(std::size_t)> build = [&](std::size_t v) {
            for (int c = 0; c < degrees_[v - 1]; ++c) {
                const std::size_t child = next++;
                children_[v].push_back(child);
                parent_[child] = v;
                build(child);
            }
            subtree_end_[v] = next - 1;
        };
        build(1);
        boundaries_.push_back(1);
        for (std::size_t c : children_[1])
            boundaries_.push_back(subtree_end_[c]);
    }

    std::size_t size() const noexcept { return degrees_.size(); }
    const DegreeSequence& degrees() const noexcept { return degrees_; }
    int degree(std::size_t v) const { return degrees_.at(v - 1); }
    const std::vector<std::size_t>& children(std::size_t v) const { return children_.at(v); }
    std::size_t parent(std::size_t v) const { return parent_.at(v); }
    /// Last vertex of the subtree rooted at v.
    std::size_t subtree_end(std::size_t v) const { return subtree_end_.at(v); }
    /// i_0 = 1 < i_1 < ... < i_{d_1} = r; root subtree j covers i_{j-1}+1 .. i_j.
    const std::vector<std::size_t>& boundaries() const noexcept { return boundaries_; }

    bool operator==(const PlaneTree& o) const { return degrees_ == o.degrees_; }

  private:
    DegreeSequence degrees_;
    std::vector<std::vector<std::size_t>> children_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> subtree_end_;
    std::vector<std::size_t> boundaries_;
};

inline std::vector<PlaneTree> plane_trees(int r)
{
    std::vector<PlaneTree> out;
    for (auto& d : catalan_sequences(r))
        out.emplace_back(std::move(d));
    return out;
}

// ---------------------------------------------------------------------------
// Labels

/// (l_0..l_d): nonnegative, interior entries >= 1, summing to the weight.
using Label = std::vector<int>;

inline bool is_label(const Label& l, int n, int d)
{
    if (static_cast<int>(l.size()) != d + 1)
        return false;
    long sum = 0;
    for (std::size_t j = 0; j < l.size(); ++j) {
        if (l[j] < 0 || (j > 0 && j + 1 < l.size() && l[j] < 1))
            return false;
        sum += l[j];
    }
    return sum == n;
}

inline Count count_labels(int n, int d)
{
    if (n < 0 || d < 0)
        throw std::invalid_argument("count_labels: negative argument");
    return binomial(n + 1, d);
}

/// Labels of degree d and weight n in lexicographic order.
inline std::vector<Label> enumerate_labels(int n, int d)
{
    if (n < 0 || d < 0)
        throw std::invalid_argument("enumerate_labels: negative argument");
    std::vector<Label> out;
    Label l(static_cast<std::size_t>(d) + 1, 0);
    std::function<void(int, int)> rec = [&](int j, int remaining) {
        if (j == d) {
            l[static_cast<std::size_t>(j)] = remaining;
            out.push_back(l);
            return;
        }
        const int low = j == 0 ? 0 : 1;
        const int reserved = std::max(0, d - j - 1);  // interior slots after j
        for (int v = low; v <= remaining - reserved; ++v) {
            l[static_cast<std::size_t>(j)] = v;
            rec(j + 1, remaining - v);
        }
    };
    rec(0, n);
    return out;
}

struct LabeledTree {
    PlaneTree tree;
    std::vector<Label> labels;  // labels[i-1] belongs to vertex i

    bool operator==(const LabeledTree& o) const { return tree == o.tree && labels == o.labels; }
};

/// |LT(n)|: vertex i of T carries weight n_i.
inline Count count_labeled_trees(const std::vector<int>& n)
{
    if (n.empty())
        throw std::invalid_argument("count_labeled_trees: empty sequence");
    Count total = 0;
    for (const auto& d : catalan_sequences(static_cast<int>(n.size()))) {
        Count term = 1;
        for (std::size_t i = 0; i < n.size() && term != 0; ++i)
            term *= binomial(n[i] + 1, d[i]);
        total += term;
    }
    return total;
}

inline void for_each_labeled_tree(const std::vector<int>& n, const std::function<void(const LabeledTree&)>& fn)
{
    if (n.empty())
        throw std::invalid_argument("enumerate_labeled_trees: empty sequence");
    for (const auto& tree : plane_trees(static_cast<int>(n.size()))) {
        std::vector<std::vector<Label>> options;
        for (std::size_t i = 0; i < n.size(); ++i)
            options.push_back(enumerate_labels(n[i], tree.degrees()[i]));
        LabeledTree lt{tree, std::vector<Label>(n.size())};
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == n.size()) {
                fn(lt);
                return;
            }
            for (const auto& l : options[i]) {
                lt.labels[i] = l;
                rec(i + 1);
            }
        };
        rec(0);
    }
}

inline std::vector<LabeledTree> enumerate_labeled_trees(const std::vector<int>& n)
{
    std::vector<LabeledTree> out;
    for_each_labeled_tree(n, [&](const LabeledTree& t) { out.push_back(t); });
    return out;
}

// ---------------------------------------------------------------------------
// Permutations

class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        std::vector<char> seen(images_.size() + 1, 0);
        for (int v : images_) {
            if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("not a permutation of 1.." + std::to_string(images_.size()));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static Permutation identity(std::size_t r)
    {
        std::vector<int> v(r);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    std::size_t size() const noexcept { return images_.size(); }
    const std::vector<int>& images() const noexcept { return images_; }
    /// sigma(i), 1-based.
    int operator()(std::size_t i) const { return images_.at(i - 1); }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> images_;
};

inline std::string to_string(const Permutation& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p.images()[i]);
    return s + ")";
}

/// Rises weakly to a peak, then falls weakly.
inline bool is_unimodal(const std::vector<int>& a)
{
    std::size_t i = 0;
    while (i + 1 < a.size() && a[i] <= a[i + 1])
        ++i;
    while (i + 1 < a.size() && a[i] >= a[i + 1])
        ++i;
    return i + 1 >= a.size();
}

inline bool is_unimodal(const Permutation& p) { return is_unimodal(p.images()); }

/// Some cyclic rotation of the sequence is unimodal.
inline bool is_cyclically_unimodal(std::vector<int> a)
{
    for (std::size_t k = 0; k < std::max<std::size_t>(a.size(), 1); ++k) {
        if (is_unimodal(a))
            return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return false;
}

inline void for_each_permutation(std::size_t r, const std::function<void(const Permutation&)>& fn)
{
    std::vector<int> v(r);
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

struct TreeLabeling {
    std::vector<int> vertex_labels;  // vertex_labels[i-1] is the label of vertex i
    Permutation sigma_T;
};

/// Label T by a sequence: rotate so the minimum comes first, give it to the
/// root, then hand consecutive blocks to the root's subtrees.
inline std::vector<int> label_tree(const PlaneTree& T, const std::vector<int>& a)
{
    if (a.size() != T.size())
        throw std::invalid_argument("label_tree: sequence length differs from vertex count");
    std::vector<int> labels(T.size(), 0);
    std::function<void(std::size_t, std::vector<int>)> rec = [&](std::size_t v, std::vector<int> seq) {
        const auto it = std::min_element(seq.begin(), seq.end());
        std::rotate(seq.begin(), it, seq.end());
        labels[v - 1] = seq[0];
        std::size_t offset = 1;
        for (std::size_t c : T.children(v)) {
            const std::size_t len = T.subtree_end(c) - c + 1;
            rec(c, std::vector<int>(seq.begin() + static_cast<long>(offset),
                                    seq.begin() + static_cast<long>(offset + len)));
            offset += len;
        }
    };
    rec(1, a);
    return labels;
}

inline TreeLabeling label_by_permutation(const PlaneTree& T, const Permutation& sigma)
{
    if (sigma.size() != T.size())
        throw std::invalid_argument("label_by_permutation: permutation size differs from vertex count");
    auto labels = label_tree(T, sigma.images());
    return {labels, Permutation(labels)};
}

// ---------------------------------------------------------------------------
// Tree polynomials

/// Product of [n'_j]^k = binom(n'_j + 1, k); factors with k = 0 are dropped.
class TreePolynomial {
  public:
    using Factor = std::pair<int, int>;  // (subscript j, exponent k)

    TreePolynomial() = default;
    explicit TreePolynomial(std::vector<Factor> factors)
    {
        for (const auto& f : factors) {
            if (f.second < 0)
                throw std::invalid_argument("negative exponent in tree polynomial");
            if (f.second > 0)
                factors_.push_back(f);
        }
        std::sort(factors_.begin(), factors_.end());
    }

    const std::vector<Factor>& factors() const noexcept { return factors_; }

    int degree() const
    {
        int d = 0;
        for (const auto& f : factors_)
            d += f.second;
        return d;
    }

    std::vector<int> exponent_multiset() const
    {
        std::vector<int> e;
        for (const auto& f : factors_)
            e.push_back(f.second);
        std::sort(e.begin(), e.end());
        return e;
    }

    /// Value at n' (1-based subscripts into nPrime).
    Count evaluate(const std::vector<int>& nPrime) const
    {
        Count v = 1;
        for (const auto& [j, k] : factors_)
            v *= binomial(nPrime.at(static_cast<std::size_t>(j - 1)) + 1, k);
        return v;
    }

    bool operator==(const TreePolynomial&) const = default;
    auto operator<=>(const TreePolynomial&) const = default;

  private:
    std::vector<Factor> factors_;
};

/// "[n1]^2 [n2]^1"; the empty product prints as "1".
inline std::string to_string(const TreePolynomial& p)
{
    if (p.factors().empty())
        return "1";
    std::string s;
    for (const auto& [j, k] : p.factors()) {
        if (!s.empty())
            s += ' ';
        s += "[n" + std::to_string(j) + "]^" + std::to_string(k);
    }
    return s;
}

inline TreePolynomial tree_polynomial(const PlaneTree& T, const Permutation& sigma)
{
    const auto lab = label_by_permutation(T, sigma);
    std::vector<TreePolynomial::Factor> f;
    for (std::size_t i = 1; i <= T.size(); ++i)
        f.emplace_back(lab.sigma_T(i), T.degree(i));
    return TreePolynomial(std::move(f));
}

/// sum over T of prod_i binom(n'_{sigma_T(i)} + 1, d_i).
inline Count phi_star_tree_formula(const std::vector<int>& nPrime, const Permutation& sigma)
{
    if (nPrime.size() != sigma.size())
        throw std::invalid_argument("phi_star_tree_formula: size mismatch");
    for (std::size_t i = 0; i < nPrime.size(); ++i)
        if (nPrime[i] < 0 || (i > 0 && nPrime[i] < nPrime[i - 1]))
            throw std::invalid_argument("phi_star_tree_formula: n' must be weakly increasing and nonnegative");
    Count total = 0;
    for (const auto& T : plane_trees(static_cast<int>(nPrime.size())))
        total += tree_polynomial(T, sigma).evaluate(nPrime);
    return total;
}

enum class Comparison { leq, geq, both, incomparable };

inline std::string to_string(Comparison c)
{
    switch (c) {
    case Comparison::leq:
        return "LEQ";
    case Comparison::geq:
        return "GEQ";
    case Comparison::both:
        return "BOTH";
    case Comparison::incomparable:
        return "INCOMPARABLE";
    }
    return "?";
}

namespace detail {

// Can `from` be rewritten into `to` by moves that never decrease the value?
inline bool rewrites_to(const TreePolynomial& from, const TreePolynomial& to, int r)
{
    using State = std::vector<TreePolynomial::Factor>;
    auto normal = [](State s) {
        std::sort(s.begin(), s.end());
        return s;
    };
    const State target = to.factors();
    std::set<State> seen{from.factors()};
    std::queue<State> queue;
    queue.push(from.factors());
    while (!queue.empty()) {
        State s = std::move(queue.front());
        queue.pop();
        if (s == target)
            return true;
        auto visit = [&](State next) {
            next = normal(std::move(next));
            if (seen.insert(next).second)
                queue.push(std::move(next));
        };
        for (std::size_t a = 0; a < s.size(); ++a) {
            // Raise a subscript: [n_j]^k <= [n_{j+1}]^k.
            if (s[a].first < r) {
                State t = s;
                ++t[a].first;
                visit(std::move(t));
            }
            // Move the larger exponent onto the larger subscript.
            for (std::size_t b = 0; b < s.size(); ++b) {
                if (s[a].first < s[b].first && s[a].second > s[b].second) {
                    State t = s;
                    std::swap(t[a].second, t[b].second);
                    visit(std::move(t));
                }
            }
        }
    }
    return false;
}

}  // namespace detail

/// Decide p <= q and q <= p within the closure of the two rewrite rules.
inline Comparison comparable_leq(const TreePolynomial& p, const TreePolynomial& q, int r)
{
    if (p.exponent_multiset() != q.exponent_multiset())
        return Comparison::incomparable;
    const bool le = detail::rewrites_to(p, q, r);
    const bool ge = detail::rewrites_to(q, p, r);
    if (le && ge)
        return Comparison::both;
    if (le)
        return Comparison::leq;
    if (ge)
        return Comparison::geq;
    return Comparison::incomparable;
}

}  // namespace ncpair

#endif  // NCPAIR_TREES_HPP
