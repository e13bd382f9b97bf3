#ifndef NCPAIR_VERIFY_HPP
#define NCPAIR_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bitstring.hpp"
#include "bounds.hpp"
#include "catalan_words.hpp"
#include "count.hpp"
#include "ginibre.hpp"
#include "pairing.hpp"
#include "parallel.hpp"
#include "phi.hpp"
#include "trees.hpp"

namespace ncpair {

using json = nlohmann::ordered_json;

/// Sweep caps. A cap of 0 means "use the suite default".
struct SuiteConfig {
    int max_n = 0;
    int r = 0;
    std::size_t dim = 128;
    std::size_t samples = 400;
    std::uint64_t seed = 42;
    double tolerance = 0.15;
    unsigned threads = 1;
};

/// Outcome of one suite. Violations are failed theorem checks; findings are
/// conjecture observations and never count as failures.
struct SuiteResult {
    std::string suite;
    json scope = json::object();
    std::size_t checked = 0;
    std::vector<std::string> violations;
    json findings = json::array();
    json summary = json::object();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    double seconds = 0.0;

    bool ok() const { return violations.empty(); }
};

inline json to_json(const SuiteResult& r)
{
    json j;
    j["suite"] = r.suite;
    j["scope"] = r.scope;
    j["checked"] = r.checked;
    j["ok"] = r.ok();
    j["violations"] = r.violations;
    j["findings"] = r.findings;
    j["summary"] = r.summary;
    return j;
}

inline std::string to_csv(const SuiteResult& r)
{
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char ch : s)
            q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out += (i ? "," : "") + quote(cells[i]);
        out += "\n";
    };
    line(r.csv_header);
    for (const auto& row : r.csv_rows)
        line(row);
    return out;
}

inline json to_json(const BoundReport& b)
{
    json j;
    j["word"] = run_notation(b.word);
    j["n"] = b.n;
    j["r"] = b.r;
    j["h"] = b.h;
    j["k"] = b.k;
    j["phi"] = b.phi.str();
    j["lowerSimple"] = b.lower_simple.str();
    j["lowerIterated"] = b.lower_iterated.str();
    j["upperMain"] = b.upper_main.str();
    j["upperHeight"] = b.upper_height.str();
    j["upperCrude"] = b.upper_crude.str();
    j["verdicts"] = {{"simpleLeIterated", b.simple_le_iterated()}, {"iteratedLePhi", b.iterated_le_phi()},
                     {"phiLeMain", b.phi_le_main()},              {"phiLeHeight", b.phi_le_height()},
                     {"heightLeCrude", b.height_le_crude()},      {"mainLeHeight", b.main_le_height()}};
    return j;
}

inline json to_json(const MomentComparison& c)
{
    json j;
    j["word"] = c.estimate.word.str();
    j["N"] = c.estimate.dimension;
    j["samples"] = c.estimate.samples;
    j["mean"] = c.estimate.mean;
    j["stderr"] = c.estimate.std_error;
    j["phi"] = c.estimate.phi.str();
    j["relError"] = c.rel_error;
    j["verdict"] = c.pass ? "pass" : "flag";
    return j;
}

inline json to_json(const ConjectureReport& c)
{
    json j;
    j["scope"] = {{"n", c.n}, {"r", c.r}, {"ell", c.ell}, {"a", c.a}};
    j["symmetricWord"] = run_notation(c.symmetric_word);
    j["bound"] = c.bound.str();
    j["wordsSwept"] = c.words_swept;
    j["orbits"] = c.orbits;
    j["maxPhi"] = c.max_phi.str();
    auto witnesses = [](const std::vector<OrbitWitness>& ws) {
        json a = json::array();
        for (const auto& w : ws)
            a.push_back({{"word", run_notation(w.word)}, {"orbitSize", w.size}, {"phi", w.phi.str()},
                         {"confirmed", w.confirmed}});
        return a;
    };
    j["maximizers"] = witnesses(c.maximizers);
    j["counterexamples"] = witnesses(c.counterexamples);
    return j;
}

namespace detail {

inline int cap(int value, int fallback) { return value > 0 ? value : fallback; }

inline std::string seq_string(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// Every sequence of length r with entries in [lo, hi].
inline void for_each_sequence(int r, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> v(static_cast<std::size_t>(r), lo);
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            fn(v);
            return;
        }
        for (int x = lo; x <= hi; ++x) {
            v[static_cast<std::size_t>(i)] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

inline void for_each_increasing(int r, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn)
{
    for_each_sequence(r, lo, hi, [&](const std::vector<int>& v) {
        if (std::is_sorted(v.begin(), v.end()))
            fn(v);
    });
}

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// ---------------------------------------------------------------------------

/// phi = brute force = enumeration on every balanced word with 2n <= 2 max_n,
/// and the generating-function coefficients agree.
inline SuiteResult verify_oracle(const SuiteConfig& cfg)
{
    detail::Timer timer;
    SuiteResult res;
    res.suite = "oracle";
    const int max_n = std::min(detail::cap(cfg.max_n, 6), 8);
    res.scope = {{"maxN", max_n}};
    res.csv_header = {"word", "phi", "oracle", "enumerated"};
    std::vector<Word> words;
    for (int n = 1; n <= max_n; ++n)
        for (auto& w : all_balanced_words(n))
            words.push_back(std::move(w));
    std::vector<Count> a(words.size()), b(words.size()), c(words.size());
    parallel_for(words.size(), cfg.threads, [&](std::size_t i) {
        a[i] = phi(words[i]);
        b[i] = oracle_count(words[i]);
        c[i] = Count(enumerate_pairings(words[i]).size());
    });
    for (std::size_t i = 0; i < words.size(); ++i) {
        ++res.checked;
        if (a[i] != b[i] || a[i] != c[i])
            res.violations.push_back("phi mismatch on " + words[i].str() + ": " + a[i].str() + " / " + b[i].str() +
                                     " / " + c[i].str());
        res.csv_rows.push_back({words[i].str(), a[i].str(), b[i].str(), c[i].str()});
    }
    const int series_len = std::min(2 * max_n, SeriesTable::max_supported_length);
    const SeriesTable table = series_fixpoint(series_len);
    std::size_t series_checked = 0;
    for (int len = 1; len <= series_len; ++len) {
        for (std::uint32_t code = 0; code < (1u << len); ++code) {
            std::string s(static_cast<std::size_t>(len), '0');
            for (int i = 0; i < len; ++i)
                if ((code >> (len - 1 - i)) & 1u)
                    s[static_cast<std::size_t>(i)] = '1';
            const Word w(s);
            ++series_checked;
            if (table.coefficient(w) != phi(w))
                res.violations.push_back("series coefficient differs on " + s);
        }
    }
    res.checked += series_checked;
    res.summary = {{"balancedWords", words.size()}, {"seriesWords", series_checked}};
    res.seconds = timer.seconds();
    return res;
}

/// Rotation, reflection and negation invariance; peak reduction; equal heights
/// across every pair.
inline SuiteResult verify_symmetry(const SuiteConfig& cfg)
{
    detail::Timer timer;
    SuiteResult res;
    res.suite = "symmetry";
    const int max_n = detail::cap(cfg.max_n, 5);
    res.scope = {{"maxN", max_n}};
    res.csv_header = {"word", "phi", "peakReduced"};
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& w : all_balanced_words(n)) {
            ++res.checked;
            const Count v = phi(w);
            const Count o = oracle_count(w);
            bool good = v == o;
            for (std::size_t k = 1; k <= w.size() && good; ++k)
                good = oracle_count(rotate(w, k)) == o;
            good = good && oracle_count(reflect(w)) == o && oracle_count(negate(w)) == o;
            const Word pr = peak_reduce(w);
            good = good && oracle_count(pr) == o;
            if (!good)
                res.violations.push_back("symmetry broken on " + w.str());
            const auto h = heights(w).heights;
            for_each_pairing(w, [&](const Pairing& p) {
                for (const auto& [i, j] : p.pairs())
                    if (h[static_cast<std::size_t>(i - 1)] != h[static_cast<std::size_t>(j - 1)])
                        res.violations.push_back("pair " + std::to_string(i) + "-" + std::to_string(j) +
                                                 " joins different heights in " + w.str());
            });
            res.csv_rows.push_back({w.str(), v.str(), pr.str()});
        }
    }
    res.seconds = timer.seconds();
    return res;
}

/// Closed forms, Fuss-Catalan values, the bound sandwich and its sharp family,
/// phi <= phi*, and the a-phi identity.
inline SuiteResult verify_bounds(const SuiteConfig& cfg)
{
    detail::Timer timer;
    SuiteResult res;
    res.suite = "bounds";
    const int max_n = detail::cap(cfg.max_n, 7);
    res.scope = {{"maxN", max_n}};
    res.csv_header = {"word", "phi", "lowerSimple", "lowerIterated", "upperMain", "upperHeight"};
    auto fail = [&](const std::string& m) { res.violations.push_back(m); };

    for (int n1 = 1; n1 <= 10; ++n1)
        for (int m1 = 1; m1 <= 10; ++m1)
            for (int n2 = 1; n2 <= 10; ++n2) {
                const int m2 = n1 + n2 - m1;
                if (m2 < 1 || n1 + n2 > 10)
                    continue;
                ++res.checked;
                if (phi_args({n1, m1, n2, m2}) != closed_form_2run(n1, m1, n2, m2))
                    fail("two-run closed form fails at " + detail::seq_string({n1, m1, n2, m2}));
            }
    detail::for_each_sequence(3, 1, 6, [&](const std::vector<int>& v) {
        ++res.checked;
        if (phi_args({v[0], v[0], v[1], v[1], v[2], v[2]}) != closed_form_3run_sym(v[0], v[1], v[2]))
            fail("three-run closed form fails at " + detail::seq_string(v));
    });
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 5; ++r) {
            ++res.checked;
            if (phi_star(std::vector<int>(static_cast<std::size_t>(r), n)) != fuss_catalan(n, r))
                fail("Fuss-Catalan value fails at n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
    for (int n = 1; n <= max_n; ++n)
        for (int r = 1; r <= n; ++r)
            for_each_balanced(n, r, [&](const Word& w) {
                ++res.checked;
                const BoundReport b = main_theorem_check(w);
                if (!b.all_hold())
                    fail("bound sandwich fails on " + run_notation(w));
                res.csv_rows.push_back({run_notation(w), b.phi.str(), b.lower_simple.str(), b.lower_iterated.str(),
                                        b.upper_main.str(), b.upper_height.str()});
            });
    for (int r = 1; r <= 3; ++r)
        detail::for_each_sequence(r + 1, 1, 2, [&](const std::vector<int>& a) {
            ++res.checked;
            const Word w = sharp_family(a);
            if (lower_bound_iterated(w) != phi(w))
                fail("iterated lower bound not sharp on " + run_notation(w));
        });
    for (int r = 1; r <= 3; ++r)
        detail::for_each_sequence(2 * r, 1, 4, [&](const std::vector<int>& v) {
            std::vector<int> n(v.begin(), v.begin() + r), m(v.begin() + r, v.end());
            if (std::accumulate(n.begin(), n.end(), 0) != std::accumulate(m.begin(), m.end(), 0))
                return;
            ++res.checked;
            const auto [p, ps] = phi_and_phi_star(n, m);
            if (p > ps)
                fail("phi > phi* for n=" + detail::seq_string(n) + " m=" + detail::seq_string(m));
        });
    for (int r = 2; r <= 3; ++r)
        detail::for_each_sequence(r, 1, 4, [&](const std::vector<int>& n) {
            if (*std::min_element(n.begin(), n.end()) != n[0])
                return;
            for (int a = 1; a <= n[0]; ++a) {
                ++res.checked;
                if (!check_aphi_identity(n, a))
                    fail("a-phi identity fails at n=" + detail::seq_string(n) + " a=" + std::to_string(a));
            }
        });
    res.seconds = timer.seconds();
    return res;
}

/// phi(w) <= C^{(ceil(n/r))}_r on every strict balanced word, one phi
/// evaluation per symmetry orbit.
inline SuiteResult verify_main_theorem(const SuiteConfig& cfg)
{
    detail::Timer timer;
    SuiteResult res;
    res.suite = "main-theorem";
    const int max_n = detail::cap(cfg.max_n, 7);
    res.scope = {{"maxN", max_n}};
    res.csv_header = {"n", "r", "words", "orbits", "maxPhi", "bound"};
    for (int n = 1; n <= max_n; ++n) {
        for (int r = 1; r <= n; ++r) {
            std::map<std::string, std::size_t> orbits;
            std::size_t words = 0;
            for_each_balanced(n, r, [&](const Word& w) {
                ++words;
                ++orbits[canonical_form(w).str()];
            });
            std::vector<std::string> reps;
            for (const auto& [k, v] : orbits)
                reps.push_back(k);
            std::vector<Count> values(reps.size());
            parallel_for(reps.size(), cfg.threads, [&](std::size_t i) { values[i] = phi(Word(reps[i])); });
            const Count bound = fuss_catalan((n + r - 1) / r, r);
            Count best = 0;
            for (std::size_t i = 0; i < reps.size(); ++i) {
                best = std::max(best, values[i]);
                if (values[i] > bound)
                    res.violations.push_back("main theorem fails on " + reps[i]);
            }
            res.checked += words;
            res.csv_rows.push_back({std::to_string(n), std::to_string(r), std::to_string(words),
                                    std::to_string(reps.size()), best.str(), bound.str()});
        }
    }
    res.summary = {{"words", res.checked}};
    res.seconds = timer.seconds();
    return res;
}

/// Catalan words against labeled trees, the pairing/tree maps, the shift
/// identity, monotonicity and the cyclic-domination bound.
inline SuiteResult verify_bijections(const SuiteConfig& cfg)
{
    detail::Timer timer;
    SuiteResult res;
    res.suite = "bijections";
    const int max_r = detail::cap(cfg.r, 4);
    const int max_entry = detail::cap(cfg.max_n, 4);
    res.scope = {{"maxR", max_r}, {"maxEntry", max_entry}};
    res.csv_header = {"n", "CF", "LT"};
    auto fail = [&](const std::string& m) { res.violations.push_back(m); };
    std::size_t non_star_gaps = 0;

    for (int r = 1; r <= max_r; ++r) {
        detail::for_each_sequence(r, 1, max_entry, [&](const std::vector<int>& n) {
            const std::string tag = detail::seq_string(n);
            ++res.checked;
            const Count cf = count_CF(n);
            const Count lt = count_labeled_trees(n);
            res.csv_rows.push_back({tag, cf.str(), lt.str()});
            if (cf != lt)
                fail("|CF| != |LT| at " + tag);
            std::size_t listed = 0;
            for_each_CF(n, [&](const CatalanWord& c) {
                ++listed;
                if (!(tree_to_word(word_to_tree(c)) == c))
                    fail("g(f(w)) != w for " + to_string(c));
            });
            if (Count(listed) != cf)
                fail("CF enumeration disagrees with its count at " + tag);
            for_each_labeled_tree(n, [&](const LabeledTree& t) {
                if (!(word_to_tree(tree_to_word(t)) == t))
                    fail("f(g(T)) != T at " + tag);
            });
            if (std::is_sorted(n.begin(), n.end())) {
                for (const Word& w : enumerate_W_star(n)) {
                    ++res.checked;
                    if (Count(enumerate_pairings(w).size()) != lt)
                        fail("|NC2(w)| != |LT(n)| on " + w.str());
                }
            }
            for (std::size_t i = 1; i < n.size(); ++i) {
                if (n[i] < 2)
                    continue;
                ++res.checked;
                if (!shift_difference(n, i).holds())
                    fail("shift identity fails at " + tag + " i=" + std::to_string(i));
            }
        });
    }

    // Injectivity over W(n) at reduced scale, plus phi <= |LT(n)|.
    for (int r = 1; r <= std::min(max_r, 3); ++r) {
        detail::for_each_sequence(r, 1, std::min(max_entry, 3), [&](const std::vector<int>& n) {
            const Count lt = count_labeled_trees(n);
            for_each_W(n, [&](const Word& w) {
                ++res.checked;
                std::vector<LabeledTree> seen;
                for_each_pairing(w, [&](const Pairing& p) { seen.push_back(pairing_to_labeled_tree(w, n, p)); });
                for (std::size_t a = 0; a < seen.size(); ++a)
                    for (std::size_t b = a + 1; b < seen.size(); ++b)
                        if (seen[a] == seen[b])
                            fail("tree map not injective on " + w.str());
                if (Count(seen.size()) > lt)
                    fail("phi exceeds |LT(n)| on " + w.str());
                if (std::is_sorted(n.begin(), n.end()) && !in_W_star(w, n) && Count(seen.size()) < lt)
                    ++non_star_gaps;
            });
        });
    }

    // Monotonicity under domination with equal sums, and the phi* shift inequality.
    for (int r = 1; r <= max_r; ++r) {
        detail::for_each_sequence(r, 1, max_entry, [&](const std::vector<int>& n) {
            detail::for_each_sequence(r, 1, max_entry, [&](const std::vector<int>& np) {
                if (std::accumulate(n.begin(), n.end(), 0) != std::accumulate(np.begin(), np.end(), 0) ||
                    !dominates(np, n))
                    return;
                ++res.checked;
                if (count_CF(n) > count_CF(np))
                    fail("CF not monotone: " + detail::seq_string(n) + " vs " + detail::seq_string(np));
            });
        });
    }
    for (int r = 2; r <= max_r; ++r)
        detail::for_each_increasing(r, 1, 5, [&](const std::vector<int>& np) {
            for (std::size_t i = 1; i <= np.size(); ++i)
                for (std::size_t j = i + 1; j <= np.size(); ++j) {
                    std::vector<int> moved = np;
                    ++moved[i - 1];
                    --moved[j - 1];
                    if (moved[j - 1] < 1 || !std::is_sorted(moved.begin(), moved.end()))
                        continue;
                    ++res.checked;
                    const auto [lhs, rhs] = phi_star_shift(np, i, j);
                    if (lhs > rhs)
                        fail("phi* shift inequality fails at " + detail::seq_string(np));
                }
        });

    // phi(n, m) <= |CF(Rot_i(n'))| for n' = (k, ..., k).
    for (int n = 1; n <= std::min(max_entry + 2, 6); ++n)
        for (int r = 1; r <= n; ++r)
            for_each_balanced(n, r, [&](const Word& w) {
                const RunProfile p = w.profile();
                const int k = (n + r - 1) / r;
                const CFBound b = cf_bound(p.ones, p.zeros, std::vector<int>(static_cast<std::size_t>(r), k));
                ++res.checked;
                if (phi(w) > b.bound)
                    fail("cyclic-domination bound fails on " + run_notation(w));
            });

    // Off W*(n) the tree map is injective but need not be onto.
    res.summary = {{"nonStarWordsBelowLT", non_star_gaps}};
    res.seconds = timer.seconds();
    return res;
}

/// The tree formula against phi*, unimodal equality, and strictness for
/// permutations with no unimodal rotation.
inline SuiteResult verify_tree_formula(const SuiteConfig& cfg)
{
    detail::Timer timer;
    SuiteResult res;
    res.suite = "tree-formula";
    const int max_r = detail::cap(cfg.r, 5);
    const int max_entry = detail::cap(cfg.max_n, 4);
    res.scope = {{"maxR", max_r}, {"maxEntry", max_entry}, {"unimodalMaxR", max_r + 1}};
    res.csv_header = {"nPrime", "sigma", "treeFormula", "phiStar"};
    std::mutex guard;
    auto fail = [&](const std::string& m) {
        std::lock_guard lock(guard);
        res.violations.push_back(m);
    };
    for (int r = 1; r <= max_r; ++r) {
        std::vector<Permutation> perms;
        for_each_permutation(static_cast<std::size_t>(r), [&](const Permutation& p) { perms.push_back(p); });
        std::vector<std::vector<int>> seqs;
        detail::for_each_increasing(r, 0, max_entry, [&](const std::vector<int>& v) { seqs.push_back(v); });
        std::vector<std::size_t> counts(seqs.size(), 0);
        parallel_for(seqs.size(), cfg.threads, [&](std::size_t s) {
            const auto& np = seqs[s];
            for (const auto& p : perms) {
                std::vector<int> permuted;
                for (int v : p.images())
                    permuted.push_back(np[static_cast<std::size_t>(v - 1)]);
                ++counts[s];
                if (phi_star_tree_formula(np, p) != phi_star(permuted))
                    fail("tree formula differs at n'=" + detail::seq_string(np) + " sigma=" + to_string(p));
            }
            if (*std::min_element(np.begin(), np.end()) >= 1 && count_labeled_trees(np) != phi_star(np))
                fail("|LT| != phi* at " + detail::seq_string(np));
        });
        res.checked += std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    }
    for (int r = 1; r <= max_r + 1; ++r) {
        std::vector<Permutation> unimodal;
        for_each_permutation(static_cast<std::size_t>(r), [&](const Permutation& p) {
            if (is_unimodal(p))
                unimodal.push_back(p);
        });
        const Permutation id = Permutation::identity(static_cast<std::size_t>(r));
        detail::for_each_increasing(r, 0, 3, [&](const std::vector<int>& np) {
            const Count base = phi_star_tree_formula(np, id);
            for (const auto& p : unimodal) {
                ++res.checked;
                if (phi_star_tree_formula(np, p) != base)
                    fail("unimodal equality fails at n'=" + detail::seq_string(np) + " sigma=" + to_string(p));
            }
        });
    }
    for (int r = 2; r <= max_r; ++r) {
        std::vector<int> np(static_cast<std::size_t>(r));
        std::iota(np.begin(), np.end(), 1);
        const Count base = phi_star_tree_formula(np, Permutation::identity(static_cast<std::size_t>(r)));
        for_each_permutation(static_cast<std::size_t>(r), [&](const Permutation& p) {
            if (is_cyclically_unimodal(p.images()))
                return;
            ++res.checked;
            if (!(phi_star_tree_formula(np, p) < base))
                fail("strict inequality fails for sigma=" + to_string(p));
        });
    }
    for (const auto& np : std::vector<std::vector<int>>{{1, 2, 3, 4}}) {
        for (const auto& p : {Permutation::identity(4), Permutation({4, 1, 3, 2})})
            res.csv_rows.push_back({detail::seq_string(np), to_string(p), phi_star_tree_formula(np, p).str(),
                                    phi_star([&] {
                                        std::vector<int> v;
                                        for (int x : p.images())
                                            v.push_back(np[static_cast<std::size_t>(x - 1)]);
                                        return v;
                                    }())
                                        .str()});
    }
    res.seconds = timer.seconds();
    return res;
}

/// Search for words beating the most symmetric word. Findings only.
inline SuiteResult verify_conjecture_16(const SuiteConfig& cfg)
{
    detail::Timer timer;
    SuiteResult res;
    res.suite = "conjecture-1.6";
    const int max_n = detail::cap(cfg.max_n, 6);
    res.scope = {{"maxN", max_n}};
    res.csv_header = {"n", "r", "bound", "maxPhi", "words", "orbits", "counterexamples"};
    json reports = json::array();
    for (int n = 1; n <= max_n; ++n)
        for (int r = 1; r <= n; ++r) {
            const ConjectureReport c = verify_conjecture_refined(n, r, cfg.threads);
            res.checked += c.words_swept;
            reports.push_back(to_json(c));
            for (const auto& ce : c.counterexamples)
                res.findings.push_back({{"kind", "FINDING"},
                                        {"conjecture", "most symmetric word maximizes phi"},
                                        {"word", run_notation(ce.word)},
                                        {"phi", ce.phi.str()},
                                        {"bound", c.bound.str()}});
            res.csv_rows.push_back({std::to_string(n), std::to_string(r), c.bound.str(), c.max_phi.str(),
                                    std::to_string(c.words_swept), std::to_string(c.orbits),
                                    std::to_string(c.counterexamples.size())});
        }
    res.summary = {{"reports", reports}};
    res.seconds = timer.seconds();
    return res;
}

/// Matching search for every permutation of size r. Findings only.
inline SuiteResult verify_tree_conjecture_suite(const SuiteConfig& cfg)
{
    detail::Timer timer;
    SuiteResult res;
    res.suite = "tree-conjecture";
    const int r = detail::cap(cfg.r, 5);
    res.scope = {{"r", r}};
    res.csv_header = {"sigma", "perfect", "tau"};
    std::vector<Permutation> perms;
    for_each_permutation(static_cast<std::size_t>(r), [&](const Permutation& p) { perms.push_back(p); });
    std::vector<TreeConjectureReport> reports(perms.size());
    parallel_for(perms.size(), cfg.threads, [&](std::size_t i) { reports[i] = verify_tree_conjecture(perms[i], 3); });
    std::size_t perfect = 0;
    for (const auto& rep : reports) {
        ++res.checked;
        std::string tau;
        for (std::size_t i = 0; i < rep.tau.size(); ++i)
            tau += (i ? " " : "") + std::to_string(rep.tau[i] + 1);
        res.csv_rows.push_back({to_string(rep.sigma), rep.perfect() ? "yes" : "no", tau});
        if (rep.perfect())
            ++perfect;
        else
            res.findings.push_back({{"kind", "FINDING"},
                                    {"conjecture", "tree polynomial matching"},
                                    {"sigma", to_string(rep.sigma)},
                                    {"unmatched", rep.unmatched.size()}});
        // A numeric disagreement would mean the rewrite rules are unsound.
        if (!rep.numeric_violations.empty())
            res.violations.push_back("comparison rules unsound for sigma=" + to_string(rep.sigma));
    }
    res.summary = {{"permutations", perms.size()}, {"perfectMatchings", perfect}};
    res.seconds = timer.seconds();
    return res;
}

/// Monte Carlo moments against phi for all words of length <= 8.
inline SuiteResult verify_ginibre(const SuiteConfig& cfg)
{
    detail::Timer timer;
    SuiteResult res;
    res.suite = "ginibre";
    const int max_n = std::min(detail::cap(cfg.max_n, 4), 4);
    res.scope = {{"maxN", max_n},
                 {"N", cfg.dim},
                 {"samples", cfg.samples},
                 {"seed", cfg.seed},
                 {"tolerance", cfg.tolerance},
                 {"trace", "normalized (1/N) Tr"}};
    res.csv_header = {"word", "N", "samples", "mean", "stderr", "phi", "relError", "verdict"};
    std::vector<Word> words;
    for (int n = 1; n <= max_n; ++n)
        for (auto& w : all_balanced_words(n))
            words.push_back(std::move(w));
    const auto estimates = moment_estimates_batched(words, cfg.dim, cfg.samples, cfg.seed, cfg.threads);
    json rows = json::array();
    for (const auto& e : estimates) {
        const MomentComparison c = compare(e, cfg.tolerance);
        ++res.checked;
        rows.push_back(to_json(c));
        if (!c.pass)
            res.violations.push_back("moment of " + e.word.str() + " off by " + std::to_string(c.rel_error));
        std::ostringstream mean, se, rel;
        mean.precision(10);
        se.precision(6);
        rel.precision(6);
        mean << e.mean;
        se << e.std_error;
        rel << c.rel_error;
        res.csv_rows.push_back({e.word.str(), std::to_string(e.dimension), std::to_string(e.samples), mean.str(),
                                se.str(), e.phi.str(), rel.str(), c.pass ? "pass" : "flag"});
    }
    res.summary = {{"estimates", rows}};
    res.seconds = timer.seconds();
    return res;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"oracle",       "symmetry",     "bounds",         "main-theorem",
                                                "bijections",   "tree-formula", "conjecture-1.6", "tree-conjecture",
                                                "ginibre"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg)
{
    if (name == "oracle")
        return verify_oracle(cfg);
    if (name == "symmetry")
        return verify_symmetry(cfg);
    if (name == "bounds")
        return verify_bounds(cfg);
    if (name == "main-theorem")
        return verify_main_theorem(cfg);
    if (name == "bijections")
        return verify_bijections(cfg);
    if (name == "tree-formula")
        return verify_tree_formula(cfg);
    if (name == "conjecture-1.6")
        return verify_conjecture_16(cfg);
    if (name == "tree-conjecture")
        return verify_tree_conjecture_suite(cfg);
    if (name == "ginibre")
        return verify_ginibre(cfg);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace ncpair

#endif  // NCPAIR_VERIFY_HPP
