// Acceptance run: one PASS/FAIL line per criterion, then a tally.
// Exit status is the number of failed criteria (capped at 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "ncpair/ncpair.hpp"

using namespace ncpair;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    const char* id;
    const char* title;
    double budget_s;  // wall-clock limit; exceeding it is a failure
    std::function<Outcome()> run;
};

unsigned g_threads = 1;

std::string seq(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

void each_sequence(int r, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> v(static_cast<std::size_t>(r), lo);
    std::function<void(int)> rec = [&](int i) {
        if (i == r)
            return fn(v);
        for (int x = lo; x <= hi; ++x) {
            v[static_cast<std::size_t>(i)] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

// Tally helper: counts checks and keeps the first failure message.
struct Tally {
    std::size_t checked = 0, failed = 0;
    std::string first;
    void check(bool ok, const std::string& what)
    {
        ++checked;
        if (!ok && failed++ == 0)
            first = what;
    }
    Outcome outcome(const std::string& extra = "") const
    {
        std::string d = std::to_string(checked) + " checks, " + std::to_string(failed) + " failed";
        if (!extra.empty())
            d += "; " + extra;
        if (failed)
            d += "; first: " + first;
        return {failed == 0, d};
    }
};

Outcome ac1_oracle()
{
    Tally t;
    std::size_t at6 = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_balanced_words(n)) {
            const Count a = phi(w), b = oracle_count(w), c = Count(enumerate_pairings(w).size());
            t.check(a == b && b == c, w.str());
            at6 += n == 6;
        }
    t.check(at6 == 924, "924 words at n=6");
    return t.outcome(std::to_string(at6) + " words at n=6");
}

Outcome ac2_closed_forms()
{
    Tally t;
    for (int n1 = 1; n1 <= 9; ++n1)
        for (int n2 = 1; n1 + n2 <= 10; ++n2)
            for (int m1 = 1; m1 < n1 + n2; ++m1) {
                const int m2 = n1 + n2 - m1;
                t.check(phi_args({n1, m1, n2, m2}) == closed_form_2run(n1, m1, n2, m2), seq({n1, m1, n2, m2}));
            }
    each_sequence(3, 1, 6, [&](const std::vector<int>& v) {
        const Count phi_v = phi_args({v[0], v[0], v[1], v[1], v[2], v[2]});
        t.check(phi_v == closed_form_3run_sym(v[0], v[1], v[2]), seq(v));
        // a is the smallest entry, b the smallest of the other two.
        std::vector<long> s(v.begin(), v.end());
        std::sort(s.begin(), s.end());
        const long a = s[0], b = s[1];
        const Count poly = (Count(a * a) + 2 * a * b + 3 * a) / 2 + b + 1;
        t.check(phi_v == poly, "polynomial at " + seq(v));
    });
    return t.outcome();
}

Outcome ac3_fuss_catalan()
{
    Tally t;
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 5; ++r) {
            const Count by_binomial = binomial((n + 1) * r, r) / (n * r + 1);
            t.check(phi_star(std::vector<int>(static_cast<std::size_t>(r), n)) == by_binomial &&
                        fuss_catalan(n, r) == by_binomial,
                    "n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
    const Count top = phi_star({5, 5, 5, 5, 5});
    t.check(top == 5481, "C(5,5) = " + top.str());
    return t.outcome("C^(5)_5 = " + top.str());
}

Outcome ac4_series()
{
    Tally t;
    std::size_t words = 0;
    const SeriesTable table = series_fixpoint(10);
    for (int len = 1; len <= 10; ++len)
        for (unsigned code = 0; code < (1u << len); ++code) {
            std::string s(static_cast<std::size_t>(len), '0');
            for (int i = 0; i < len; ++i)
                if ((code >> (len - 1 - i)) & 1u)
                    s[static_cast<std::size_t>(i)] = '1';
            const Word w(s);
            ++words;
            t.check(table.coefficient(w) == phi(w), s);
        }
    return {t.failed == 0 && words == 2046, t.outcome(std::to_string(words) + " words").detail};
}

Outcome ac5_phi_le_phi_star()
{
    Tally t;
    for (int r = 1; r <= 3; ++r)
        each_sequence(2 * r, 1, 4, [&](const std::vector<int>& v) {
            std::vector<int> n(v.begin(), v.begin() + r), m(v.begin() + r, v.end());
            if (std::accumulate(n.begin(), n.end(), 0) != std::accumulate(m.begin(), m.end(), 0))
                return;
            const auto [p, ps] = phi_and_phi_star(n, m);
            t.check(p <= ps, "n=" + seq(n) + " m=" + seq(m));
        });
    return t.outcome();
}

Outcome ac6_tree_formula()
{
    Tally t;
    for (int r = 1; r <= 5; ++r)
        each_sequence(r, 0, 4, [&](const std::vector<int>& np) {
            if (!std::is_sorted(np.begin(), np.end()))
                return;
            for_each_permutation(static_cast<std::size_t>(r), [&](const Permutation& p) {
                std::vector<int> permuted;
                for (int x : p.images())
                    permuted.push_back(np[static_cast<std::size_t>(x - 1)]);
                t.check(phi_star_tree_formula(np, p) == phi_star(permuted), seq(np) + " " + to_string(p));
            });
        });
    const Count a = phi_star_tree_formula({1, 2, 3, 4}, Permutation({4, 1, 3, 2}));
    const Count b = phi_star_tree_formula({1, 2, 3, 4}, Permutation::identity(4));
    t.check(a == 36 && b == 37, "worked pair " + a.str() + "/" + b.str());
    return t.outcome("worked pair " + a.str() + "/" + b.str());
}

Outcome ac7_bijections()
{
    Tally t;
    std::size_t star_words = 0;
    for (int r = 1; r <= 4; ++r)
        each_sequence(r, 1, 4, [&](const std::vector<int>& n) {
            const Count lt = count_labeled_trees(n);
            t.check(count_CF(n) == lt, "|CF| at " + seq(n));
            for_each_CF(n, [&](const CatalanWord& c) {
                t.check(tree_to_word(word_to_tree(c)) == c, "g.f at " + to_string(c));
            });
            for_each_labeled_tree(n, [&](const LabeledTree& tr) {
                t.check(word_to_tree(tree_to_word(tr)) == tr, "f.g at " + seq(n));
            });
            if (std::is_sorted(n.begin(), n.end()))
                for (const Word& w : enumerate_W_star(n)) {
                    ++star_words;
                    t.check(Count(enumerate_pairings(w).size()) == lt, "|NC2| on " + w.str());
                }
        });
    return t.outcome(std::to_string(star_words) + " words in W*");
}

Outcome ac8_shift()
{
    Tally t;
    for (int r = 1; r <= 4; ++r)
        each_sequence(r, 1, 4, [&](const std::vector<int>& n) {
            for (std::size_t i = 1; i < n.size(); ++i)
                if (n[i] >= 2)
                    t.check(shift_difference(n, i).holds(), seq(n) + " i=" + std::to_string(i));
        });
    return t.outcome();
}

Outcome ac9_main_theorem()
{
    SuiteConfig cfg;
    cfg.max_n = 7;
    cfg.threads = g_threads;
    const SuiteResult r = verify_main_theorem(cfg);
    return {r.ok(), std::to_string(r.checked) + " strict words, " + std::to_string(r.violations.size()) +
                        " violations"};
}

Outcome ac10_sandwich()
{
    Tally t;
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= n; ++r)
            for_each_balanced(n, r, [&](const Word& w) {
                const BoundReport b = main_theorem_check(w);
                t.check(b.simple_le_iterated() && b.iterated_le_phi() && b.phi_le_height(), run_notation(w));
            });
    std::size_t sharp = 0;
    for (int r = 1; r <= 3; ++r)
        each_sequence(r + 1, 1, 2, [&](const std::vector<int>& a) {
            ++sharp;
            const Word w = sharp_family(a);
            t.check(lower_bound_iterated(w) == phi(w), "sharp " + seq(a));
        });
    return t.outcome(std::to_string(sharp) + " sharp-family words");
}

Outcome ac11_conjecture()
{
    std::size_t words = 0, counter = 0;
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= n; ++r) {
            const ConjectureReport c = verify_conjecture_refined(n, r, g_threads);
            words += c.words_swept;
            counter += c.counterexamples.size();
        }
    return {counter == 0, std::to_string(words) + " words, " + std::to_string(counter) + " counterexamples"};
}

Outcome ac12_tree_conjecture()
{
    std::vector<Permutation> perms;
    for_each_permutation(5, [&](const Permutation& p) { perms.push_back(p); });
    std::vector<char> perfect(perms.size(), 0), sound(perms.size(), 0);
    parallel_for(perms.size(), g_threads, [&](std::size_t i) {
        const auto rep = verify_tree_conjecture(perms[i], 3);
        perfect[i] = rep.perfect();
        sound[i] = rep.numeric_violations.empty();
    });
    const auto p = static_cast<std::size_t>(std::count(perfect.begin(), perfect.end(), 1));
    const auto s = static_cast<std::size_t>(std::count(sound.begin(), sound.end(), 1));
    return {p == perms.size() && s == perms.size(),
            std::to_string(p) + "/" + std::to_string(perms.size()) + " perfect matchings"};
}

Outcome ac13_ginibre()
{
    std::vector<Word> words;
    for (int n = 1; n <= 4; ++n)
        for (auto& w : all_balanced_words(n))
            words.push_back(w);
    const auto est = moment_estimates_batched(words, 128, 400, 42, g_threads);
    Tally t;
    double worst = 0;
    std::string worst_word;
    for (const auto& e : est) {
        const MomentComparison c = compare(e, 0.15);
        t.check(c.pass, e.word.str() + " rel " + std::to_string(c.rel_error));
        if (c.rel_error > worst) {
            worst = c.rel_error;
            worst_word = e.word.str();
        }
    }
    // Tr(X X*)/N has expectation exactly 1 at every N.
    const auto one_it = std::find_if(est.begin(), est.end(), [](const MomentEstimate& e) { return e.word.str() == "10"; });
    if (one_it == est.end())
        return {false, "no estimate for 10"};
    const MomentEstimate& one = *one_it;
    const double z = std::abs(one.mean - 1.0) / one.std_error;
    t.check(z <= 3.0, "(1,1) off by " + std::to_string(z) + " SE");
    char buf[160];
    std::snprintf(buf, sizeof buf, "worst rel %.4f (%s); (1,1) mean %.5f, %.2f SE", worst, worst_word.c_str(),
                  one.mean, z);
    return t.outcome(buf);
}

Outcome ac14_unimodal()
{
    Tally t;
    for (int r = 1; r <= 6; ++r) {
        const Permutation id = Permutation::identity(static_cast<std::size_t>(r));
        std::vector<Permutation> uni;
        for_each_permutation(static_cast<std::size_t>(r), [&](const Permutation& p) {
            if (is_unimodal(p))
                uni.push_back(p);
        });
        each_sequence(r, 0, 3, [&](const std::vector<int>& np) {
            if (!std::is_sorted(np.begin(), np.end()))
                return;
            const Count base = phi_star_tree_formula(np, id);
            for (const auto& p : uni)
                t.check(phi_star_tree_formula(np, p) == base, seq(np) + " " + to_string(p));
        });
    }
    return t.outcome();
}

}  // namespace

int main(int argc, char** argv)
{
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--parallel") == 0 && i + 1 < argc)
            g_threads = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));

    const std::vector<Criterion> all{
        {"AC1", "oracle equivalence, 2n <= 12", 60, ac1_oracle},
        {"AC2", "two- and three-run closed forms", 60, ac2_closed_forms},
        {"AC3", "Fuss-Catalan values, n, r <= 5", 30, ac3_fuss_catalan},
        {"AC4", "generating function, length <= 10", 60, ac4_series},
        {"AC5", "phi <= phi*, r <= 3, entries <= 4", 60, ac5_phi_le_phi_star},
        {"AC6", "tree formula, r <= 5, entries <= 4", 120, ac6_tree_formula},
        {"AC7", "CF = LT, roundtrips, W* cardinality", 120, ac7_bijections},
        {"AC8", "shift identity, r <= 4, entries <= 4", 60, ac8_shift},
        {"AC9", "main theorem, strict words 2n <= 14", 300, ac9_main_theorem},
        {"AC10", "bound sandwich and sharp family", 120, ac10_sandwich},
        {"AC11", "symmetric-word conjecture, 2n <= 12", 300, ac11_conjecture},
        {"AC12", "tree-polynomial matchings, r = 5", 600, ac12_tree_conjecture},
        {"AC13", "Ginibre moments, length <= 8, N = 128", 300, ac13_ginibre},
        {"AC14", "unimodal equality, r <= 6, entries <= 3", 120, ac14_unimodal},
    };

    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > c.budget_s) {
            o.pass = false;
            o.detail += "; over time budget " + std::to_string(static_cast<int>(c.budget_s)) + " s";
        }
        failed += !o.pass;
        std::printf("%-4s %s  %-42s %8.2fs  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, s, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", all.size() - static_cast<std::size_t>(failed), all.size());
    return failed ? 1 : 0;
}
