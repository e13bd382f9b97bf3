// ncpair: count, list, draw and verify non-crossing pairings of bitstrings.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ncpair/ncpair.hpp"

namespace {

using ncpair::json;

constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string word_arg;
    std::string string_flag;
    std::string runs_flag;
    std::string format = "text";
    std::string out;
    bool verbose = false;
    std::size_t limit = 0;
    std::string what = "chord";
    std::string pairing = "";
    std::string suite;
    ncpair::SuiteConfig cfg;
};

ncpair::Word read_word(const Options& o)
{
    const int given = !o.word_arg.empty() + !o.string_flag.empty() + !o.runs_flag.empty();
    if (given != 1)
        throw CLI::ValidationError("input", "give exactly one of WORD, --string or --runs");
    const std::string& text = !o.runs_flag.empty() ? o.runs_flag : !o.string_flag.empty() ? o.string_flag : o.word_arg;
    if (!o.runs_flag.empty() && text.find(',') == std::string::npos && text.find('^') == std::string::npos) {
        // A single run length still names a run profile, never literal bits.
        return ncpair::Word::from_runs({std::stoi(text)});
    }
    return ncpair::parse_word(text);
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open '" + o.out + "' for writing");
    f << text;
    if (!f)
        throw std::runtime_error("write to '" + o.out + "' failed");
}

int cmd_count(const Options& o)
{
    const ncpair::Word w = read_word(o);
    const ncpair::Count v = ncpair::phi(w);
    const bool balanced = w.balanced();
    if (o.format == "json") {
        json j{{"word", w.str()}, {"phi", v.str()}, {"balanced", balanced}};
        if (o.verbose && balanced && !w.empty())
            j["bounds"] = ncpair::to_json(ncpair::main_theorem_check(w));
        emit(o, j.dump(2) + "\n");
    } else if (o.format == "csv") {
        emit(o, "word,phi\n" + w.str() + "," + v.str() + "\n");
    } else {
        std::string text = v.str() + "\n";
        if (o.verbose && balanced && !w.empty()) {
            const auto b = ncpair::main_theorem_check(w);
            text += "word           " + ncpair::run_notation(w) + "\n";
            text += "n r h k        " + std::to_string(b.n) + " " + std::to_string(b.r) + " " + std::to_string(b.h) +
                    " " + std::to_string(b.k) + "\n";
            text += "lower simple   " + b.lower_simple.str() + "\n";
            text += "lower iterated " + b.lower_iterated.str() + "\n";
            text += "upper main     " + b.upper_main.str() + "\n";
            text += "upper height   " + b.upper_height.str() + "\n";
            text += "upper crude    " + b.upper_crude.str() + "\n";
            text += std::string("all hold       ") + (b.all_hold() ? "yes" : "NO") + "\n";
        }
        emit(o, text);
    }
    if (!balanced)
        std::cerr << "note: word is not balanced (" << w.count_ones() << " ones, " << w.size() - w.count_ones()
                  << " zeros)\n";
    return 0;
}

int cmd_enumerate(const Options& o)
{
    const ncpair::Word w = read_word(o);
    if (w.size() > ncpair::oracle_max_length)
        throw std::length_error("enumerate refuses words longer than " + std::to_string(ncpair::oracle_max_length) +
                                " (got " + std::to_string(w.size()) + ")");
    const auto all = ncpair::enumerate_pairings(w);
    const bool truncated = o.limit > 0 && all.size() > o.limit;
    const std::size_t shown = truncated ? o.limit : all.size();
    if (o.format == "json") {
        json j{{"word", w.str()}, {"count", std::to_string(all.size())}, {"truncated", truncated}};
        j["pairings"] = json::array();
        for (std::size_t i = 0; i < shown; ++i)
            j["pairings"].push_back(ncpair::to_string(all[i]));
        emit(o, j.dump(2) + "\n");
    } else if (o.format == "csv") {
        std::string text = "index,pairing\n";
        for (std::size_t i = 0; i < shown; ++i)
            text += std::to_string(i + 1) + ",\"" + ncpair::to_string(all[i]) + "\"\n";
        if (truncated)
            text += "...,truncated\n";
        emit(o, text);
    } else {
        std::string text;
        for (std::size_t i = 0; i < shown; ++i)
            text += ncpair::to_string(all[i]) + "\n";
        if (truncated)
            text += "... (" + std::to_string(all.size() - shown) + " more, truncated)\n";
        emit(o, text);
    }
    return 0;
}

int cmd_render(const Options& o)
{
    const ncpair::Word w = read_word(o);
    if (o.what == "path") {
        emit(o, ncpair::render_path_svg(w));
        return 0;
    }
    if (o.pairing.empty()) {
        emit(o, ncpair::render_chord_svg(w));
        return 0;
    }
    const auto all = ncpair::enumerate_pairings(w);
    if (o.pairing == "all") {
        if (o.out.empty())
            throw CLI::ValidationError("--out", "--pairing all needs --out (one file per pairing)");
        const auto dot = o.out.rfind('.');
        const std::string stem = dot == std::string::npos ? o.out : o.out.substr(0, dot);
        const std::string ext = dot == std::string::npos ? ".svg" : o.out.substr(dot);
        for (std::size_t i = 0; i < all.size(); ++i) {
            Options one = o;
            one.out = stem + "_" + std::to_string(i + 1) + ext;
            emit(one, ncpair::render_chord_svg(w, all[i]));
        }
        std::cerr << all.size() << " files written\n";
        return 0;
    }
    std::size_t index = 0;
    try {
        index = std::stoul(o.pairing);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--pairing", "expected an index or 'all'");
    }
    if (index < 1 || index > all.size())
        throw CLI::ValidationError("--pairing", "index " + o.pairing + " out of range 1.." + std::to_string(all.size()));
    emit(o, ncpair::render_chord_svg(w, all[index - 1]));
    return 0;
}

int cmd_verify(const Options& o)
{
    const ncpair::SuiteResult r = ncpair::run_suite(o.suite, o.cfg);
    if (o.format == "json") {
        emit(o, ncpair::to_json(r).dump(2) + "\n");
    } else if (o.format == "csv") {
        emit(o, ncpair::to_csv(r));
    } else {
        std::string text = "suite " + r.suite + ": " + std::to_string(r.checked) + " checks, " +
                           std::to_string(r.violations.size()) + " violations, " +
                           std::to_string(r.findings.size()) + " findings\n";
        for (const auto& v : r.violations)
            text += "VIOLATION " + v + "\n";
        for (const auto& f : r.findings)
            text += "FINDING " + f.dump() + "\n";
        if (o.verbose)
            text += ncpair::to_csv(r);
        emit(o, text);
    }
    if (o.verbose)
        std::cerr << r.suite << " took " << r.seconds << " s\n";
    return r.ok() ? 0 : exit_violation;
}

void add_input(CLI::App* sub, Options& o)
{
    sub->add_option("word", o.word_arg, "Word as bits, run lengths (2,1,1,2) or exponents (1^2 0 1 0^2)");
    sub->add_option("--string", o.string_flag, "Word as a bitstring");
    sub->add_option("--runs", o.runs_flag, "Word as run lengths n1,m1,n2,m2,...");
}

void add_output(CLI::App* sub, Options& o, bool with_format)
{
    if (with_format)
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out, "Write to PATH instead of stdout");
    sub->add_flag("--verbose,-v", o.verbose, "More detail");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Non-crossing pairings of bitstrings"};
    app.require_subcommand(1);
    Options o;

    auto* count = app.add_subcommand("count", "Number of non-crossing pairings of a word");
    add_input(count, o);
    add_output(count, o, true);

    auto* enumerate = app.add_subcommand("enumerate", "List the non-crossing pairings of a word");
    add_input(enumerate, o);
    add_output(enumerate, o, true);
    enumerate->add_option("--limit", o.limit, "Show at most this many (0 = all)");

    auto* render = app.add_subcommand("render", "Draw a word as SVG");
    add_input(render, o);
    add_output(render, o, false);
    render->add_option("--what", o.what, "chord or path")->check(CLI::IsMember({"chord", "path"}));
    render->add_option("--pairing", o.pairing, "Pairing index (1-based, enumeration order) or 'all'");

    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(ncpair::suite_names()));
    add_output(verify, o, true);
    verify->add_option("--max-n", o.cfg.max_n, "Cap on n (or on entries, for sequence sweeps)");
    verify->add_option("--r", o.cfg.r, "Cap on the number of runs / permutation size");
    verify->add_option("--dim", o.cfg.dim, "Ginibre matrix size")->check(CLI::PositiveNumber);
    verify->add_option("--samples", o.cfg.samples, "Ginibre sample count")->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.cfg.seed, "Ginibre seed");
    verify->add_option("--tolerance", o.cfg.tolerance, "Ginibre relative tolerance");
    unsigned parallel = 1;
    verify->add_option("--parallel", parallel, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_usage;
    }
    o.cfg.threads = parallel;

    try {
        if (*count)
            return cmd_count(o);
        if (*enumerate)
            return cmd_enumerate(o);
        if (*render)
            return cmd_render(o);
        return cmd_verify(o);
    } catch (const ncpair::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        const std::string& text = !o.runs_flag.empty() ? o.runs_flag : !o.string_flag.empty() ? o.string_flag : o.word_arg;
        std::cerr << "  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
        return exit_usage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
