#include <gtest/gtest.h>

#include "ncpair/verify.hpp"

using namespace ncpair;

namespace {

SuiteConfig small()
{
    SuiteConfig c;
    c.max_n = 4;
    c.r = 3;
    c.dim = 24;
    c.samples = 30;
    c.seed = 42;
    c.threads = 2;
    return c;
}

}  // namespace

TEST(Suites, SmallScalesAreClean)
{
    for (const auto& name : suite_names()) {
        if (name == "ginibre")
            continue;
        const SuiteResult r = run_suite(name, small());
        EXPECT_TRUE(r.ok()) << name << ": " << (r.violations.empty() ? "" : r.violations.front());
        EXPECT_GT(r.checked, 0u) << name;
    }
}

TEST(Suites, UnknownName)
{
    EXPECT_THROW(run_suite("nope", small()), std::invalid_argument);
}

TEST(Suites, JsonRoundTrip)
{
    const SuiteResult r = run_suite("conjecture-1.6", small());
    const json j = to_json(r);
    EXPECT_EQ(json::parse(j.dump()), j);
    EXPECT_EQ(j["suite"], "conjecture-1.6");
    // Counts are decimal strings.
    EXPECT_TRUE(j["summary"]["reports"][0]["bound"].is_string());
    EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Suites, BoundReportJson)
{
    const json j = to_json(main_theorem_check(Word("110100")));
    EXPECT_EQ(j["phi"], "2");
    EXPECT_EQ(j["word"], "2,1,1,2");
    EXPECT_EQ(json::parse(j.dump()), j);
}

TEST(Suites, CsvShape)
{
    const SuiteResult r = run_suite("main-theorem", small());
    const std::string csv = to_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,r,words,orbits,maxPhi,bound");
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), r.csv_rows.size() + 1);
}

TEST(Suites, GinibreToleranceDrivesViolations)
{
    SuiteConfig c = small();
    c.max_n = 2;
    const SuiteResult loose = run_suite("ginibre", c);
    EXPECT_EQ(loose.checked, 8u);  // 2 words of length 2, 6 of length 4
    c.tolerance = 0.0;
    const SuiteResult strict = run_suite("ginibre", c);
    EXPECT_EQ(strict.violations.size(), strict.checked);
    EXPECT_EQ(to_json(strict)["summary"]["estimates"][0]["verdict"], "flag");
}

TEST(Suites, Reproducible)
{
    const SuiteConfig c = small();
    EXPECT_EQ(to_json(run_suite("bounds", c)).dump(), to_json(run_suite("bounds", c)).dump());
}
