#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <regex>

#include "ncpair/svg.hpp"

using namespace ncpair;

namespace {

struct P {
    double x, y;
};

std::size_t occurrences(const std::string& s, const std::string& needle)
{
    std::size_t n = 0;
    for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1))
        ++n;
    return n;
}

// Sample the chords of a rendered diagram as polylines.
std::vector<std::vector<P>> chord_polylines(const std::string& svg)
{
    std::vector<std::vector<P>> out;
    const std::regex arc(R"(d="M ([-0-9.]+) ([-0-9.]+) A ([0-9.]+) [0-9.]+ 0 0 ([01]) ([-0-9.]+) ([-0-9.]+)\")");
    const std::regex line(R"(d="M ([-0-9.]+) ([-0-9.]+) L ([-0-9.]+) ([-0-9.]+)\")");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), arc); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        const P a{std::stod(m[1]), std::stod(m[2])}, b{std::stod(m[5]), std::stod(m[6])};
        const double rho = std::stod(m[3]);
        const bool sweep = m[4] == "1";
        const P mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        const double half = std::hypot(b.x - a.x, b.y - a.y) / 2;
        const double h = std::sqrt(std::max(0.0, rho * rho - half * half));
        const P u{-(b.y - a.y) / (2 * half), (b.x - a.x) / (2 * half)};
        std::vector<P> best;
        for (int sign : {1, -1}) {
            const P c{mid.x + sign * h * u.x, mid.y + sign * h * u.y};
            const double t0 = std::atan2(a.y - c.y, a.x - c.x);
            double dt = std::atan2(b.y - c.y, b.x - c.x) - t0;
            // sweep = 1 means increasing angle in screen coordinates
            if (sweep && dt < 0)
                dt += 2 * std::numbers::pi;
            if (!sweep && dt > 0)
                dt -= 2 * std::numbers::pi;
            if (std::abs(dt) > std::numbers::pi + 1e-6)
                continue;  // large arc, not what was asked for
            for (int k = 0; k <= 64; ++k) {
                const double t = t0 + dt * k / 64.0;
                best.push_back({c.x + rho * std::cos(t), c.y + rho * std::sin(t)});
            }
            break;
        }
        out.push_back(best);
    }
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        out.push_back({{std::stod(m[1]), std::stod(m[2])}, {std::stod(m[3]), std::stod(m[4])}});
    }
    return out;
}

bool segments_cross(P a, P b, P c, P d)
{
    auto cross = [](P o, P p, P q) { return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x); };
    const double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
    return ((d1 > 1e-9 && d2 < -1e-9) || (d1 < -1e-9 && d2 > 1e-9)) &&
           ((d3 > 1e-9 && d4 < -1e-9) || (d3 < -1e-9 && d4 > 1e-9));
}

bool polylines_cross(const std::vector<P>& p, const std::vector<P>& q)
{
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        for (std::size_t j = 0; j + 1 < q.size(); ++j)
            if (segments_cross(p[i], p[i + 1], q[j], q[j + 1]))
                return true;
    return false;
}

}  // namespace

TEST(ChordSvg, PointsAndChords)
{
    const Word w("1010");
    const auto pairings = enumerate_pairings(w);
    const std::string svg = render_chord_svg(w, pairings[0]);
    EXPECT_EQ(occurrences(svg, "class=\"point\""), 4u);
    EXPECT_EQ(occurrences(svg, "class=\"chord\""), 2u);
    EXPECT_NE(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""), std::string::npos);
    EXPECT_EQ(occurrences(render_chord_svg(w), "class=\"chord\""), 0u);
}

TEST(ChordSvg, Deterministic)
{
    const Word w("110100");
    const auto p = enumerate_pairings(w)[1];
    EXPECT_EQ(render_chord_svg(w, p), render_chord_svg(w, p));
}

TEST(ChordSvg, NoncrossingPairingsDrawWithoutIntersections)
{
    for (const char* s : {"1010", "101010", "11001010", "1101001100", "1010101010"}) {
        const Word w(s);
        for (const auto& p : enumerate_pairings(w)) {
            const auto lines = chord_polylines(render_chord_svg(w, p));
            ASSERT_EQ(lines.size(), p.size()) << s;
            for (const auto& l : lines)
                for (const auto& pt : l)
                    EXPECT_LE(std::hypot(pt.x - 200, pt.y - 200), 160.5);
            for (std::size_t i = 0; i < lines.size(); ++i)
                for (std::size_t j = i + 1; j < lines.size(); ++j)
                    EXPECT_FALSE(polylines_cross(lines[i], lines[j])) << s << " " << to_string(p);
        }
    }
}

TEST(ChordSvg, CrossingPairingDoesIntersect)
{
    const Word w("1100");
    const auto lines = chord_polylines(render_chord_svg(w, parse_pairing("1-3,2-4", 4)));
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_TRUE(polylines_cross(lines[0], lines[1]));
}

TEST(ChordSvg, RejectsLengthMismatch)
{
    EXPECT_THROW(render_chord_svg(Word("1010"), parse_pairing("1-2", 2)), std::invalid_argument);
}

TEST(PathSvg, HeightLabels)
{
    const Word w = parse_word("1^4 0^2 1^2 0^5 1^2 0");
    const std::string svg = render_path_svg(w);
    const std::regex label(R"(class="height"[^>]*>([0-9]+)</text>)");
    std::string got;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), label); it != std::sregex_iterator(); ++it)
        got += (got.empty() ? "" : " ") + (*it)[1].str();
    EXPECT_EQ(got, "2 3 4 5 5 4 4 5 5 4 3 2 1 1 2 2");
    EXPECT_EQ(svg, render_path_svg(w));
}
