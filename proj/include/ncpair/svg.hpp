#ifndef NCPAIR_SVG_HPP
#define NCPAIR_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitstring.hpp"
#include "pairing.hpp"

namespace ncpair {

namespace detail {

inline std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

struct Point {
    double x, y;
};

}  // namespace detail

/// Positions 1..2n equally spaced clockwise from the top of a circle; 1s are
/// filled dots, 0s hollow. Each pair is drawn as the arc of the circle that
/// meets the boundary at right angles through both endpoints, so pairs whose
/// endpoints do not interleave never meet.
inline std::string render_chord_svg(const Word& w, const std::optional<Pairing>& pairing = std::nullopt)
{
    if (pairing && pairing->word_length() != w.size())
        throw std::invalid_argument("render_chord_svg: pairing length differs from word length");
    const double size = 400, c = size / 2, R = 160;
    const std::size_t L = w.size();
    std::vector<detail::Point> pt(L);
    for (std::size_t i = 0; i < L; ++i) {
        const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(L);
        pt[i] = {c + R * std::sin(a), c - R * std::cos(a)};
    }
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    s += "  <title>" + w.str() + "</title>\n";
    s += "  <circle cx=\"200.000\" cy=\"200.000\" r=\"160.000\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
    if (pairing) {
        for (const auto& [i, j] : pairing->pairs()) {
            const detail::Point p = pt[static_cast<std::size_t>(i - 1)], q = pt[static_cast<std::size_t>(j - 1)];
            const double ai = 2 * std::numbers::pi * (i - 1) / static_cast<double>(L);
            const double aj = 2 * std::numbers::pi * (j - 1) / static_cast<double>(L);
            double theta = std::abs(aj - ai);
            if (theta > std::numbers::pi)
                theta = 2 * std::numbers::pi - theta;
            std::string d = "M " + detail::fmt(p.x) + " " + detail::fmt(p.y) + " ";
            if (std::abs(theta - std::numbers::pi) < 1e-9) {
                d += "L " + detail::fmt(q.x) + " " + detail::fmt(q.y);
            } else {
                const double rho = R * std::tan(theta / 2);
                // Centre of the orthogonal circle lies outside, on the bisector.
                const double mx = (p.x + q.x) / 2 - c, my = (p.y + q.y) / 2 - c;
                const double mlen = std::hypot(mx, my);
                const double dist = R / std::cos(theta / 2);
                const double cx = c + mx / mlen * dist, cy = c + my / mlen * dist;
                // Arc midpoint on the inner side, to pick the drawing direction.
                const double ix = cx - mx / mlen * rho, iy = cy - my / mlen * rho;
                const double cross = (ix - p.x) * (q.y - iy) - (iy - p.y) * (q.x - ix);
                const int sweep = cross > 0 ? 1 : 0;
                d += "A " + detail::fmt(rho) + " " + detail::fmt(rho) + " 0 0 " + std::to_string(sweep) + " " +
                     detail::fmt(q.x) + " " + detail::fmt(q.y);
            }
            s += "  <path class=\"chord\" d=\"" + d + "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
        }
    }
    for (std::size_t i = 0; i < L; ++i) {
        s += "  <circle class=\"point\" cx=\"" + detail::fmt(pt[i].x) + "\" cy=\"" + detail::fmt(pt[i].y) +
             "\" r=\"6.000\" fill=\"" + (w[i] ? "#222222" : "#ffffff") + "\" stroke=\"#222222\"/>\n";
        const double lx = c + (pt[i].x - c) * 1.12, ly = c + (pt[i].y - c) * 1.12 + 4;
        s += "  <text x=\"" + detail::fmt(lx) + "\" y=\"" + detail::fmt(ly) +
             "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(i + 1) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

/// Lattice path: 1 steps up, 0 steps down. Each step is labelled with its
/// height (minimum shifted to 1).
inline std::string render_path_svg(const Word& w)
{
    const double step = 30, margin = 30;
    const HeightProfile hp = heights(w);
    std::vector<int> level(w.size() + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        level[i + 1] = level[i] + (w[i] ? 1 : -1);
    int lo = 0, hi = 0;
    for (int v : level) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double width = 2 * margin + step * static_cast<double>(w.size());
    const double height = 2 * margin + step * (hi - lo);
    auto X = [&](std::size_t i) { return margin + step * static_cast<double>(i); };
    auto Y = [&](int v) { return margin + step * (hi - v); };
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::fmt(width) + "\" height=\"" +
         detail::fmt(height) + "\" viewBox=\"0 0 " + detail::fmt(width) + " " + detail::fmt(height) + "\">\n";
    s += "  <title>" + w.str() + "</title>\n";
    std::string points;
    for (std::size_t i = 0; i <= w.size(); ++i)
        points += (i ? " " : "") + detail::fmt(X(i)) + "," + detail::fmt(Y(level[i]));
    s += "  <polyline class=\"path\" points=\"" + points + "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double x = (X(i) + X(i + 1)) / 2;
        const double y = (Y(level[i]) + Y(level[i + 1])) / 2;
        const double dx = w[i] ? -8 : 8;
        s += "  <text class=\"height\" x=\"" + detail::fmt(x + dx) + "\" y=\"" + detail::fmt(y - 4) +
             "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(hp.heights[i]) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace ncpair

#endif  // NCPAIR_SVG_HPP
