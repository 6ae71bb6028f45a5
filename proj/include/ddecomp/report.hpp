#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ddecomp/pipeline.hpp"

namespace ddecomp {

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace detail

// Fixed-schema JSON report; exact rationals as strings, approximations with
// 17 significant digits, keys in a fixed order.
inline std::string emit_json(const RegionReport& rep) {
    std::string out = "{\n";
    out += "  \"border\": \"" + detail::json_escape(rep.border_text) + "\",\n";
    out += "  \"degree\": " + std::to_string(rep.degree) + ",\n";
    out += "  \"bounds\": {";
    for (std::size_t k = 0; k < rep.bounds.size(); ++k) {
        if (k) out += ", ";
        out += "\"" + rep.bounds[k].first + "\": " + rep.bounds[k].second.get_str();
    }
    out += "},\n";
    out += "  \"points\": [\n";
    for (std::size_t k = 0; k < rep.points.size(); ++k) {
        const auto& p = rep.points[k];
        out += "    {\"r\": \"" + p.pt.r.str() + "\", \"p\": \"" + p.pt.p.str() + "\"";
        out += ", \"r_approx\": " + detail::fmt17(p.pt.r.to_double());
        out += ", \"p_approx\": " + detail::fmt17(p.pt.p.to_double());
        out += ", \"stable\": " + std::to_string(p.rc.stable);
        out += ", \"unstable\": " + std::to_string(p.rc.unstable);
        out += ", \"region\": " + std::to_string(p.region) + "}";
        if (k + 1 < rep.points.size()) out += ",";
        out += "\n";
    }
    out += "  ],\n";
    out += "  \"region_count\": " + std::to_string(rep.region_count) + ",\n";
    out += std::string("  \"has_stable_region\": ") + (rep.has_stable_region ? "true" : "false") +
           "\n";
    out += "}\n";
    return out;
}

namespace detail {

struct TermD {
    double c;
    unsigned er, ep;
};

// Double-precision term list with coefficients scaled to avoid overflow;
// display only.
inline std::vector<TermD> double_terms(const MPoly& h, const std::array<std::string, 2>& params) {
    std::vector<TermD> terms;
    double maxc = 0;
    const auto& vars = h.vars();
    int ir = -1, ip = -1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == params[0]) ir = static_cast<int>(i);
        if (vars[i] == params[1]) ip = static_cast<int>(i);
    }
    for (auto& [m, c] : h.terms()) {
        TermD t;
        t.c = c.re().to_double();
        t.er = ir >= 0 ? m[static_cast<std::size_t>(ir)] : 0;
        t.ep = ip >= 0 ? m[static_cast<std::size_t>(ip)] : 0;
        maxc = std::max(maxc, std::fabs(t.c));
        terms.push_back(t);
    }
    if (maxc > 0)
        for (auto& t : terms) t.c /= maxc;
    return terms;
}

inline double eval_terms(const std::vector<TermD>& terms, double r, double p) {
    double acc = 0;
    for (auto& t : terms) acc += t.c * std::pow(r, t.er) * std::pow(p, t.ep);
    return acc;
}

inline std::string fmt2(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

}  // namespace detail

// Marching-squares contour of h plus the classified sample points, as
// deterministic SVG 1.1 text.
inline std::string emit_svg(const RegionReport& rep) {
    const int W = 640, H = 640, LEGEND = 150, MARGIN = 20;
    if (rep.grid < 16) throw DomainError("SVG grid must be at least 16");
    double x0 = rep.box[0].to_double(), x1 = rep.box[1].to_double();
    double y0 = rep.box[2].to_double(), y1 = rep.box[3].to_double();
    if (!(x0 < x1) || !(y0 < y1)) throw DomainError("degenerate SVG box");
    const int n = rep.grid;

    auto px = [&](double x) { return MARGIN + (x - x0) / (x1 - x0) * (W - 2 * MARGIN); };
    auto py = [&](double y) { return H - MARGIN - (y - y0) / (y1 - y0) * (H - 2 * MARGIN); };

    auto terms = detail::double_terms(rep.h, rep.params);
    std::vector<double> val(static_cast<std::size_t>(n + 1) * (n + 1));
    auto vid = [&](int i, int j) { return static_cast<std::size_t>(j) * (n + 1) + i; };
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            double x = x0 + (x1 - x0) * i / n;
            double y = y0 + (y1 - y0) * j / n;
            val[vid(i, j)] = detail::eval_terms(terms, x, y);
        }

    // segments between interpolated points on cell edges, keyed by edge ids
    struct Pt {
        double x, y;
    };
    std::map<long, Pt> edge_pt;
    std::vector<std::array<long, 2>> segs;
    auto edge_id = [&](int i, int j, bool vertical) {
        return (static_cast<long>(j) * (n + 1) + i) * 2 + (vertical ? 1 : 0);
    };
    auto cross = [&](int i0, int j0, int i1, int j1) {
        double a = val[vid(i0, j0)], b = val[vid(i1, j1)];
        double t = a / (a - b);
        if (!(t >= 0 && t <= 1)) t = 0.5;
        double xa = x0 + (x1 - x0) * i0 / n, xb = x0 + (x1 - x0) * i1 / n;
        double ya = y0 + (y1 - y0) * j0 / n, yb = y0 + (y1 - y0) * j1 / n;
        return Pt{xa + (xb - xa) * t, ya + (yb - ya) * t};
    };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double v00 = val[vid(i, j)], v10 = val[vid(i + 1, j)];
            double v01 = val[vid(i, j + 1)], v11 = val[vid(i + 1, j + 1)];
            int mask = (v00 > 0) | ((v10 > 0) << 1) | ((v11 > 0) << 2) | ((v01 > 0) << 3);
            if (mask == 0 || mask == 15) continue;
            long bottom = edge_id(i, j, false), top = edge_id(i, j + 1, false);
            long left = edge_id(i, j, true), right = edge_id(i + 1, j, true);
            auto put = [&](long e, int ia, int ja, int ib, int jb) {
                if (!edge_pt.count(e)) edge_pt[e] = cross(ia, ja, ib, jb);
            };
            auto seg = [&](long e1, long e2) { segs.push_back({e1, e2}); };
            bool b00 = v00 > 0, b10 = v10 > 0, b11 = v11 > 0, b01 = v01 > 0;
            if (b00 != b10) put(bottom, i, j, i + 1, j);
            if (b01 != b11) put(top, i, j + 1, i + 1, j + 1);
            if (b00 != b01) put(left, i, j, i, j + 1);
            if (b10 != b11) put(right, i + 1, j, i + 1, j + 1);
            switch (mask) {
                case 1: case 14: seg(bottom, left); break;
                case 2: case 13: seg(bottom, right); break;
                case 3: case 12: seg(left, right); break;
                case 4: case 11: seg(top, right); break;
                case 6: case 9: seg(bottom, top); break;
                case 7: case 8: seg(top, left); break;
                case 5: case 10: {
                    double center = (v00 + v10 + v01 + v11) / 4;
                    bool cpos = center > 0;
                    if ((mask == 5) == cpos) {
                        seg(bottom, right);
                        seg(top, left);
                    } else {
                        seg(bottom, left);
                        seg(top, right);
                    }
                    break;
                }
            }
        }

    // join segments into chains by shared edge ids
    std::map<long, std::vector<std::size_t>> by_edge;
    for (std::size_t k = 0; k < segs.size(); ++k) {
        by_edge[segs[k][0]].push_back(k);
        by_edge[segs[k][1]].push_back(k);
    }
    std::vector<bool> used(segs.size(), false);
    std::vector<std::vector<long>> chains;
    for (std::size_t k = 0; k < segs.size(); ++k) {
        if (used[k]) continue;
        std::vector<long> chain{segs[k][0], segs[k][1]};
        used[k] = true;
        for (int dir = 0; dir < 2; ++dir) {
            while (true) {
                long endv = dir == 0 ? chain.back() : chain.front();
                std::size_t next = segs.size();
                for (auto idx : by_edge[endv])
                    if (!used[idx]) {
                        next = idx;
                        break;
                    }
                if (next == segs.size()) break;
                used[next] = true;
                long other = segs[next][0] == endv ? segs[next][1] : segs[next][0];
                if (dir == 0) chain.push_back(other);
                else chain.insert(chain.begin(), other);
            }
        }
        chains.push_back(std::move(chain));
    }

    static const char* palette[] = {"#d73027", "#fc8d59", "#fee090", "#a6d96a",
                                    "#1a9850", "#66bd63", "#3288bd", "#5e4fa2",
                                    "#9e0142", "#762a83"};
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(W + LEGEND) + "\" height=\"" + std::to_string(H) + "\" viewBox=\"0 0 " +
           std::to_string(W + LEGEND) + " " + std::to_string(H) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(W + LEGEND) + "\" height=\"" +
           std::to_string(H) + "\" fill=\"white\"/>\n";
    svg += "<rect x=\"" + std::to_string(MARGIN) + "\" y=\"" + std::to_string(MARGIN) +
           "\" width=\"" + std::to_string(W - 2 * MARGIN) + "\" height=\"" +
           std::to_string(H - 2 * MARGIN) + "\" fill=\"none\" stroke=\"#888\"/>\n";
    for (auto& chain : chains) {
        svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
        for (std::size_t k = 0; k < chain.size(); ++k) {
            const Pt& pt = edge_pt[chain[k]];
            if (k) svg += " ";
            svg += detail::fmt2(px(pt.x)) + "," + detail::fmt2(py(pt.y));
        }
        svg += "\"/>\n";
    }
    std::set<int> stable_values;
    for (auto& p : rep.points) {
        double x = p.pt.r.to_double(), y = p.pt.p.to_double();
        if (x < x0 || x > x1 || y < y0 || y > y1) continue;
        int idx = p.rc.stable % 10;
        stable_values.insert(p.rc.stable);
        svg += "<circle cx=\"" + detail::fmt2(px(x)) + "\" cy=\"" + detail::fmt2(py(y)) +
               "\" r=\"4\" fill=\"" + palette[idx] + "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
    int ly = MARGIN + 10;
    svg += "<text x=\"" + std::to_string(W + 10) + "\" y=\"" + std::to_string(ly) +
           "\" font-family=\"sans-serif\" font-size=\"13\">stable roots</text>\n";
    for (int sv : stable_values) {
        ly += 22;
        svg += "<circle cx=\"" + std::to_string(W + 18) + "\" cy=\"" + std::to_string(ly - 4) +
               "\" r=\"5\" fill=\"" + palette[sv % 10] + "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        svg += "<text x=\"" + std::to_string(W + 32) + "\" y=\"" + std::to_string(ly) +
               "\" font-family=\"sans-serif\" font-size=\"13\">" + std::to_string(sv) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace ddecomp
