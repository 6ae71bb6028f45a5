#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ddecomp/border.hpp"
#include "ddecomp/bounds.hpp"
#include "ddecomp/cad2d.hpp"
#include "ddecomp/error.hpp"
#include "ddecomp/family.hpp"
#include "ddecomp/parse.hpp"
#include "ddecomp/stability.hpp"

namespace ddecomp {

struct PointReport {
    SamplePoint pt;
    RootCount rc;
    int region = 0;
};

struct RegionReport {
    std::string border_text;
    int degree = 0;
    std::vector<std::pair<std::string, mpz_class>> bounds;  // fixed key order
    std::vector<PointReport> points;                        // sorted by (r, p)
    int region_count = 0;
    bool has_stable_region = false;
    std::vector<std::string> warnings;

    // display payload
    MPoly h;
    std::vector<BorderCurve::Component> components;
    std::array<std::string, 2> params{"r", "p"};
    std::array<Rational, 4> box{Rational(-1), Rational(1), Rational(-1), Rational(1)};
    int grid = 256;
};

namespace detail {

inline std::array<Rational, 4> default_box(const MPoly& h, const std::array<std::string, 2>& params,
                                           const std::vector<PointReport>& points) {
    std::vector<Rational> xs, ys;
    if (!h.is_constant()) {
        for (auto& iv : critical_abscissae(h, params[0], params[1])) {
            xs.push_back(iv.lo);
            xs.push_back(iv.hi);
        }
        for (auto& iv : critical_abscissae(h, params[1], params[0])) {
            ys.push_back(iv.lo);
            ys.push_back(iv.hi);
        }
    }
    if (xs.empty())
        for (auto& p : points) xs.push_back(p.pt.r);
    if (ys.empty())
        for (auto& p : points) ys.push_back(p.pt.p);
    if (xs.empty()) xs.push_back(Rational(0));
    if (ys.empty()) ys.push_back(Rational(0));
    Rational one(1);
    return {*std::min_element(xs.begin(), xs.end()) - one,
            *std::max_element(xs.begin(), xs.end()) + one,
            *std::min_element(ys.begin(), ys.end()) - one,
            *std::max_element(ys.begin(), ys.end()) + one};
}

}  // namespace detail

// The full analysis: characteristic polynomial if needed, discrete to
// continuous conversion, border elimination, leading component, point
// cloud, per-point exact root counts, region partition, and the bound
// table. Deterministic for a given problem.
inline RegionReport run_pipeline(const Problem& pr) {
    PolyFamily f0;
    long bt = 0, bd = 0;  // degree data for the bound table, from the input family
    if (pr.kind == Problem::Kind::polynomial) {
        f0.poly = pr.poly;
        f0.svar = "s";
        f0.params = pr.params;
        f0.time_domain = pr.time_domain;
        bt = f0.t();
        bd = f0.d();
    } else {
        MatrixFamily M;
        if (!pr.B.empty()) {
            M = closed_loop(pr.A, pr.B, pr.C, pr.K, pr.time_domain);
        } else {
            M.size = pr.A.size();
            M.time_domain = pr.time_domain;
            for (auto& row : pr.A)
                for (auto& e : row) M.entries.push_back(e);
        }
        M.params = pr.params;
        bt = static_cast<long>(M.size);
        bd = M.entry_degree();
        f0 = charpoly(M);
    }

    BorderCurve bc = border_curve(f0);
    std::vector<SamplePoint> cloud = sample_cloud(bc.h, pr.params[0], pr.params[1]);
    RegionPartition part = count_regions(bc.h, std::move(cloud), pr.params[0], pr.params[1]);

    RegionReport rep;
    rep.h = bc.h;
    rep.components = bc.components;
    rep.params = pr.params;
    rep.border_text = bc.h.str();
    rep.degree = bc.degree;
    rep.region_count = part.region_count;

    rep.bounds.emplace_back("lemma1", curve_complement_bound(bc.degree));
    if (pr.kind == Problem::Kind::polynomial) {
        rep.bounds.emplace_back("theorem2", planar_bound(bt, bd));
        if (bd >= 0) rep.bounds.emplace_back("warren", warren_bound(bt, bd, 2));
    } else {
        rep.bounds.emplace_back("corollary1", matrix_planar_bound(bt, bd, pr.time_domain));
        rep.bounds.emplace_back("corollary2", matrix_warren_bound(bt, bd, 2, pr.time_domain));
    }

    if (mpz_class(rep.region_count) > rep.bounds.front().second)
        throw Error("region count exceeds the curve-complement bound; exact invariant violated");

    rep.points.reserve(part.points.size());
    for (std::size_t i = 0; i < part.points.size(); ++i) {
        PointReport p;
        p.pt = part.points[i];
        p.region = part.region_of[i];
        p.rc = classify_point(f0, p.pt);
        rep.points.push_back(std::move(p));
    }

    int t = f0.t();
    for (auto& p : rep.points)
        if (!p.rc.marginal && p.rc.degree == t && p.rc.stable == t) rep.has_stable_region = true;

    // equal region id must mean equal counts; a violation indicates an
    // unsound merge and is surfaced as a warning
    std::map<int, std::pair<int, int>> seen;
    for (auto& p : rep.points) {
        auto [it, fresh] = seen.try_emplace(p.region, std::make_pair(p.rc.stable, p.rc.unstable));
        if (!fresh && it->second != std::make_pair(p.rc.stable, p.rc.unstable))
            rep.warnings.push_back("region " + std::to_string(p.region) +
                                   " mixes distinct root counts");
    }

    rep.box = pr.box ? *pr.box : detail::default_box(bc.h, pr.params, rep.points);
    rep.grid = pr.grid;
    return rep;
}

}  // namespace ddecomp
