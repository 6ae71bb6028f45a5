#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddecomp/error.hpp"
#include "ddecomp/mpoly.hpp"
#include "ddecomp/polyops.hpp"
#include "ddecomp/upoly.hpp"

namespace ddecomp {

struct DegenerateSegmentError : Error {
    using Error::Error;
};

// One exact rational point of the cloud, strictly off the curve.
struct SamplePoint {
    Rational r, p;
    int stack_index = 0;
    int cell_index = 0;
};

struct RegionPartition {
    std::vector<SamplePoint> points;  // sorted lexicographically by (r, p)
    std::vector<int> region_of;      // parallel to points
    int region_count = 0;
};

namespace detail {

// Projection polynomial whose real roots are the critical abscissae:
// discriminant of the square-free primitive part, its leading coefficient
// in the fiber variable, and the fiber-free content (vertical components).
// For h free of the fiber variable it is h itself.
inline MPoly projection_poly(const MPoly& h, const std::string& rvar, const std::string& pvar) {
    if (h.is_constant()) return MPoly(1);
    if (!h.depends_on(pvar)) return mp_make_canonical(h);
    MPoly cont = mp_content(h, pvar);
    MPoly pp = mp_divexact(h, cont);
    MPoly ppsf = mp_squarefree_part(pp, pvar);
    MPoly disc = mp_resultant(ppsf, ppsf.derivative(pvar), pvar);
    MPoly phi = mp_make_canonical(disc);
    MPoly lc = ppsf.coeff_of(pvar, static_cast<std::uint32_t>(ppsf.degree_in(pvar)));
    if (!lc.is_constant()) phi *= mp_make_canonical(lc);
    if (!cont.is_constant()) phi *= mp_make_canonical(cont);
    return mp_make_canonical(phi);
}

inline QPoly qpoly_from_univariate(const MPoly& f, const std::string& var) {
    if (!f.is_real()) throw DomainError("expected real coefficients");
    QPoly out;
    for (auto& c : f.coeffs_in(var)) {
        if (!c.is_constant()) throw DomainError("expected a univariate polynomial");
        out.push_back(c.constant_value().re());
    }
    qp_trim(out);
    return out;
}

// Refines isolating intervals until consecutive ones are strictly separated
// (hi_k < lo_{k+1}) and all endpoints lie strictly inside (-B, B).
inline void separate_intervals(std::vector<Interval>& ivs, const SturmRefiner& ref,
                               const Rational& B) {
    for (auto& iv : ivs) {
        int guard = 0;
        while (!iv.exact && (!(Rational(-1) * B < iv.lo) || !(iv.hi < B))) {
            if (++guard > 100000) throw Error("interval refinement did not terminate");
            iv = ref.refine(iv);
        }
    }
    bool changed = true;
    int guard = 0;
    while (changed) {
        if (++guard > 1000000) throw Error("interval separation did not terminate");
        changed = false;
        for (std::size_t k = 0; k + 1 < ivs.size(); ++k) {
            if (ivs[k].hi < ivs[k + 1].lo) continue;
            if (ivs[k].exact && ivs[k + 1].exact) throw Error("duplicate root in interval list");
            if (!ivs[k].exact) ivs[k] = ref.refine(ivs[k]);
            if (!ivs[k + 1].exact) ivs[k + 1] = ref.refine(ivs[k + 1]);
            changed = true;
        }
    }
}

}  // namespace detail

// Isolating intervals for all critical abscissae of the curve h = 0.
inline std::vector<Interval> critical_abscissae(const MPoly& h, const std::string& rvar,
                                                const std::string& pvar) {
    MPoly phi = detail::projection_poly(h, rvar, pvar);
    if (phi.is_constant()) return {};
    QPoly q = detail::qpoly_from_univariate(phi, rvar);
    return isolate_real_roots_q(q);
}

// The rational with minimal denominator strictly inside (lo, hi), ties
// broken by minimal |numerator| and then the smaller value; Stern-Brocot
// descent. An absent endpoint is unbounded on that side.
inline Rational simplest_rational_in(const std::optional<Rational>& lo,
                                     const std::optional<Rational>& hi) {
    if (lo && hi && !(*lo < *hi)) throw DomainError("simplest_rational_in: empty interval");
    auto inside = [&](const Rational& x) { return (!lo || *lo < x) && (!hi || x < *hi); };
    if (inside(Rational(0))) return Rational(0);
    if (!lo) return Rational(hi->ceil() - 1);      // largest integer strictly below hi <= 0
    if (!hi) return Rational(lo->floor() + 1);     // smallest integer strictly above lo >= 0
    if (hi->sign() <= 0) return -simplest_rational_in(-*hi, -*lo);

    // now 0 <= lo < hi
    std::function<Rational(const Rational&, const Rational&)> simplest =
        [&](const Rational& a, const Rational& b) -> Rational {
        Rational m(a.floor() + 1);
        if (m < b) return m;
        mpz_class fl = a.floor();
        Rational a2 = a - Rational(fl), b2 = b - Rational(fl);  // 0 <= a2 < b2 <= 1
        if (a2.is_zero()) {
            // (0, b2): simplest element is 1/d for the least d with 1/d < b2
            Rational inv = b2.inv();
            mpz_class d = inv.floor() + 1;
            return Rational(fl) + Rational(mpz_class(1), d);
        }
        return Rational(fl) + simplest(b2.inv(), a2.inv()).inv();
    };
    return simplest(*lo, *hi);
}

namespace detail {

// One rational strictly inside each open gap between consecutive isolated
// roots, plus one below the least and one above the greatest, inside the
// root bound B.
inline std::vector<Rational> gap_samples(std::vector<Interval> ivs, const SturmRefiner& ref,
                                         const Rational& B) {
    std::vector<Rational> out;
    if (ivs.empty()) {
        out.push_back(simplest_rational_in(-B, B));
        return out;
    }
    separate_intervals(ivs, ref, B);
    out.push_back(simplest_rational_in(-B, ivs.front().lo));
    for (std::size_t k = 0; k + 1 < ivs.size(); ++k)
        out.push_back(simplest_rational_in(ivs[k].hi, ivs[k + 1].lo));
    out.push_back(simplest_rational_in(ivs.back().hi, B));
    return out;
}

}  // namespace detail

// Point cloud containing at least one point in every connected region of
// the complement of {h = 0}.
inline std::vector<SamplePoint> sample_cloud(const MPoly& h, const std::string& rvar,
                                             const std::string& pvar) {
    if (h.is_zero()) throw DomainError("sample_cloud of the zero polynomial");
    if (h.is_constant()) return {SamplePoint{Rational(0), Rational(0), 0, 0}};

    MPoly phi = detail::projection_poly(h, rvar, pvar);
    std::vector<Rational> abscissae;
    if (phi.is_constant()) {
        abscissae.push_back(Rational(0));
    } else {
        QPoly q = detail::qpoly_from_univariate(phi, rvar);
        ZPoly sf = zp_squarefree(zp_from_qp(q));
        SturmRefiner ref(sf);
        Rational B = cauchy_root_bound_q(qp_from_zp(sf));
        abscissae = detail::gap_samples(isolate_real_roots_q(q), ref, B);
    }

    std::vector<SamplePoint> cloud;
    int stack = 0;
    for (auto& r0 : abscissae) {
        MPoly fiber_mp = h.evaluate({{rvar, GaussianRational(r0)}});
        std::vector<Rational> ordinates;
        if (fiber_mp.is_constant()) {
            if (fiber_mp.is_zero()) throw Error("sample abscissa lies on a vertical component");
            ordinates.push_back(Rational(0));
        } else {
            QPoly fiber = detail::qpoly_from_univariate(fiber_mp, pvar);
            ZPoly sf = zp_squarefree(zp_from_qp(fiber));
            SturmRefiner ref(sf);
            Rational B = cauchy_root_bound_q(qp_from_zp(sf));
            ordinates = detail::gap_samples(isolate_real_roots_q(fiber), ref, B);
        }
        int cell = 0;
        for (auto& p0 : ordinates) {
            GaussianRational val =
                h.evaluate({{rvar, GaussianRational(r0)}, {pvar, GaussianRational(p0)}})
                    .constant_value();
            if (val.is_zero()) throw Error("sample point landed on the curve");
            cloud.push_back(SamplePoint{r0, p0, stack, cell++});
        }
        ++stack;
    }
    return cloud;
}

// Number of distinct curve crossings strictly inside the straight segment
// from a to b; 0 certifies that a and b lie in the same region.
inline int segment_crossings(const MPoly& h, const SamplePoint& a, const SamplePoint& b,
                             const std::string& rvar, const std::string& pvar) {
    if (a.r == b.r && a.p == b.p) return 0;
    QPoly rline{a.r, b.r - a.r}, pline{a.p, b.p - a.p};
    qp_trim(rline);
    qp_trim(pline);
    auto eval_line = [](const MPoly& c, const std::string& var, const QPoly& line) {
        QPoly acc;
        auto coeffs = c.coeffs_in(var);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = qp_mul(acc, line);
            Rational cv = it->is_zero() ? Rational(0) : it->constant_value().re();
            if (!cv.is_zero()) {
                if (acc.empty()) acc.push_back(cv);
                else acc[0] += cv;
            }
            qp_trim(acc);
        }
        return acc;
    };
    QPoly g;
    auto pcoeffs = h.coeffs_in(pvar);
    for (auto it = pcoeffs.rbegin(); it != pcoeffs.rend(); ++it) {
        g = qp_mul(g, pline);
        QPoly ck;
        if (it->depends_on(rvar)) ck = eval_line(*it, rvar, rline);
        else if (!it->is_zero()) ck = QPoly{it->constant_value().re()};
        for (std::size_t k = 0; k < ck.size(); ++k) {
            if (g.size() <= k) g.resize(k + 1, Rational(0));
            g[k] += ck[k];
        }
        qp_trim(g);
    }
    if (g.empty()) throw DegenerateSegmentError("segment lies inside the curve");
    if (qp_eval(g, Rational(0)).is_zero() || qp_eval(g, Rational(1)).is_zero())
        throw Error("segment endpoint lies on the curve");
    ZPoly sf = zp_squarefree(zp_from_qp(g));
    if (zp_degree(sf) == 0) return 0;
    return sturm_count(qp_from_zp(sf), Rational(0), Rational(1));
}

// Union-find region merge over the cloud: an edge wherever a straight
// segment shows zero crossings (adjacent stacks first, then all remaining
// same-sign pairs by distance). Merging is sound; the count can only
// overcount when no tested polyline witnesses connectivity.
inline RegionPartition count_regions(const MPoly& h, std::vector<SamplePoint> cloud,
                                     const std::string& rvar, const std::string& pvar) {
    std::size_t n = cloud.size();
    std::sort(cloud.begin(), cloud.end(), [](const SamplePoint& a, const SamplePoint& b) {
        if (a.r != b.r) return a.r < b.r;
        return a.p < b.p;
    });
    std::vector<int> sign(n);
    for (std::size_t i = 0; i < n; ++i) {
        GaussianRational v = h.evaluate({{rvar, GaussianRational(cloud[i].r)},
                                         {pvar, GaussianRational(cloud[i].p)}})
                                 .constant_value();
        sign[i] = v.re().sign();
        if (sign[i] == 0) throw Error("cloud point lies on the curve");
    }

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    struct Cand {
        Rational dist2;
        std::size_t i, j;
        bool adjacent;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cloud[i].stack_index == cloud[j].stack_index) continue;  // vertical segments cross fibers
            if (sign[i] != sign[j]) continue;                            // odd crossing count
            Rational dr = cloud[i].r - cloud[j].r, dp = cloud[i].p - cloud[j].p;
            bool adj = std::abs(cloud[i].stack_index - cloud[j].stack_index) == 1;
            cands.push_back({dr * dr + dp * dp, i, j, adj});
        }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.adjacent != b.adjacent) return a.adjacent;
        if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    for (auto& c : cands) {
        if (find(c.i) == find(c.j)) continue;
        try {
            if (segment_crossings(h, cloud[c.i], cloud[c.j], rvar, pvar) == 0)
                parent[find(c.i)] = find(c.j);
        } catch (const DegenerateSegmentError&) {
            // skipped, not fatal
        }
    }

    RegionPartition part;
    part.points = std::move(cloud);
    part.region_of.assign(n, -1);
    std::map<std::size_t, int> ids;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = ids.try_emplace(find(i), static_cast<int>(ids.size()));
        part.region_of[i] = it->second;
    }
    part.region_count = static_cast<int>(ids.size());
    return part;
}

}  // namespace ddecomp
