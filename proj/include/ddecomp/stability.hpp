#pragma once

#include <utility>
#include <vector>

#include "ddecomp/cad2d.hpp"
#include "ddecomp/error.hpp"
#include "ddecomp/family.hpp"
#include "ddecomp/rational.hpp"
#include "ddecomp/upoly.hpp"

namespace ddecomp {

// Exact root location counts for one specialized polynomial.
struct RootCount {
    int stable = 0;
    int unstable = 0;
    int degree = 0;
    bool marginal = false;
};

using GPoly = std::vector<GaussianRational>;  // dense, ascending

inline void gp_trim(GPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline GPoly gp_mul(const GPoly& a, const GPoly& b) {
    if (a.empty() || b.empty()) return {};
    GPoly out(a.size() + b.size() - 1, GaussianRational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

namespace detail {

// q(j*omega) = R(omega) + i I(omega), exact real/imaginary split.
inline std::pair<QPoly, QPoly> split_jw(const GPoly& q) {
    QPoly R(q.size(), Rational(0)), I(q.size(), Rational(0));
    for (std::size_t k = 0; k < q.size(); ++k) {
        const Rational& re = q[k].re();
        const Rational& im = q[k].im();
        switch (k % 4) {  // j^k
            case 0: R[k] += re; I[k] += im; break;
            case 1: R[k] -= im; I[k] += re; break;
            case 2: R[k] -= re; I[k] -= im; break;
            case 3: R[k] += im; I[k] -= re; break;
        }
    }
    qp_trim(R);
    qp_trim(I);
    return {std::move(R), std::move(I)};
}

}  // namespace detail

// Left-half-plane root count of a complex-coefficient polynomial via a
// generalized Sturm chain. The axis test uses gcd(Re, Im) of q(jw); the
// count itself comes from the Cauchy index of the split of F = q * q~,
// where q~ has conjugated coefficients: F is real of even degree 2n with
// the same half-plane profile doubled, and its split pair needs no
// endpoint corrections.
inline RootCount lhp_count(GPoly q) {
    gp_trim(q);
    if (q.empty()) throw DomainError("lhp_count of the zero polynomial");
    int n = static_cast<int>(q.size()) - 1;
    if (n == 0) return {0, 0, 0, false};

    auto [R, I] = detail::split_jw(q);
    ZPoly zg;
    if (R.empty()) zg = zp_from_qp(I);
    else if (I.empty()) zg = zp_from_qp(R);
    else zg = zp_gcd(zp_from_qp(R), zp_from_qp(I));
    if (zp_degree(zg) >= 1 && sturm_count(qp_from_zp(zg), std::nullopt, std::nullopt) > 0)
        return {0, 0, n, true};

    GPoly conj(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) conj[k] = q[k].conj();
    GPoly F = gp_mul(q, conj);
    auto [u, v] = detail::split_jw(F);  // u always carries the full degree 2n
    int ind = v.empty() ? 0 : cauchy_index_pair(zp_from_qp(u), zp_from_qp(v));
    if (ind % 2 != 0) throw Error("odd Cauchy index for an even split");
    int twice_stable = n - ind / 2;
    if (twice_stable % 2 != 0 || twice_stable < 0 || twice_stable > 2 * n)
        throw Error("inconsistent Cauchy index");
    int stable = twice_stable / 2;
    return {stable, n - stable, n, false};
}

// (s-1)^deg q * q((s+1)/(s-1)) on dense coefficients.
inline GPoly gp_bilinear(const GPoly& q) {
    int n = static_cast<int>(q.size()) - 1;
    GPoly sp1{GaussianRational(1), GaussianRational(1)};   // s + 1
    GPoly sm1{GaussianRational(-1), GaussianRational(1)};  // s - 1
    std::vector<GPoly> up(static_cast<std::size_t>(n) + 1), down(static_cast<std::size_t>(n) + 1);
    up[0] = {GaussianRational(1)};
    down[0] = {GaussianRational(1)};
    for (int k = 1; k <= n; ++k) {
        up[static_cast<std::size_t>(k)] = gp_mul(up[static_cast<std::size_t>(k) - 1], sp1);
        down[static_cast<std::size_t>(k)] = gp_mul(down[static_cast<std::size_t>(k) - 1], sm1);
    }
    GPoly out;
    for (int k = 0; k <= n; ++k) {
        if (q[static_cast<std::size_t>(k)].is_zero()) continue;
        GPoly term = gp_mul(up[static_cast<std::size_t>(k)], down[static_cast<std::size_t>(n - k)]);
        if (out.size() < term.size()) out.resize(term.size(), GaussianRational(0));
        for (std::size_t i = 0; i < term.size(); ++i)
            out[i] += term[i] * q[static_cast<std::size_t>(k)];
    }
    gp_trim(out);
    return out;
}

// Unit-disk root count: marginal when q(1) = 0 (the bilinear transform
// drops degree there), otherwise the left-half-plane count of the
// transformed polynomial.
inline RootCount schur_count(GPoly q) {
    gp_trim(q);
    if (q.empty()) throw DomainError("schur_count of the zero polynomial");
    int n = static_cast<int>(q.size()) - 1;
    if (n == 0) return {0, 0, 0, false};
    GaussianRational at_one(0);
    for (auto& c : q) at_one += c;
    if (at_one.is_zero()) return {0, 0, n, true};
    RootCount inner = lhp_count(gp_bilinear(q));
    return {inner.stable, inner.unstable, n, inner.marginal};
}

// Specializes the family at a sample point and counts per the original
// time domain. A marginal result means the point touches the border,
// which the cloud construction forbids.
inline RootCount classify_point(const PolyFamily& f, const SamplePoint& pt) {
    MPoly spec = f.poly.evaluate({{f.params[0], GaussianRational(pt.r)},
                                  {f.params[1], GaussianRational(pt.p)}});
    GPoly q;
    for (auto& c : spec.coeffs_in(f.svar)) {
        if (!c.is_constant()) throw DomainError("specialization left a free variable");
        q.push_back(c.is_zero() ? GaussianRational(0) : c.constant_value());
    }
    gp_trim(q);
    if (f.time_domain == TimeDomain::continuous) {
        if (static_cast<int>(q.size()) - 1 != f.t())
            throw DegreeDropError("leading coefficient vanished at a sample point");
        RootCount rc = lhp_count(std::move(q));
        if (rc.marginal) throw BorderContactError("sample point lies on the border");
        return rc;
    }
    RootCount rc = schur_count(std::move(q));
    if (rc.marginal) throw BorderContactError("sample point lies on the border");
    return rc;
}

}  // namespace ddecomp
