#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ddecomp/error.hpp"
#include "ddecomp/mpoly.hpp"
#include "ddecomp/polyops.hpp"

namespace ddecomp {

enum class TimeDomain { continuous, discrete };

// Parametric polynomial family P(s, r, p) with a time-domain tag.
struct PolyFamily {
    MPoly poly;
    std::string svar = "s";
    std::array<std::string, 2> params{"r", "p"};
    TimeDomain time_domain = TimeDomain::continuous;

    // degree in s
    int t() const { return std::max(poly.degree_in(svar), 0); }

    // total degree in the parameters together
    int d() const {
        int dmax = 0;
        for (auto& c : poly.coeffs_in(svar)) dmax = std::max(dmax, c.total_degree());
        return dmax;
    }
};

// Real/imaginary split of P(j*omega, r, p); both polynomials have exactly
// zero imaginary coefficient parts.
struct SplitPair {
    MPoly R, I;
    std::string omega;
    std::array<std::string, 2> params;
};

// (s-1)^deg(f) * f((s+1)/(s-1)), computed termwise on the coefficients of
// powers of svar.
inline MPoly bilinear_transform(const MPoly& f, const std::string& svar) {
    int t = std::max(f.degree_in(svar), 0);
    auto coeffs = f.coeffs_in(svar);
    MPoly s = MPoly::variable(svar);
    MPoly sp1 = s + MPoly(1), sm1 = s - MPoly(1);
    std::vector<MPoly> up(static_cast<std::size_t>(t) + 1), down(static_cast<std::size_t>(t) + 1);
    up[0] = MPoly(1);
    down[0] = MPoly(1);
    for (int k = 1; k <= t; ++k) {
        up[static_cast<std::size_t>(k)] = up[static_cast<std::size_t>(k) - 1] * sp1;
        down[static_cast<std::size_t>(k)] = down[static_cast<std::size_t>(k) - 1] * sm1;
    }
    MPoly out;
    for (int k = 0; k <= t; ++k) {
        const MPoly& c = coeffs[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        out += c * up[static_cast<std::size_t>(k)] * down[static_cast<std::size_t>(t - k)];
    }
    return out;
}

// Discrete -> continuous conversion; Schur roots of the input correspond to
// Hurwitz roots of the output. Fails if the whole family has a root pinned
// at z = 1 (leading coefficient of the transform vanishes identically).
inline PolyFamily to_continuous(const PolyFamily& f) {
    if (f.time_domain != TimeDomain::discrete)
        throw DomainError("to_continuous expects a discrete-time family");
    MPoly at_one = f.poly.evaluate({{f.svar, GaussianRational(1)}});
    if (at_one.is_zero())
        throw DegenerateFamilyError(
            "degenerate family: P(1, r, p) vanishes identically (root fixed at z = 1)");
    PolyFamily out;
    out.poly = bilinear_transform(f.poly, f.svar);
    out.svar = f.svar;
    out.params = f.params;
    out.time_domain = TimeDomain::continuous;
    return out;
}

// Substitute s = j*omega and collect real and imaginary parts.
inline SplitPair split_re_im(const PolyFamily& f) {
    if (f.time_domain != TimeDomain::continuous)
        throw DomainError("split_re_im expects a continuous-time family");
    const std::string omega = "w";
    if (f.params[0] == omega || f.params[1] == omega || f.svar == omega)
        throw DomainError("variable name 'w' is reserved for the frequency variable");
    MPoly R, I;
    MPoly womega = MPoly::variable(omega);
    auto coeffs = f.poly.coeffs_in(f.svar);
    MPoly wpow(1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) {
            const MPoly& c = coeffs[k];
            MPoly cre = c.real_part(), cim = c.imag_part();
            switch (k % 4) {  // j^k
                case 0: R += cre * wpow; I += cim * wpow; break;
                case 1: R += -cim * wpow; I += cre * wpow; break;
                case 2: R += -cre * wpow; I += -cim * wpow; break;
                case 3: R += cim * wpow; I += -cre * wpow; break;
            }
        }
        if (k + 1 < coeffs.size()) wpow *= womega;
    }
    return {std::move(R), std::move(I), omega, f.params};
}

// Square matrix of exact polynomial entries.
struct MatrixFamily {
    std::size_t size = 0;
    std::vector<MPoly> entries;  // row-major
    std::array<std::string, 2> params{"r", "p"};
    TimeDomain time_domain = TimeDomain::continuous;

    const MPoly& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
    MPoly& at(std::size_t i, std::size_t j) { return entries[i * size + j]; }

    // max entry degree in the parameters
    int entry_degree() const {
        int d = 0;
        for (auto& e : entries) d = std::max(d, e.total_degree());
        return d;
    }
};

using Grid = std::vector<std::vector<MPoly>>;

inline void check_rect(const Grid& g, const char* name) {
    if (g.empty() || g[0].empty()) throw ShapeError(std::string(name) + " is empty");
    for (auto& row : g)
        if (row.size() != g[0].size()) throw ShapeError(std::string(name) + " is ragged");
}

// A + B*K*C, exact entrywise.
inline MatrixFamily closed_loop(const Grid& A, const Grid& B, const Grid& C, const Grid& K,
                                TimeDomain td = TimeDomain::continuous) {
    check_rect(A, "A");
    check_rect(B, "B");
    check_rect(C, "C");
    check_rect(K, "K");
    std::size_t t = A.size(), m = B[0].size(), q = C.size();
    if (A[0].size() != t) throw ShapeError("A is not square");
    if (B.size() != t) throw ShapeError("B must have as many rows as A");
    if (C[0].size() != t) throw ShapeError("C must have as many columns as A");
    if (K.size() != m || K[0].size() != q)
        throw ShapeError("K has the wrong shape for B*K*C");
    // BK: t x q
    Grid BK(t, std::vector<MPoly>(q));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t k = 0; k < m; ++k) BK[i][j] += B[i][k] * K[k][j];
    MatrixFamily out;
    out.size = t;
    out.time_domain = td;
    out.entries.resize(t * t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            MPoly acc = A[i][j];
            for (std::size_t k = 0; k < q; ++k) acc += BK[i][k] * C[k][j];
            out.at(i, j) = std::move(acc);
        }
    return out;
}

// det(sI - M) by the division-free Berkowitz recursion; monic of degree
// size in s.
inline PolyFamily charpoly(const MatrixFamily& M, const std::string& svar = "s") {
    std::size_t n = M.size;
    if (n == 0) throw ShapeError("characteristic polynomial of an empty matrix");
    // p holds coefficients of det(sI - A_r) from s^r down to s^0
    std::vector<MPoly> p{MPoly(1), -M.at(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // first column of the Berkowitz Toeplitz matrix
        std::vector<MPoly> t(r + 2);
        t[0] = MPoly(1);
        t[1] = -M.at(r, r);
        std::vector<MPoly> v(r);  // iterated A_sub^k * S column
        for (std::size_t i = 0; i < r; ++i) v[i] = M.at(i, r);
        for (std::size_t k = 2; k <= r + 1; ++k) {
            MPoly dot;
            for (std::size_t i = 0; i < r; ++i) dot += M.at(r, i) * v[i];
            t[k] = -dot;
            if (k <= r) {
                std::vector<MPoly> nv(r);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) nv[i] += M.at(i, j) * v[j];
                v = std::move(nv);
            }
        }
        std::vector<MPoly> np(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t k = 0; k <= i && k < t.size(); ++k)
                if (i - k < p.size()) np[i] += t[k] * p[i - k];
        p = std::move(np);
    }
    MPoly s = MPoly::variable(svar), out;
    MPoly spow(1);
    for (std::size_t k = 0; k < p.size(); ++k) {
        std::size_t deg = n - k;
        if (!p[k].is_zero()) out += p[k] * s.pow(static_cast<unsigned>(deg));
        (void)spow;
    }
    PolyFamily fam;
    fam.poly = std::move(out);
    fam.svar = svar;
    fam.params = M.params;
    fam.time_domain = M.time_domain;
    return fam;
}

// The locus component contributed by the leading coefficient a_t(r, p):
// a_t itself when real, Re(a_t)^2 + Im(a_t)^2 otherwise; the constant 1
// when a_t never vanishes.
inline MPoly leading_component(const PolyFamily& f) {
    int t = f.poly.degree_in(f.svar);
    if (f.poly.is_zero()) throw DegenerateFamilyError("zero family");
    MPoly at = t <= 0 ? f.poly : f.poly.coeff_of(f.svar, static_cast<std::uint32_t>(t));
    if (at.is_zero()) throw DegenerateFamilyError("leading coefficient vanishes identically");
    if (at.is_constant()) return MPoly(1);
    if (at.is_real()) return mp_make_canonical(at);
    MPoly re = at.real_part(), im = at.imag_part();
    return mp_make_canonical(re * re + im * im);
}

}  // namespace ddecomp
