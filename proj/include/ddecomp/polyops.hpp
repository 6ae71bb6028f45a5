#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ddecomp/error.hpp"
#include "ddecomp/mpoly.hpp"
#include "ddecomp/rational.hpp"

namespace ddecomp {

namespace detail {

inline Mono embed_mono(const Mono& m, const std::vector<std::string>& from,
                       const std::vector<std::string>& to) {
    Mono out(to.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        out[static_cast<std::size_t>(it - to.begin())] = m[i];
    }
    return out;
}

inline std::vector<std::string> var_union(const MPoly& a, const MPoly& b) {
    std::vector<std::string> u;
    std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                   std::back_inserter(u));
    return u;
}

}  // namespace detail

// Positive rational c such that f / c has coprime integer coefficients
// (real and imaginary parts together).
inline Rational mp_rational_content(const MPoly& f) {
    if (f.is_zero()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    auto feed = [&](const Rational& r) {
        if (r.is_zero()) return;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), r.numerator().get_mpz_t());
        num_gcd = g;
        mpz_class d = r.denominator();
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    };
    for (auto& [m, c] : f.terms()) {
        feed(c.re());
        feed(c.im());
    }
    if (num_gcd < 0) num_gcd = -num_gcd;
    return Rational(num_gcd, den_lcm);
}

// Scalar normalization: coprime integer coefficients and a canonical unit --
// the grlex-leading coefficient gets positive real part (positive imaginary
// part if the real part is zero).
inline MPoly mp_make_canonical(const MPoly& f) {
    if (f.is_zero()) return f;
    MPoly out = f * GaussianRational(mp_rational_content(f).inv());
    GaussianRational lc = out.leading_coefficient();
    int s = lc.re().is_zero() ? lc.im().sign() : lc.re().sign();
    if (s < 0) out = -out;
    return out;
}

// Exact multivariate division; throws DomainError when g does not divide f.
inline MPoly mp_divexact(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (f.is_zero()) return MPoly();
    if (g.is_constant()) return f * g.constant_value().inv();
    std::vector<std::string> u = detail::var_union(f, g);
    Mono glead = detail::embed_mono(g.leading_monomial(), g.vars(), u);
    GaussianRational gc = g.leading_coefficient();
    MPoly q, r = f;
    while (!r.is_zero()) {
        Mono rlead = detail::embed_mono(r.leading_monomial(), r.vars(), u);
        Mono diff(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (rlead[i] < glead[i]) throw DomainError("inexact polynomial division");
            diff[i] = rlead[i] - glead[i];
        }
        MPoly t = MPoly::term(r.leading_coefficient() / gc, u, diff);
        q += t;
        r -= t * g;
    }
    return q;
}

inline MPoly mp_gcd(const MPoly& f, const MPoly& g, const std::string& var);

// gcd with an automatically chosen main variable (used for contents).
inline MPoly mp_gcd_any(const MPoly& f, const MPoly& g) {
    if (f.is_zero()) return mp_make_canonical(g);
    if (g.is_zero()) return mp_make_canonical(f);
    if (f.is_constant() || g.is_constant()) return MPoly(1);
    std::vector<std::string> u = detail::var_union(f, g);
    return mp_gcd(f, g, u.front());
}

// Content of f with respect to var: gcd of the coefficients of powers of var.
inline MPoly mp_content(const MPoly& f, const std::string& var) {
    if (f.is_zero()) return MPoly();
    if (!f.depends_on(var)) return mp_make_canonical(f);
    MPoly c;
    for (auto& coeff : f.coeffs_in(var)) {
        if (coeff.is_zero()) continue;
        c = mp_gcd_any(c, coeff);
        if (c.is_constant()) return MPoly(1);
    }
    return c;
}

inline MPoly mp_primitive_part(const MPoly& f, const std::string& var) {
    if (f.is_zero()) return f;
    return mp_make_canonical(mp_divexact(f, mp_content(f, var)));
}

namespace detail {

// Pseudo remainder w.r.t. var: lc(g)^(deg f - deg g + 1) f mod g.
inline MPoly mp_prem(const MPoly& f, const MPoly& g, const std::string& var) {
    int dg = g.degree_in(var);
    MPoly lg = g.coeff_of(var, static_cast<std::uint32_t>(dg));
    MPoly r = f;
    int e = f.degree_in(var) - dg + 1;
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        int dr = r.degree_in(var);
        MPoly lr = r.coeff_of(var, static_cast<std::uint32_t>(dr));
        MPoly shift = MPoly::variable(var).pow(static_cast<unsigned>(dr - dg));
        r = lg * r - lr * shift * g;
        --e;
    }
    if (e > 0) r = lg.pow(static_cast<unsigned>(e)) * r;
    return r;
}

}  // namespace detail

// Greatest common divisor w.r.t. a main variable, by subresultant PRS with
// content/primitive-part recursion. Primitive in var; canonical scalar
// normalization fixes the unit.
inline MPoly mp_gcd(const MPoly& f, const MPoly& g, const std::string& var) {
    if (f.is_zero()) return mp_make_canonical(g);
    if (g.is_zero()) return mp_make_canonical(f);
    bool fv = f.depends_on(var), gv = g.depends_on(var);
    if (!fv || !gv) {
        MPoly cf = fv ? mp_content(f, var) : f;
        MPoly cg = gv ? mp_content(g, var) : g;
        return mp_gcd_any(cf, cg);
    }
    MPoly cf = mp_content(f, var), cg = mp_content(g, var);
    MPoly u = mp_divexact(f, cf), v = mp_divexact(g, cg);
    MPoly cont = mp_gcd_any(cf, cg);
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
    MPoly gg(1), h(1);
    while (true) {
        int delta = u.degree_in(var) - v.degree_in(var);
        MPoly r = detail::mp_prem(u, v, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            v = MPoly(1);
            break;
        }
        u = v;
        v = mp_divexact(r, gg * h.pow(static_cast<unsigned>(delta)));
        gg = u.coeff_of(var, static_cast<std::uint32_t>(u.degree_in(var)));
        if (delta > 0)
            h = mp_divexact(gg.pow(static_cast<unsigned>(delta)),
                            h.pow(static_cast<unsigned>(delta - 1)));
    }
    MPoly result = cont * (v.is_constant() ? MPoly(1) : mp_primitive_part(v, var));
    return mp_make_canonical(result);
}

// f / gcd(f, df/dvar): same zero set once contents are handled by the
// caller; primitive, canonical scalar.
inline MPoly mp_squarefree_part(const MPoly& f, const std::string& var) {
    if (f.is_zero()) throw DomainError("square-free part of zero polynomial");
    if (!f.depends_on(var)) throw DomainError("square-free part: polynomial free of variable");
    MPoly g = mp_gcd(f, f.derivative(var), var);
    return mp_make_canonical(mp_divexact(f, g));
}

namespace detail {

// Fraction-free Bareiss determinant over any exact coefficient type with
// mul/sub/divexact. Entries consumed.
inline MPoly bareiss_det_mpoly(std::vector<std::vector<MPoly>>& m) {
    std::size_t s = m.size();
    int sign = 1;
    MPoly prev(1);
    for (std::size_t k = 0; k + 1 < s; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t i = k + 1;
            while (i < s && m[i][k].is_zero()) ++i;
            if (i == s) return MPoly();
            std::swap(m[k], m[i]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < s; ++i) {
            for (std::size_t j = k + 1; j < s; ++j) {
                m[i][j] = mp_divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    MPoly det = m[s - 1][s - 1];
    return sign < 0 ? -det : det;
}

inline GaussianRational bareiss_det_gaussian(std::vector<std::vector<GaussianRational>>& m) {
    std::size_t s = m.size();
    int sign = 1;
    GaussianRational prev(1);
    for (std::size_t k = 0; k + 1 < s; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t i = k + 1;
            while (i < s && m[i][k].is_zero()) ++i;
            if (i == s) return GaussianRational(0);
            std::swap(m[k], m[i]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < s; ++i) {
            for (std::size_t j = k + 1; j < s; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = GaussianRational(0);
        }
        prev = m[k][k];
    }
    GaussianRational det = m[s - 1][s - 1];
    return sign < 0 ? -det : det;
}

// Sylvester resultant of univariate coefficient vectors (ascending).
inline GaussianRational resultant_uni(const std::vector<GaussianRational>& f,
                                      const std::vector<GaussianRational>& g) {
    int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
    if (m < 0 || n < 0) throw DomainError("resultant of zero polynomial");
    if (m == 0) return f[0].pow(static_cast<unsigned>(n));
    if (n == 0) return g[0].pow(static_cast<unsigned>(m));
    std::size_t s = static_cast<std::size_t>(m + n);
    std::vector<std::vector<GaussianRational>> M(s, std::vector<GaussianRational>(s, GaussianRational(0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) M[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = f[static_cast<std::size_t>(m - k)];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) M[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] = g[static_cast<std::size_t>(n - k)];
    return bareiss_det_gaussian(M);
}

// Newton interpolation through (nodes[i], values[i]).
inline std::vector<GaussianRational> newton_interpolate(const std::vector<Rational>& nodes,
                                                        const std::vector<GaussianRational>& values) {
    std::size_t n = nodes.size();
    std::vector<GaussianRational> dd = values;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            GaussianRational den(nodes[i] - nodes[i - level]);
            dd[i] = (dd[i] - dd[i - 1]) / den;
            if (i == level) break;
        }
    }
    // expand sum dd[k] * prod_{j<k} (x - nodes[j]) from the top down
    std::vector<GaussianRational> poly{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // poly <- poly * (x - nodes[k]) + dd[k]
        std::vector<GaussianRational> nxt(poly.size() + 1, GaussianRational(0));
        GaussianRational c(nodes[k]);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            nxt[i + 1] += poly[i];
            nxt[i] -= poly[i] * c;
        }
        nxt[0] += dd[k];
        poly = std::move(nxt);
    }
    return poly;
}

}  // namespace detail

// Resultant of f and g with respect to var: determinant of their Sylvester
// matrix. A Bareiss elimination handles the border-size matrices exactly as
// polynomial entries; large Sylvester matrices with only one remaining
// variable go through exact evaluation/interpolation instead.
inline MPoly mp_resultant(const MPoly& f, const MPoly& g, const std::string& var) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of zero polynomial");
    bool fv = f.depends_on(var), gv = g.depends_on(var);
    if (!fv && !gv) throw DomainError("resultant: neither input depends on the variable");
    if (!fv) return f.pow(static_cast<unsigned>(g.degree_in(var)));
    if (!gv) return g.pow(static_cast<unsigned>(f.degree_in(var)));

    int m = f.degree_in(var), n = g.degree_in(var);
    std::vector<std::string> u = detail::var_union(f, g);

    if (m + n > 14 && u.size() == 2) {
        // evaluation / interpolation in the surviving variable
        const std::string other = u[0] == var ? u[1] : u[0];
        auto fc = f.coeffs_in(var);
        auto gc = g.coeffs_in(var);
        int dof = 0, dog = 0;
        for (auto& c : fc) dof = std::max(dof, c.degree_in(other));
        for (auto& c : gc) dog = std::max(dog, c.degree_in(other));
        int D = m * dog + n * dof;
        std::vector<Rational> nodes;
        std::vector<GaussianRational> values;
        for (long t = 0; static_cast<int>(nodes.size()) <= D; ++t) {
            long x = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);
            std::map<std::string, GaussianRational> asg{{other, GaussianRational(Rational(x))}};
            if (fc[static_cast<std::size_t>(m)].evaluate(asg).constant_value().is_zero()) continue;
            if (gc[static_cast<std::size_t>(n)].evaluate(asg).constant_value().is_zero()) continue;
            std::vector<GaussianRational> fv2, gv2;
            for (auto& c : fc) fv2.push_back(c.evaluate(asg).constant_value());
            for (auto& c : gc) gv2.push_back(c.evaluate(asg).constant_value());
            nodes.push_back(Rational(x));
            values.push_back(detail::resultant_uni(fv2, gv2));
        }
        auto coeffs = detail::newton_interpolate(nodes, values);
        MPoly out;
        MPoly x = MPoly::variable(other), xp(1);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (!coeffs[k].is_zero()) out += MPoly(coeffs[k]) * xp;
            if (k + 1 < coeffs.size()) xp *= x;
        }
        return out;
    }

    auto fc = f.coeffs_in(var);
    auto gc = g.coeffs_in(var);
    std::size_t s = static_cast<std::size_t>(m + n);
    std::vector<std::vector<MPoly>> M(s, std::vector<MPoly>(s));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            M[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = fc[static_cast<std::size_t>(m - k)];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            M[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] = gc[static_cast<std::size_t>(n - k)];
    return detail::bareiss_det_mpoly(M);
}

}  // namespace ddecomp
