#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ddecomp/error.hpp"
#include "ddecomp/rational.hpp"

namespace ddecomp {

// Isolating interval for one real root: either an exact rational point
// (lo == hi) or an open interval containing exactly one root.
struct Interval {
    Rational lo, hi;
    bool exact = false;

    bool contains(const Rational& x) const {
        if (exact) return x == lo;
        return lo < x && x < hi;
    }
};

// Dense univariate polynomials, coefficient index = exponent.
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<mpz_class>;

inline void qp_trim(QPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}
inline void zp_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int qp_degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }
inline int zp_degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline Rational qp_eval(const QPoly& f, const Rational& x) {
    Rational acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline QPoly qp_derivative(const QPoly& f) {
    QPoly d;
    for (std::size_t k = 1; k < f.size(); ++k)
        d.push_back(f[k] * Rational(static_cast<long>(k)));
    qp_trim(d);
    return d;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    qp_trim(out);
    return out;
}

// Exact quotient; throws if the division leaves a remainder.
inline QPoly qp_divexact(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw ArithmeticError("polynomial division by zero");
    QPoly r = a, q;
    qp_trim(r);
    if (r.empty()) return {};
    if (r.size() < b.size()) throw DomainError("inexact polynomial division");
    q.assign(r.size() - b.size() + 1, Rational(0));
    while (r.size() >= b.size()) {
        Rational c = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        qp_trim(r);
        if (r.empty()) break;
        if (r.size() < b.size()) throw DomainError("inexact polynomial division");
    }
    return q;
}

// Clears denominators and removes integer content; keeps the sign.
inline ZPoly zp_from_qp(const QPoly& f) {
    mpz_class lcm = 1;
    for (auto& c : f) {
        mpz_class den = c.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    ZPoly out;
    out.reserve(f.size());
    for (auto& c : f) out.push_back(c.numerator() * (lcm / c.denominator()));
    mpz_class content = 0;
    for (auto& c : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : out) c /= content;
    zp_trim(out);
    return out;
}

inline QPoly qp_from_zp(const ZPoly& f) {
    QPoly out;
    out.reserve(f.size());
    for (auto& c : f) out.push_back(Rational(c));
    return out;
}

// Removes integer content, keeps the sign of the leading coefficient.
inline ZPoly zp_primitive(ZPoly f) {
    zp_trim(f);
    mpz_class content = 0;
    for (auto& c : f) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : f) c /= content;
    return f;
}

inline ZPoly zp_derivative(const ZPoly& f) {
    ZPoly d;
    for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<long>(k));
    zp_trim(d);
    return d;
}

// Sign of f at rational a/b, evaluated homogeneously in integers.
inline int zp_sign_at(const ZPoly& f, const Rational& x) {
    if (f.empty()) return 0;
    const mpz_class a = x.numerator(), b = x.denominator();
    mpz_class acc = f.back(), bpow = 1;
    for (int k = static_cast<int>(f.size()) - 2; k >= 0; --k) {
        bpow *= b;
        acc = acc * a + f[static_cast<std::size_t>(k)] * bpow;
    }
    return sgn(acc);
}

inline int zp_sign_at_inf(const ZPoly& f, bool positive) {
    if (f.empty()) return 0;
    int s = sgn(f.back());
    if (!positive && (zp_degree(f) & 1)) s = -s;
    return s;
}

// One-sided limit sign at x: sign of f(x +- eps). Equals zp_sign_at when
// x is not a root; otherwise determined by the first nonvanishing
// derivative.
inline int zp_sign_near(const ZPoly& f, const Rational& x, bool from_right) {
    ZPoly g = f;
    for (int k = 0; !g.empty(); ++k) {
        int s = zp_sign_at(g, x);
        if (s != 0) {
            if (!from_right && (k & 1)) s = -s;
            return s;
        }
        g = zp_derivative(g);
    }
    return 0;
}

// Pseudo remainder: lc(g)^(deg f - deg g + 1) * f mod g.
inline ZPoly zp_prem(const ZPoly& f, const ZPoly& g) {
    if (g.empty()) throw ArithmeticError("pseudo-remainder by zero");
    ZPoly r = f;
    zp_trim(r);
    int dg = zp_degree(g);
    int e = static_cast<int>(r.size()) - static_cast<int>(g.size()) + 1;
    const mpz_class lg = g.back();
    while (!r.empty() && zp_degree(r) >= dg) {
        std::size_t shift = r.size() - g.size();
        mpz_class lr = r.back();
        for (auto& c : r) c *= lg;
        for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] -= lr * g[i];
        zp_trim(r);
        --e;
    }
    if (e > 0) {
        mpz_class m;
        mpz_pow_ui(m.get_mpz_t(), lg.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : r) c *= m;
    }
    return r;
}

// Primitive-PRS gcd; result primitive with positive leading coefficient.
inline ZPoly zp_gcd(ZPoly a, ZPoly b) {
    a = zp_primitive(std::move(a));
    b = zp_primitive(std::move(b));
    if (a.empty()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zp_prem(a, b);
        a = std::move(b);
        b = zp_primitive(std::move(r));
    }
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

// Square-free part (primitive, positive leading coefficient).
inline ZPoly zp_squarefree(const ZPoly& f) {
    if (f.empty()) throw DomainError("square-free part of zero");
    if (zp_degree(f) == 0) return {mpz_class(1)};
    ZPoly g = zp_gcd(f, zp_derivative(f));
    ZPoly out;
    if (zp_degree(g) == 0) out = zp_primitive(f);
    else out = zp_from_qp(qp_divexact(qp_from_zp(f), qp_from_zp(g)));
    if (!out.empty() && out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

// Generalized Sturm chain from a starting pair: negative pseudo-remainder
// sequence scaled only by positive constants, so sign variations match the
// classical chain.
inline std::vector<ZPoly> sturm_chain_pair(ZPoly f0, ZPoly f1) {
    std::vector<ZPoly> chain;
    f0 = zp_primitive(std::move(f0));
    f1 = zp_primitive(std::move(f1));
    if (f0.empty()) throw DomainError("Sturm chain of zero polynomial");
    chain.push_back(std::move(f0));
    if (f1.empty()) return chain;
    chain.push_back(std::move(f1));
    while (zp_degree(chain.back()) > 0) {
        const ZPoly& a = chain[chain.size() - 2];
        const ZPoly& b = chain.back();
        int delta = zp_degree(a) - zp_degree(b);
        ZPoly r = zp_prem(a, b);
        if (sgn(b.back()) < 0 && ((delta + 1) & 1))
            for (auto& c : r) c = -c;  // keep the effective multiplier positive
        for (auto& c : r) c = -c;      // negative-remainder recurrence
        r = zp_primitive(std::move(r));
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline std::vector<ZPoly> sturm_chain(const ZPoly& f) {
    return sturm_chain_pair(f, zp_derivative(f));
}

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Sturm-chain sign variations at a point (one-sided at roots) or at +-inf.
inline int chain_variations(const std::vector<ZPoly>& chain, const std::optional<Rational>& x,
                            bool right_or_plus_inf) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (auto& f : chain)
        signs.push_back(x ? zp_sign_near(f, *x, right_or_plus_inf)
                          : zp_sign_at_inf(f, right_or_plus_inf));
    return sign_variations(signs);
}

// Number of distinct real roots of f in the open interval (lo, hi);
// empty endpoints mean -inf / +inf. Finite endpoints must not be roots.
inline int sturm_count(const QPoly& f, const std::optional<Rational>& lo,
                       const std::optional<Rational>& hi) {
    QPoly g = f;
    qp_trim(g);
    if (g.empty()) throw DomainError("sturm_count of zero polynomial");
    ZPoly z = zp_from_qp(g);
    if (zp_degree(z) == 0) return 0;
    if (lo && zp_sign_at(z, *lo) == 0) throw DomainError("sturm_count: lower endpoint is a root");
    if (hi && zp_sign_at(z, *hi) == 0) throw DomainError("sturm_count: upper endpoint is a root");
    auto chain = sturm_chain(z);
    return chain_variations(chain, lo, lo.has_value()) -
           chain_variations(chain, hi, !hi.has_value());
}

// Cauchy index of f1/f0 over (-inf, +inf): V(-inf) - V(+inf) of the
// generalized Sturm chain started at the pair.
inline int cauchy_index_pair(const ZPoly& f0, const ZPoly& f1) {
    auto chain = sturm_chain_pair(f0, f1);
    return chain_variations(chain, std::nullopt, false) -
           chain_variations(chain, std::nullopt, true);
}

// Root modulus bound in the classic 1 + max |a_k / a_n| form.
inline Rational cauchy_root_bound_q(const QPoly& f) {
    QPoly g = f;
    qp_trim(g);
    if (g.empty()) throw DomainError("root bound of zero polynomial");
    if (qp_degree(g) == 0) return Rational(1);
    Rational mx(0);
    Rational lead = g.back().abs();
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
        Rational q = g[k].abs() / lead;
        if (q > mx) mx = q;
    }
    return Rational(1) + mx;
}

// Same for Gaussian coefficients; |re|+|im| over max(|re|,|im|) upper-bounds
// each |a_k|/|a_n|.
inline Rational cauchy_root_bound_g(const std::vector<GaussianRational>& f) {
    std::size_t n = f.size();
    while (n > 0 && f[n - 1].is_zero()) --n;
    if (n == 0) throw DomainError("root bound of zero polynomial");
    if (n == 1) return Rational(1);
    const GaussianRational& lead = f[n - 1];
    Rational lead_low = std::max(lead.re().abs(), lead.im().abs());
    Rational mx(0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        Rational q = (f[k].re().abs() + f[k].im().abs()) / lead_low;
        if (q > mx) mx = q;
    }
    return Rational(1) + mx;
}

namespace detail {

// Coefficients of f(x + c), by repeated synthetic division by (x - c).
inline ZPoly zp_taylor(const ZPoly& f, const mpz_class& c) {
    ZPoly work = f, out(f.size(), mpz_class(0));
    for (std::size_t k = 0; k < f.size(); ++k) {
        int d = zp_degree(work);
        if (d < 0) break;
        ZPoly q(static_cast<std::size_t>(d) , mpz_class(0));
        mpz_class acc = work.back();
        for (int j = d - 1; j >= 0; --j) {
            q[static_cast<std::size_t>(j)] = acc;
            acc = acc * c + work[static_cast<std::size_t>(j)];
        }
        out[k] = acc;
        work = std::move(q);
        zp_trim(work);
    }
    return out;
}

// In-place Taylor shift by one: f(x) <- f(x + 1).
inline void zp_shift1(ZPoly& f) {
    int n = zp_degree(f);
    for (int i = 0; i <= n - 1; ++i)
        for (int j = n - 1; j >= i; --j)
            f[static_cast<std::size_t>(j)] += f[static_cast<std::size_t>(j) + 1];
}

// Descartes bound on the number of roots of f in (0, 1):
// sign variations of (1+x)^n f(1/(1+x)).
inline int descartes_variations_01(const ZPoly& f) {
    ZPoly rev(f.rbegin(), f.rend());
    zp_shift1(rev);
    std::vector<int> signs;
    signs.reserve(rev.size());
    for (auto& c : rev) signs.push_back(sgn(c));
    return sign_variations(signs);
}

// Exact synthetic division by (x - 1); precondition f(1) == 0.
inline void zp_divide_by_x_minus_1(ZPoly& f) {
    if (f.empty()) return;
    ZPoly q(f.size() - 1);
    mpz_class carry = 0;
    for (int k = zp_degree(f); k >= 1; --k) {
        carry += f[static_cast<std::size_t>(k)];
        q[static_cast<std::size_t>(k) - 1] = carry;
    }
    f = std::move(q);
    zp_trim(f);
}

struct VcaFrame {
    ZPoly poly;
    Rational lo, hi;
};

}  // namespace detail

// Isolates all real roots of a nonzero real univariate polynomial
// (Descartes'-rule bisection on the square-free part). Returns disjoint
// intervals in increasing position; exact rational roots found at bisection
// points come back as exact points.
inline std::vector<Interval> isolate_real_roots_q(const QPoly& f) {
    QPoly g = f;
    qp_trim(g);
    if (g.empty()) throw DomainError("root isolation of zero polynomial");
    if (qp_degree(g) == 0) return {};
    ZPoly sf = zp_squarefree(zp_from_qp(g));
    if (zp_degree(sf) == 0) return {};

    Rational bound = cauchy_root_bound_q(qp_from_zp(sf));
    mpz_class B = 1;
    while (Rational(B) < bound) B <<= 1;

    // A(x) = sf(2Bx - B) maps (0,1) onto (-B, B)
    ZPoly A = detail::zp_taylor(sf, -B);
    {
        mpz_class pw = 1, twoB = 2 * B;
        for (std::size_t k = 0; k < A.size(); ++k) {
            A[k] *= pw;
            pw *= twoB;
        }
    }
    A = zp_primitive(std::move(A));

    std::vector<Interval> out;
    std::vector<detail::VcaFrame> stack;
    stack.push_back({std::move(A), -Rational(B), Rational(B)});
    long guard = 0;
    while (!stack.empty()) {
        if (++guard > 4000000) throw Error("root isolation did not terminate");
        detail::VcaFrame fr = std::move(stack.back());
        stack.pop_back();
        int v = detail::descartes_variations_01(fr.poly);
        if (v == 0) continue;
        if (v == 1) {
            out.push_back({fr.lo, fr.hi, false});
            continue;
        }
        int m = zp_degree(fr.poly);
        ZPoly left = fr.poly;
        {
            mpz_class pw = 1;
            for (int k = m; k >= 0; --k) {
                left[static_cast<std::size_t>(k)] *= pw;
                pw <<= 1;
            }
        }
        ZPoly right = left;
        detail::zp_shift1(right);
        Rational mid = (fr.lo + fr.hi) / Rational(2);
        mpz_class at_half = 0;  // left(1) == A(midpoint)
        for (auto& c : left) at_half += c;
        if (at_half == 0) {
            out.push_back({mid, mid, true});
            detail::zp_divide_by_x_minus_1(left);
            right.erase(right.begin());
            zp_trim(right);
        }
        stack.push_back({zp_primitive(std::move(right)), mid, fr.hi});
        stack.push_back({zp_primitive(std::move(left)), fr.lo, mid});
    }
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    // a few sign-bisection steps pick up rational roots sitting at simple
    // dyadic points and tighten the intervals for downstream separation
    for (auto& iv : out) {
        for (int step = 0; step < 4 && !iv.exact; ++step) {
            Rational mid = (iv.lo + iv.hi) / Rational(2);
            int sm = zp_sign_at(sf, mid);
            if (sm == 0) {
                iv = {mid, mid, true};
                break;
            }
            int sl = zp_sign_near(sf, iv.lo, true);
            if (sl != sm) iv.hi = mid;
            else iv.lo = mid;
        }
    }
    return out;
}

// Sturm-based refinement of isolating intervals against a fixed square-free
// polynomial. Interval endpoints are allowed to be roots themselves
// (one-sided variation limits handle them).
class SturmRefiner {
  public:
    explicit SturmRefiner(ZPoly sf) : sf_(std::move(sf)), chain_(sturm_chain(sf_)) {}

    const ZPoly& poly() const { return sf_; }

    int sign_at(const Rational& x) const { return zp_sign_at(sf_, x); }

    // distinct roots in the open interval
    int count_open(const Rational& lo, const Rational& hi) const {
        if (!(lo < hi)) return 0;
        return chain_variations(chain_, lo, true) - chain_variations(chain_, hi, false);
    }

    // One bisection step; keeps the unique root.
    Interval refine(const Interval& iv) const {
        if (iv.exact) return iv;
        Rational mid = (iv.lo + iv.hi) / Rational(2);
        if (sign_at(mid) == 0) return {mid, mid, true};
        if (count_open(iv.lo, mid) == 1) return {iv.lo, mid, false};
        return {mid, iv.hi, false};
    }

  private:
    ZPoly sf_;
    std::vector<ZPoly> chain_;
};

}  // namespace ddecomp
