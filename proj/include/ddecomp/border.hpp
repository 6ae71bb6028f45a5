#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ddecomp/error.hpp"
#include "ddecomp/family.hpp"
#include "ddecomp/mpoly.hpp"
#include "ddecomp/polyops.hpp"

namespace ddecomp {

// Square-free real curve h(r, p) whose zero set contains the stability
// border, with per-component provenance.
struct BorderCurve {
    enum class Source { resultant, leading };
    struct Component {
        Source source;
        MPoly poly;
    };
    MPoly h;
    std::vector<Component> components;
    int degree = 0;
};

// True iff gcd(R, I) does not depend on the frequency variable; a
// frequency-free nonzero R or I makes the pair trivially coprime.
inline bool check_coprime(const SplitPair& sp) {
    bool rz = sp.R.is_zero(), iz = sp.I.is_zero();
    if (rz && iz) throw DegenerateFamilyError("both Re and Im parts vanish identically");
    if (!rz && !sp.R.depends_on(sp.omega)) return true;
    if (!iz && !sp.I.depends_on(sp.omega)) return true;
    if (rz || iz) return false;  // gcd is the other polynomial, which depends on omega
    MPoly g = mp_gcd(sp.R, sp.I, sp.omega);
    return !g.depends_on(sp.omega);
}

namespace detail {

// Full square-free reduction of a real bivariate polynomial: square-free in
// the fiber variable plus a square-free pass over the fiber-free content.
inline MPoly squarefree_curve(const MPoly& g, const std::string& rvar, const std::string& pvar) {
    if (g.is_zero()) throw DomainError("square-free reduction of zero");
    if (g.is_constant()) return MPoly(1);
    if (!g.depends_on(pvar)) {
        if (!g.depends_on(rvar)) return MPoly(1);
        return mp_squarefree_part(g, rvar);
    }
    MPoly cont = mp_content(g, pvar);
    MPoly pp = mp_divexact(g, cont);
    MPoly out = mp_squarefree_part(pp, pvar);
    if (!cont.is_constant()) out = out * squarefree_curve(cont, rvar, pvar);
    return mp_make_canonical(out);
}

}  // namespace detail

// Eliminates the frequency variable from the split pair by resultant,
// reduces to square-free form, and appends the leading-coefficient
// component. Discrete families are converted first.
inline BorderCurve border_curve(const PolyFamily& f) {
    PolyFamily fc = f.time_domain == TimeDomain::discrete ? to_continuous(f) : f;
    SplitPair sp = split_re_im(fc);
    if (!check_coprime(sp))
        throw CommonFactorError(
            "Re P(jw) and Im P(jw) share a common divisor depending on w; the "
            "elimination resultant vanishes identically, so the border curve "
            "construction does not apply to this family");

    const std::string& rvar = fc.params[0];
    const std::string& pvar = fc.params[1];

    MPoly R = sp.R, I = sp.I;
    if (R.depends_on(sp.omega)) R = mp_primitive_part(R, sp.omega);
    if (I.depends_on(sp.omega)) I = mp_primitive_part(I, sp.omega);
    if (!R.depends_on(sp.omega) && !I.depends_on(sp.omega))
        throw DegenerateFamilyError("family does not depend on s after the split");

    BorderCurve out;
    MPoly res = mp_resultant(R, I, sp.omega);
    if (!res.is_constant()) {
        MPoly comp = detail::squarefree_curve(mp_make_canonical(res), rvar, pvar);
        if (!comp.is_constant())
            out.components.push_back({BorderCurve::Source::resultant, comp});
    }
    MPoly lead = leading_component(fc);
    if (!lead.is_constant()) {
        MPoly comp = detail::squarefree_curve(lead, rvar, pvar);
        if (!comp.is_constant())
            out.components.push_back({BorderCurve::Source::leading, comp});
    }

    if (out.components.empty()) {
        out.h = MPoly(1);
        out.degree = 0;
        return out;
    }
    MPoly prod(1);
    for (auto& c : out.components) prod *= c.poly;
    out.h = mp_make_canonical(detail::squarefree_curve(prod, rvar, pvar));
    out.degree = out.h.total_degree();
    return out;
}

}  // namespace ddecomp
