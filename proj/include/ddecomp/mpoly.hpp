#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ddecomp/error.hpp"
#include "ddecomp/rational.hpp"

namespace ddecomp {

using Mono = std::vector<std::uint32_t>;

// Graded lexicographic order on exponent vectors of equal length.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        std::uint64_t ta = 0, tb = 0;
        for (auto e : a) ta += e;
        for (auto e : b) tb += e;
        if (ta != tb) return ta < tb;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial over Q(i). Variables are kept sorted by
// name and trimmed to those actually appearing, so equality is structural.
class MPoly {
  public:
    using TermMap = std::map<Mono, GaussianRational, GrlexLess>;

    MPoly() = default;
    MPoly(const GaussianRational& c) {
        if (!c.is_zero()) terms_[Mono{}] = c;
    }
    MPoly(const Rational& c) : MPoly(GaussianRational(c)) {}
    MPoly(int c) : MPoly(GaussianRational(Rational(c))) {}

    static MPoly variable(const std::string& name) {
        MPoly f;
        f.vars_ = {name};
        f.terms_[Mono{1}] = GaussianRational(1);
        return f;
    }

    static MPoly term(const GaussianRational& c, const std::vector<std::string>& vars,
                      const Mono& exps) {
        MPoly f;
        if (c.is_zero()) return f;
        f.vars_ = vars;
        f.terms_[exps] = c;
        f.canon();
        return f;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    GaussianRational constant_value() const {
        if (is_zero()) return GaussianRational(0);
        if (!is_constant()) throw DomainError("polynomial is not constant");
        return terms_.begin()->second;
    }

    bool depends_on(const std::string& v) const {
        return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
    }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const {
        if (terms_.empty()) return -1;
        const Mono& m = terms_.rbegin()->first;
        std::uint64_t t = 0;
        for (auto e : m) t += e;
        return static_cast<int>(t);
    }

    int degree_in(const std::string& v) const {
        int idx = var_index(v);
        if (idx < 0) return terms_.empty() ? -1 : 0;
        std::uint32_t d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m[idx]);
        return terms_.empty() ? -1 : static_cast<int>(d);
    }

    // Coefficient of the grlex-leading term.
    GaussianRational leading_coefficient() const {
        if (terms_.empty()) return GaussianRational(0);
        return terms_.rbegin()->second;
    }
    const Mono& leading_monomial() const {
        if (terms_.empty()) throw DomainError("zero polynomial has no leading monomial");
        return terms_.rbegin()->first;
    }

    MPoly operator-() const {
        MPoly f = *this;
        for (auto& [m, c] : f.terms_) c = -c;
        return f;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        auto [fa, fb, vars] = aligned(a, b);
        MPoly out;
        out.vars_ = vars;
        out.terms_ = std::move(fa);
        for (auto& [m, c] : fb) {
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) out.terms_.emplace(m, c);
            else {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
        out.canon();
        return out;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        if (a.is_zero() || b.is_zero()) return MPoly();
        auto [fa, fb, vars] = aligned(a, b);
        MPoly out;
        out.vars_ = vars;
        std::size_t nv = vars.size();
        for (auto& [ma, ca] : fa) {
            for (auto& [mb, cb] : fb) {
                Mono m(nv);
                for (std::size_t i = 0; i < nv; ++i) m[i] = ma[i] + mb[i];
                GaussianRational prod = ca * cb;
                auto it = out.terms_.find(m);
                if (it == out.terms_.end()) out.terms_.emplace(std::move(m), std::move(prod));
                else {
                    it->second += prod;
                    if (it->second.is_zero()) out.terms_.erase(it);
                }
            }
        }
        out.canon();
        return out;
    }

    friend MPoly operator*(const MPoly& a, const GaussianRational& c) {
        if (c.is_zero()) return MPoly();
        MPoly f = a;
        for (auto& [m, v] : f.terms_) v *= c;
        return f;
    }
    friend MPoly operator*(const GaussianRational& c, const MPoly& a) { return a * c; }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly pow(unsigned e) const {
        MPoly acc(1), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Substitutes exact values for a subset of the variables.
    MPoly evaluate(const std::map<std::string, GaussianRational>& assignment) const {
        if (assignment.empty()) return *this;
        std::vector<int> which(vars_.size(), -1);
        std::vector<GaussianRational> vals;
        std::vector<std::string> kept;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = assignment.find(vars_[i]);
            if (it != assignment.end()) {
                which[i] = static_cast<int>(vals.size());
                vals.push_back(it->second);
            } else {
                kept.push_back(vars_[i]);
            }
        }
        MPoly out;
        out.vars_ = kept;
        for (auto& [m, c] : terms_) {
            GaussianRational coef = c;
            Mono km;
            km.reserve(kept.size());
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (which[i] >= 0) {
                    if (m[i]) coef *= vals[which[i]].pow(m[i]);
                } else {
                    km.push_back(m[i]);
                }
            }
            if (coef.is_zero()) continue;
            auto it = out.terms_.find(km);
            if (it == out.terms_.end()) out.terms_.emplace(std::move(km), std::move(coef));
            else {
                it->second += coef;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
        out.canon();
        return out;
    }

    MPoly derivative(const std::string& v) const {
        int idx = var_index(v);
        if (idx < 0) return MPoly();
        MPoly out;
        out.vars_ = vars_;
        for (auto& [m, c] : terms_) {
            if (m[idx] == 0) continue;
            Mono dm = m;
            dm[idx] -= 1;
            out.terms_[dm] = c * GaussianRational(Rational(static_cast<long>(m[idx])));
        }
        out.canon();
        return out;
    }

    // Coefficient of v^k, as a polynomial in the remaining variables.
    MPoly coeff_of(const std::string& v, std::uint32_t k) const {
        int idx = var_index(v);
        if (idx < 0) return k == 0 ? *this : MPoly();
        MPoly out;
        std::vector<std::string> rest;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (static_cast<int>(i) != idx) rest.push_back(vars_[i]);
        out.vars_ = rest;
        for (auto& [m, c] : terms_) {
            if (m[idx] != k) continue;
            Mono rm;
            rm.reserve(rest.size());
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (static_cast<int>(i) != idx) rm.push_back(m[i]);
            out.terms_.emplace(std::move(rm), c);
        }
        out.canon();
        return out;
    }

    // Dense list of coefficients of powers of v (index = exponent).
    std::vector<MPoly> coeffs_in(const std::string& v) const {
        int d = degree_in(v);
        std::vector<MPoly> out(static_cast<std::size_t>(std::max(d, 0)) + 1);
        for (std::uint32_t k = 0; k <= static_cast<std::uint32_t>(std::max(d, 0)); ++k)
            out[k] = coeff_of(v, k);
        if (is_zero()) out.assign(1, MPoly());
        return out;
    }

    static MPoly from_coeffs(const std::string& v, const std::vector<MPoly>& coeffs) {
        MPoly out, x = variable(v), xp(1);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (!coeffs[k].is_zero()) out += coeffs[k] * xp;
            if (k + 1 < coeffs.size()) xp *= x;
        }
        return out;
    }

    bool is_real() const {
        for (auto& [m, c] : terms_)
            if (!c.im().is_zero()) return false;
        return true;
    }
    MPoly real_part() const {
        MPoly out;
        out.vars_ = vars_;
        for (auto& [m, c] : terms_)
            if (!c.re().is_zero()) out.terms_[m] = GaussianRational(c.re());
        out.canon();
        return out;
    }
    MPoly imag_part() const {
        MPoly out;
        out.vars_ = vars_;
        for (auto& [m, c] : terms_)
            if (!c.im().is_zero()) out.terms_[m] = GaussianRational(c.im());
        out.canon();
        return out;
    }
    MPoly conj_coeffs() const {
        MPoly out = *this;
        for (auto& [m, c] : out.terms_) c = c.conj();
        return out;
    }

    // Renames a variable (target name must not already occur).
    MPoly rename(const std::string& from, const std::string& to) const {
        int idx = var_index(from);
        if (idx < 0) return *this;
        if (depends_on(to)) throw DomainError("rename target already present");
        std::vector<std::string> nv = vars_;
        nv[idx] = to;
        std::vector<std::size_t> perm(nv.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return nv[a] < nv[b]; });
        MPoly out;
        out.vars_.resize(nv.size());
        for (std::size_t i = 0; i < perm.size(); ++i) out.vars_[i] = nv[perm[i]];
        for (auto& [m, c] : terms_) {
            Mono nm(m.size());
            for (std::size_t i = 0; i < perm.size(); ++i) nm[i] = m[perm[i]];
            out.terms_.emplace(std::move(nm), c);
        }
        return out;
    }

    // Canonical text form: grlex-descending terms, explicit '*' and '^'.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string mon;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (m[i] == 0) continue;
                if (!mon.empty()) mon += "*";
                mon += vars_[i];
                if (m[i] > 1) mon += "^" + std::to_string(m[i]);
            }
            std::string cs;
            bool coef_one = c == GaussianRational(1), coef_mone = c == GaussianRational(-1);
            bool complex_sum = !c.im().is_zero() && !c.re().is_zero();
            if (mon.empty()) cs = complex_sum ? "(" + c.str() + ")" : c.str();
            else if (coef_one) cs = "";
            else if (coef_mone) cs = "-";
            else if (complex_sum || (c.re().is_zero() && !(c.im() == Rational(1)) && !(c.im() == Rational(-1))))
                cs = "(" + c.str() + ")*";
            else cs = c.str() + "*";
            std::string term = cs + mon;
            if (out.empty()) out = term;
            else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out;
    }

  private:
    int var_index(const std::string& v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it != vars_.end() && *it == v) return static_cast<int>(it - vars_.begin());
        return -1;
    }

    // Drops zero coefficients and unused variables.
    void canon() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero()) it = terms_.erase(it);
            else ++it;
        }
        if (vars_.empty()) return;
        std::vector<bool> used(vars_.size(), false);
        for (auto& [m, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) used[i] = true;
        bool all = true;
        for (bool u : used) all = all && u;
        if (all && !terms_.empty()) return;
        std::vector<std::string> nv;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        TermMap nt;
        for (auto& [m, c] : terms_) {
            Mono nm;
            nm.reserve(nv.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                if (used[i]) nm.push_back(m[i]);
            nt.emplace(std::move(nm), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    // Remaps both polynomials onto the union of their variable lists.
    static std::tuple<TermMap, TermMap, std::vector<std::string>> aligned(const MPoly& a,
                                                                          const MPoly& b) {
        if (a.vars_ == b.vars_) return {a.terms_, b.terms_, a.vars_};
        std::vector<std::string> vars;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(vars));
        return {remap(a, vars), remap(b, vars), vars};
    }

    static TermMap remap(const MPoly& f, const std::vector<std::string>& vars) {
        std::vector<int> pos(f.vars_.size());
        for (std::size_t i = 0; i < f.vars_.size(); ++i) {
            auto it = std::lower_bound(vars.begin(), vars.end(), f.vars_[i]);
            pos[i] = static_cast<int>(it - vars.begin());
        }
        TermMap out;
        for (auto& [m, c] : f.terms_) {
            Mono nm(vars.size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i) nm[pos[i]] = m[i];
            out.emplace(std::move(nm), c);
        }
        return out;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace ddecomp
