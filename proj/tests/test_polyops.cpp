#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ddecomp/parse.hpp"
#include "ddecomp/polyops.hpp"

using namespace ddecomp;

namespace {

const std::vector<std::string> SRP{"s", "r", "p"};
MPoly P(const std::string& text) { return parse_expression(text, SRP); }

std::mt19937 rng(555777);

MPoly random_poly(int maxdeg, int nterms, bool complex_coeffs = false) {
    std::uniform_int_distribution<int> e(0, maxdeg), c(-6, 6);
    MPoly out;
    for (int k = 0; k < nterms; ++k) {
        GaussianRational coef{Rational(c(rng)), complex_coeffs ? Rational(c(rng)) : Rational(0)};
        out += MPoly(coef) * MPoly::variable("r").pow(e(rng)) * MPoly::variable("p").pow(e(rng));
    }
    return out;
}

bool proportional(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return mp_make_canonical(a) == mp_make_canonical(b);
}

}  // namespace

TEST_CASE("divexact inverts multiplication") {
    for (int k = 0; k < 40; ++k) {
        MPoly f = random_poly(3, 4), g = random_poly(3, 3, true);
        if (g.is_zero()) continue;
        CHECK(mp_divexact(f * g, g) == f);
    }
    CHECK_THROWS_AS(mp_divexact(P("r^2 + 1"), P("r + 1")), DomainError);
}

TEST_CASE("gcd matches the worked examples") {
    MPoly g1 = mp_gcd(P("p^2 - 1"), P("p^2 - 2*p + 1"), "p");
    CHECK(proportional(g1, P("p - 1")));
    CHECK(mp_gcd(P("r^2*p + 3"), P("1"), "p") == MPoly(1));
    MPoly q = P("s^2 + 1"), w = P("s - 3");
    MPoly g2 = mp_gcd(P("r + p") * q, P("r + p") * w, "s");
    CHECK(proportional(g2, P("r + p")));
    MPoly g3 = mp_gcd(P("r + p") * q, P("r + p") * w, "p");
    CHECK(proportional(g3, P("r + p")));
}

TEST_CASE("gcd divides both inputs") {
    for (int k = 0; k < 25; ++k) {
        MPoly a = random_poly(2, 3), b = random_poly(2, 3), m = random_poly(2, 2);
        if (a.is_zero() || b.is_zero() || m.is_zero()) continue;
        MPoly g = mp_gcd(a * m, b * m, "p");
        if (g.is_zero()) continue;
        CHECK_NOTHROW(mp_divexact(a * m, g));
        CHECK_NOTHROW(mp_divexact(b * m, g));
        if (m.depends_on("p") || m.depends_on("r")) CHECK(g.total_degree() >= 1);
    }
}

TEST_CASE("squarefree part strips multiplicities") {
    MPoly f = P("(p - 1)^2 * (p + 2)");
    CHECK(proportional(mp_squarefree_part(f, "p"), P("(p - 1)*(p + 2)")));
    MPoly g = P("(r^2 + p^2 - 1)^2");
    CHECK(proportional(mp_squarefree_part(g, "p"), P("r^2 + p^2 - 1")));
    MPoly s = mp_squarefree_part(P("(p - 3)*(p + 5)"), "p");
    CHECK(proportional(s, P("(p - 3)*(p + 5)")));
    // output satisfies gcd(s, ds/dp) constant
    CHECK(mp_gcd(s, s.derivative("p"), "p").is_constant());
}

TEST_CASE("resultants match the hand computations") {
    MPoly r1 = mp_resultant(P("s^2 - 1"), P("s - 2"), "s");
    CHECK(r1 == MPoly(3));
    CHECK(mp_resultant(P("s - 1"), P("s^2 - 1"), "s").is_zero());
    MPoly r3 = mp_resultant(P("p^2 + r^2 - 1"), P("2*p"), "p");
    CHECK(r3 == P("4*r^2 - 4"));
    CHECK_THROWS_AS(mp_resultant(P("r + 1"), P("r - 1"), "s"), DomainError);
    // one input free of the variable: power convention
    CHECK(mp_resultant(P("r"), P("s^2 + p"), "s") == P("r^2"));
}

TEST_CASE("resultant vanishes exactly when a common factor depends on the variable") {
    for (int k = 0; k < 25; ++k) {
        MPoly a = random_poly(2, 3), b = random_poly(2, 3);
        MPoly m = P("r + p^2");
        if (a.is_zero() || b.is_zero()) continue;
        if (!a.depends_on("p") && !b.depends_on("p")) continue;
        MPoly res = mp_resultant(a * m, b * m, "p");
        CHECK(res.is_zero());
        MPoly g = mp_gcd(a * m, b * m, "p");
        CHECK(g.depends_on("p"));
    }
}

TEST_CASE("resultant is multiplicative in each argument") {
    for (int k = 0; k < 15; ++k) {
        MPoly f = random_poly(2, 3), g1 = random_poly(2, 2), g2 = random_poly(2, 2);
        if (f.is_zero() || g1.is_zero() || g2.is_zero()) continue;
        if (!f.depends_on("p")) continue;
        MPoly lhs = mp_resultant(f, g1 * g2, "p");
        MPoly rhs = mp_resultant(f, g1, "p") * mp_resultant(f, g2, "p");
        CHECK(lhs == rhs);
    }
}

TEST_CASE("large bivariate resultants take the interpolation path and stay exact") {
    // f = prod (x - i y), g = prod (x - (y + j)); resultant = prod (i y - y - j)
    MPoly x = MPoly::variable("r"), y = MPoly::variable("p");
    MPoly f(1), g(1);
    for (int i = 1; i <= 8; ++i) f *= x - MPoly(GaussianRational(Rational(i))) * y;
    for (int j = 1; j <= 8; ++j) g *= x - (y + MPoly(j));
    MPoly expected(1);
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            expected *= MPoly(GaussianRational(Rational(i - 1))) * y - MPoly(j);
    MPoly res = mp_resultant(f, g, "r");
    CHECK(res == expected);
}

TEST_CASE("content and primitive part") {
    MPoly f = P("r^2*p^2 + r^2*p");  // content r^2 * ... wrt p: r^2 * p(p+1) -> content r^2
    MPoly c = mp_content(f, "p");
    CHECK(proportional(c, P("r^2")));
    CHECK(mp_primitive_part(f, "p") * c == mp_make_canonical(f) * MPoly(1));
    CHECK(mp_rational_content(P("4*r + 6*p")) == Rational(2));
    CHECK(mp_rational_content(P("(1/2)*r + (1/3)*p")) == Rational(1, 6));
    CHECK(mp_make_canonical(P("-2*r - 4")) == P("r + 2"));
}
