#include <catch2/catch_amalgamated.hpp>

#include "ddecomp/border.hpp"
#include "ddecomp/parse.hpp"
#include "goldens.hpp"

using namespace ddecomp;

namespace {

const std::vector<std::string> SRP{"s", "r", "p"};
MPoly P(const std::string& text) { return parse_expression(text, SRP); }

PolyFamily family(const std::string& text, TimeDomain td) {
    PolyFamily f;
    f.poly = P(text);
    f.time_domain = td;
    return f;
}

SplitPair make_pair(const std::string& R, const std::string& I) {
    SplitPair sp;
    sp.R = parse_expression(R, {"w", "r", "p"});
    sp.I = parse_expression(I, {"w", "r", "p"});
    sp.omega = "w";
    sp.params = {"r", "p"};
    return sp;
}

}  // namespace

TEST_CASE("coprimality check") {
    CHECK_FALSE(check_coprime(make_pair("w", "w*r")));
    CHECK(check_coprime(make_pair("w^2 + r", "p")));
    CHECK(check_coprime(make_pair("w^2 + r", "w*p + 1")));
    CHECK_FALSE(check_coprime(make_pair("0", "w*r")));
    CHECK_THROWS_AS(check_coprime(make_pair("0", "0")), DegenerateFamilyError);
    // the degree-6 example proceeds to a nonzero resultant
    SplitPair ex1 = split_re_im(to_continuous(family(goldens::kFamily1, TimeDomain::discrete)));
    CHECK(check_coprime(ex1));
}

TEST_CASE("border of s + r is the line r = 0") {
    BorderCurve bc = border_curve(family("s + r", TimeDomain::continuous));
    CHECK(bc.h == P("r"));
    CHECK(bc.degree == 1);
    REQUIRE(bc.components.size() == 1);
    CHECK(bc.components[0].source == BorderCurve::Source::resultant);
}

TEST_CASE("border with no components collapses to 1") {
    BorderCurve bc = border_curve(family("s + 1", TimeDomain::continuous));
    CHECK(bc.h == MPoly(1));
    CHECK(bc.degree == 0);
    CHECK(bc.components.empty());
}

TEST_CASE("border of s^2 + r s + p") {
    // R = p - w^2, I = r w; resultant in w: vanishing locus p (from w=0 root of I) and ...
    BorderCurve bc = border_curve(family("s^2 + r*s + p", TimeDomain::continuous));
    // crossing the imaginary axis: roots +-jw with w^2 = p and r w = 0
    // components: p r^2 (axis crossings) reduced square-free
    CHECK(bc.h.depends_on("p"));
    CHECK(bc.h.depends_on("r"));
    CHECK(bc.degree >= 2);
    // no leading component: monic family
    for (auto& c : bc.components) CHECK(c.source == BorderCurve::Source::resultant);
}

TEST_CASE("coprimality violation raises the common-factor error") {
    // P(s) = (s^2 + 1)(s + r): R and I share the factor (1 - w^2)
    CHECK_THROWS_AS(border_curve(family("(s^2 + 1)*(s + r)", TimeDomain::continuous)),
                    CommonFactorError);
}

TEST_CASE("the complex quadratic family reproduces its printed quartic border") {
    BorderCurve bc = border_curve(family(goldens::kFamily5, TimeDomain::continuous));
    MPoly quartic = mp_make_canonical(parse_expression(goldens::kBorder4, {"r", "p"}));
    CHECK(bc.degree == 4);
    REQUIRE(bc.components.size() == 1);
    CHECK(bc.h == quartic);
}

TEST_CASE("border degree respects the 2td + 2d cap") {
    for (auto text : {"s + r", "s^2 + r*s + p", "s^2 + (r + i*p)*s + 1/2",
                      "s^3 + r*p*s + p^2 - 1"}) {
        PolyFamily f = family(text, TimeDomain::continuous);
        BorderCurve bc = border_curve(f);
        CHECK(bc.degree <= 2 * f.t() * f.d() + 2 * f.d());
    }
}

TEST_CASE("h is square-free in both variables") {
    BorderCurve bc = border_curve(family(goldens::kFamily5, TimeDomain::continuous));
    MPoly hp = bc.h.derivative("p");
    CHECK(mp_gcd(bc.h, hp, "p").is_constant());
    MPoly hr = bc.h.derivative("r");
    CHECK(mp_gcd(bc.h, hr, "r").is_constant());
}

TEST_CASE("border curve is canonically normalized") {
    BorderCurve bc = border_curve(family("s^2 + r*s + p", TimeDomain::continuous));
    CHECK(bc.h == mp_make_canonical(bc.h));
    CHECK(bc.h.leading_coefficient().re().sign() > 0);
}
