#include <catch2/catch_amalgamated.hpp>

#include "ddecomp/mpoly.hpp"
#include "ddecomp/parse.hpp"

using namespace ddecomp;

namespace {
const std::vector<std::string> SRP{"s", "r", "p"};
MPoly P(const std::string& text) { return parse_expression(text, SRP); }
}  // namespace

TEST_CASE("ring arithmetic on small polynomials") {
    CHECK(P("(r+p)*(r-p)") == P("r^2 - p^2"));
    MPoly f = P("s^2 + r*s + 1/2");
    CHECK(f + MPoly() == f);
    CHECK(P("(s-1)^2") == P("s^2 - 2*s + 1"));
    CHECK(P("(s-1)^2") - P("s^2") == P("-2*s + 1"));
    CHECK((P("r+p") * GaussianRational(Rational(1, 2))) == P("(1/2)*r + (1/2)*p"));
}

TEST_CASE("evaluation substitutes exactly") {
    MPoly f = P("r^2 + p");
    CHECK(f.evaluate({{"r", GaussianRational(2)}}) == P("p + 4"));
    CHECK(f.evaluate({}) == f);
    MPoly g = P("s^2 + r*s");
    CHECK(g.evaluate({{"r", GaussianRational(1)}, {"s", GaussianRational(-1)}}).is_zero());
    MPoly full = f.evaluate({{"r", GaussianRational(3)}, {"p", GaussianRational(Rational(1, 2))}});
    CHECK(full.is_constant());
    CHECK(full.constant_value() == GaussianRational(Rational(19, 2)));
}

TEST_CASE("formal derivatives") {
    CHECK(P("r^2*p + p").derivative("p") == P("r^2 + 1"));
    CHECK(P("7").derivative("r").is_zero());
    CHECK(P("p^3").derivative("p") == P("3*p^2"));
    CHECK(P("r^2*p").derivative("s").is_zero());
}

TEST_CASE("degrees and coefficient extraction") {
    MPoly f = P("s^3 + (r + i*p)*s + r*p^2");
    CHECK(f.degree_in("s") == 3);
    CHECK(f.total_degree() == 3);
    CHECK(f.coeff_of("s", 1) == P("r + i*p"));
    CHECK(f.coeff_of("s", 2).is_zero());
    CHECK(f.coeff_of("s", 0) == P("r*p^2"));
    auto coeffs = f.coeffs_in("s");
    REQUIRE(coeffs.size() == 4);
    CHECK(MPoly::from_coeffs("s", coeffs) == f);
}

TEST_CASE("variables are trimmed so equality is structural") {
    MPoly a = P("r + p") - P("p");
    CHECK(a == P("r"));
    CHECK(a.vars() == std::vector<std::string>{"r"});
    CHECK(P("s*0 + r") == P("r"));
}

TEST_CASE("real and imaginary parts split termwise") {
    MPoly f = P("(2 + 3*i)*r + i*p^2 + 5");
    CHECK(f.real_part() == P("2*r + 5"));
    CHECK(f.imag_part() == P("3*r + p^2"));
    CHECK(f.real_part() + MPoly(GaussianRational::i()) * f.imag_part() == f);
    CHECK(f.conj_coeffs() == P("(2 - 3*i)*r - i*p^2 + 5"));
}

TEST_CASE("canonical text form") {
    CHECK(P("p + r^2").str() == "r^2 + p");
    CHECK(P("-r - 1").str() == "-r - 1");
    CHECK(P("0").str() == "0");
    CHECK(P("(1+i)*r").str() == "(1+i)*r");
    CHECK(P("r*p - 2*p^2").str() == "-2*p^2 + p*r");
}

TEST_CASE("rename moves a variable") {
    MPoly f = P("s^2 + r");
    MPoly g = f.rename("s", "w");
    CHECK(g.degree_in("w") == 2);
    CHECK(g.degree_in("s") == 0);
    CHECK(g.rename("w", "s") == f);
}
