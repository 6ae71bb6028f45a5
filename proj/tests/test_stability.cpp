#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ddecomp/parse.hpp"
#include "ddecomp/stability.hpp"
#include "oracles.hpp"

using namespace ddecomp;

namespace {

std::mt19937 rng(31415926);

GPoly gp(std::initializer_list<std::pair<long, long>> coeffs) {
    GPoly out;
    for (auto& [re, im] : coeffs) out.push_back({Rational(re), Rational(im)});
    gp_trim(out);
    return out;
}

GPoly random_gpoly(int degree, bool complex_coeffs) {
    std::uniform_int_distribution<long> c(-6, 6), d(1, 3);
    GPoly out;
    for (int k = 0; k < degree; ++k)
        out.push_back({Rational(c(rng), d(rng)),
                       complex_coeffs ? Rational(c(rng), d(rng)) : Rational(0)});
    Rational lead(0);
    while (lead.is_zero()) lead = Rational(c(rng), d(rng));
    out.push_back({lead, complex_coeffs ? Rational(c(rng)) : Rational(0)});
    return out;
}

}  // namespace

TEST_CASE("lhp counts on the pinned examples") {
    RootCount a = lhp_count(gp({{1, 0}, {1, 0}}));  // s + 1
    CHECK(a.stable == 1);
    CHECK(a.unstable == 0);
    CHECK_FALSE(a.marginal);

    RootCount b = lhp_count(gp({{-6, 0}, {-1, 0}, {1, 0}}));  // (s+2)(s-3)
    CHECK(b.stable == 1);
    CHECK(b.unstable == 1);

    RootCount c = lhp_count(gp({{1, 0}, {0, 0}, {1, 0}}));  // s^2 + 1
    CHECK(c.marginal);

    RootCount d = lhp_count(gp({{1, 1}, {1, 0}}));  // s + (1 + i)
    CHECK(d.stable == 1);
    CHECK(d.unstable == 0);

    CHECK_THROWS_AS(lhp_count(GPoly{}), DomainError);
}

TEST_CASE("lhp count respects scaling and degenerate sizes") {
    GPoly q = gp({{3, 0}, {-2, 0}, {5, 0}, {1, 0}});
    RootCount base = lhp_count(q);
    for (long c : {2L, -3L, 7L}) {
        GPoly scaled = q;
        for (auto& g : scaled) g *= GaussianRational(Rational(c));
        RootCount rc = lhp_count(scaled);
        CHECK(rc.stable == base.stable);
        CHECK(rc.unstable == base.unstable);
    }
    RootCount konst = lhp_count(gp({{5, 0}}));
    CHECK(konst.degree == 0);
    CHECK(konst.stable == 0);
}

TEST_CASE("product rule for half-plane counts") {
    for (int trial = 0; trial < 50; ++trial) {
        GPoly a = random_gpoly(2 + trial % 2, trial % 2 == 0);
        GPoly b = random_gpoly(1 + trial % 3, trial % 3 == 0);
        RootCount ra = lhp_count(a), rb = lhp_count(b);
        if (ra.marginal || rb.marginal) continue;
        RootCount rp = lhp_count(gp_mul(a, b));
        if (rp.marginal) continue;  // numeric coincidence on the axis
        CHECK(rp.stable == ra.stable + rb.stable);
        CHECK(rp.unstable == ra.unstable + rb.unstable);
    }
}

TEST_CASE("conjugating the coefficients preserves the counts") {
    for (int trial = 0; trial < 40; ++trial) {
        GPoly q = random_gpoly(1 + trial % 5, true);
        RootCount a = lhp_count(q);
        GPoly qc = q;
        for (auto& c : qc) c = c.conj();
        RootCount b = lhp_count(qc);
        CHECK(a.marginal == b.marginal);
        if (!a.marginal) {
            CHECK(a.stable == b.stable);
            CHECK(a.unstable == b.unstable);
        }
    }
}

TEST_CASE("exact counts agree with the companion-matrix oracle") {
    int accepted = 0, trials = 0;
    while (accepted < 220 && trials < 4000) {
        ++trials;
        GPoly q = random_gpoly(1 + trials % 6, trials % 2 == 0);
        auto roots = oracles::companion_roots(q);
        if (roots.empty()) continue;
        bool well_separated = true;
        int num_stable = 0;
        for (auto& z : roots) {
            if (std::abs(z.real()) <= 1e-6) well_separated = false;
            if (z.real() < 0) ++num_stable;
        }
        if (!well_separated) continue;
        RootCount rc = lhp_count(q);
        REQUIRE_FALSE(rc.marginal);
        CHECK(rc.stable == num_stable);
        CHECK(rc.unstable == static_cast<int>(roots.size()) - num_stable);
        ++accepted;
    }
    CHECK(accepted >= 220);
}

TEST_CASE("schur counts on the pinned examples") {
    RootCount a = schur_count(gp({{-1, 0}, {2, 0}}));  // 2z - 1, root 1/2
    CHECK(a.stable == 1);
    CHECK(a.unstable == 0);
    RootCount b = schur_count(gp({{-2, 0}, {1, 0}}));  // z - 2
    CHECK(b.stable == 0);
    CHECK(b.unstable == 1);
    RootCount c = schur_count(gp({{-1, 0}, {1, 0}}));  // z - 1
    CHECK(c.marginal);
    CHECK_THROWS_AS(schur_count(GPoly{}), DomainError);
}

TEST_CASE("schur counts agree with the oracle on the unit disk") {
    int accepted = 0, trials = 0;
    while (accepted < 120 && trials < 4000) {
        ++trials;
        GPoly q = random_gpoly(1 + trials % 5, trials % 2 == 0);
        auto roots = oracles::companion_roots(q);
        if (roots.empty()) continue;
        bool separated = true;
        int inside = 0;
        for (auto& z : roots) {
            if (std::abs(std::abs(z) - 1.0) <= 1e-6) separated = false;
            if (std::abs(z) < 1) ++inside;
        }
        if (!separated) continue;
        RootCount rc = schur_count(q);
        if (rc.marginal) continue;  // exact arithmetic found a circle root the filter missed
        CHECK(rc.stable == inside);
        CHECK(rc.unstable == static_cast<int>(roots.size()) - inside);
        ++accepted;
    }
    CHECK(accepted >= 120);
}

TEST_CASE("classify_point specializes and dispatches") {
    PolyFamily f;
    f.poly = parse_expression("s - r", {"s", "r", "p"});
    f.time_domain = TimeDomain::continuous;
    RootCount a = classify_point(f, SamplePoint{Rational(-1), Rational(0)});
    CHECK(a.stable == 1);

    PolyFamily g;
    g.poly = parse_expression("s^2 + r*s + p", {"s", "r", "p"});
    g.time_domain = TimeDomain::continuous;
    RootCount b = classify_point(g, SamplePoint{Rational(2), Rational(1)});
    CHECK(b.stable == 2);
    CHECK(b.unstable == 0);

    // a marginal point is a border-contact violation
    CHECK_THROWS_AS(classify_point(g, SamplePoint{Rational(0), Rational(1)}),
                    BorderContactError);

    PolyFamily dz;
    dz.poly = parse_expression("s - 1/2", {"s", "r", "p"});
    dz.time_domain = TimeDomain::discrete;
    RootCount c = classify_point(dz, SamplePoint{Rational(0), Rational(0)});
    CHECK(c.stable == 1);
}
