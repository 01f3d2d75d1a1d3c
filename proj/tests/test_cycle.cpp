#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"

using namespace saddleform;
using sftest::Rng;

namespace {

const std::complex<double> I2PI(0.0, 2.0 * 3.14159265358979323846);

std::complex<double> symbolic_value(const OneForm& f, const CyclePath& p) {
    return I2PI * cycle_integral_symbolic(f).eval(p.c, p.z, p.t);
}

} // namespace

// The coefficient-extraction rule is the foundation everything downstream
// stands on (obstruction reporting, the solvability recurrence, the division
// read-off). It is pinned here against an independent quadrature before any
// of that machinery is trusted.
TEST_CASE("quadrature oracle pins the coefficient formula") {
    Rng rng(101);
    for (int n : {2, 3, 4}) {
        VarContext ctx = VarContext::saddle(n, 4, 2);
        for (int it = 0; it < 60; ++it) {
            OneForm f = sftest::rand_oneform(rng, ctx, 3, 2, 4);
            CyclePath p;
            p.c = sftest::rand_point(rng, -1.0, 1.0);
            if (std::abs(p.c) < 0.05) p.c += 0.5;
            p.x0 = sftest::rand_point(rng, 0.4, 1.4);
            p.t = sftest::rand_point(rng, -0.8, 0.8);
            for (int i = 0; i < n - 2; ++i) p.z.push_back(sftest::rand_point(rng, -0.7, 0.7));
            std::complex<double> quad = cycle_integral_numeric(f, p, 64);
            std::complex<double> sym = symbolic_value(f, p);
            double scale = std::max(1.0, std::abs(sym));
            CHECK(std::abs(quad - sym) < 1e-9 * scale);
        }
    }
}

TEST_CASE("hand-checked integrals") {
    VarContext ctx = VarContext::saddle(2, 6, 2);
    TruncatedSeries x = TruncatedSeries::variable(ctx, "x");
    TruncatedSeries y = TruncatedSeries::variable(ctx, "y");

    // y*dx integrates to c.
    OneForm ydx(ctx);
    ydx.set_component(0, y);
    CyclePolynomial p = cycle_integral_symbolic(ydx);
    CHECK(p.powers().size() == 1);
    CHECK(p.powers().begin()->first == 1);
    CHECK(p.powers().begin()->second == TruncatedSeries::constant(ctx, Gaussian(1)));

    // x*dy integrates to -c: the two together are the exact form d(xy).
    OneForm xdy(ctx);
    xdy.set_component(1, x);
    CyclePolynomial q = cycle_integral_symbolic(xdy);
    CHECK(q.powers().size() == 1);
    CHECK(q.powers().begin()->second == TruncatedSeries::constant(ctx, Gaussian(-1)));
    CHECK(cycle_integral_symbolic(saddle_differential(ctx)).is_zero());

    CyclePath path;
    path.c = {0.3, 0.2};
    CHECK(sftest::close(cycle_integral_numeric(ydx, path, 128), I2PI * path.c, 1e-12));
    CHECK(sftest::close(cycle_integral_numeric(xdy, path, 128), -I2PI * path.c, 1e-12));
}

TEST_CASE("resonant model deformation has the expected nonvanishing integral") {
    // (1 + t*xy)*d(xy) - t*x*y^2*dx + t*z1*dz1, truncated well above its degree.
    VarContext ctx = VarContext::saddle(3, 6, 2);
    TruncatedSeries x = TruncatedSeries::variable(ctx, "x");
    TruncatedSeries y = TruncatedSeries::variable(ctx, "y");
    TruncatedSeries z1 = TruncatedSeries::variable(ctx, "z1");
    TruncatedSeries t = TruncatedSeries::variable(ctx, "t");
    TruncatedSeries one = TruncatedSeries::constant(ctx, Gaussian(1));

    OneForm w = (one + t * x * y) * saddle_differential(ctx);
    OneForm corr(ctx);
    corr.set_component(0, -(t * x * y * y));
    corr.set_component(2, t * z1);
    w += corr;

    CyclePolynomial p = cycle_integral_symbolic(w);
    CHECK(p.str() == "(-t)*c^2");

    std::vector<Obstruction> obs = p.obstructions();
    REQUIRE(obs.size() == 1);
    CHECK(obs[0].m == 2);
    CHECK(obs[0].j == 1);
    CHECK(obs[0].z_mono.spatial_degree() == 0);
    CHECK(obs[0].value == Gaussian(-1));

    CyclePath path;
    path.c = {0.2, 0.0};
    path.t = {0.5, 0.0};
    path.z = {{0.3, 0.0}};
    std::complex<double> quad = cycle_integral_numeric(w, path, 256);
    std::complex<double> expect = I2PI * std::complex<double>(-0.5 * 0.04, 0.0);
    CHECK(std::abs(quad - expect) < 1e-10);
}

TEST_CASE("the base radius does not matter") {
    Rng rng(102);
    VarContext ctx = VarContext::saddle(2, 4, 2);
    for (int it = 0; it < 20; ++it) {
        OneForm f = sftest::rand_oneform(rng, ctx, 3, 2, 4);
        CyclePath a, b;
        a.c = b.c = {0.4, -0.3};
        a.t = b.t = {0.25, 0.0};
        a.x0 = {1.0, 0.0};
        b.x0 = sftest::rand_point(rng, 0.3, 1.6);
        std::complex<double> va = cycle_integral_numeric(f, a, 128);
        std::complex<double> vb = cycle_integral_numeric(f, b, 128);
        CHECK(sftest::close(va, vb, 1e-9 * std::max(1.0, std::abs(va))));
    }
}

TEST_CASE("integration is linear in the form") {
    Rng rng(103);
    VarContext ctx = VarContext::saddle(3, 4, 2);
    for (int it = 0; it < 40; ++it) {
        OneForm f = sftest::rand_oneform(rng, ctx, 3, 2, 3);
        OneForm g = sftest::rand_oneform(rng, ctx, 3, 2, 3);
        Gaussian s = sftest::rand_gaussian(rng);
        CyclePolynomial pf = cycle_integral_symbolic(f);
        CyclePolynomial pg = cycle_integral_symbolic(g);
        CyclePolynomial sum = cycle_integral_symbolic(f + g);
        CyclePolynomial scaled = cycle_integral_symbolic(TruncatedSeries::constant(ctx, s) * f);
        CyclePath p;
        p.c = {0.5, 0.1};
        p.t = {0.3, 0.0};
        p.z = {{0.2, -0.4}};
        std::complex<double> vf = pf.eval(p.c, p.z, p.t);
        std::complex<double> vg = pg.eval(p.c, p.z, p.t);
        CHECK(sftest::close(sum.eval(p.c, p.z, p.t), vf + vg, 1e-12));
        CHECK(sftest::close(scaled.eval(p.c, p.z, p.t), s.to_complex() * vf, 1e-12));
    }
}

TEST_CASE("exact forms and multiples of the fibration differential integrate to zero") {
    Rng rng(104);
    for (int n : {2, 3}) {
        VarContext ctx = VarContext::saddle(n, 6, 3);
        for (int it = 0; it < 100; ++it) {
            TruncatedSeries h = sftest::rand_series(rng, ctx, 5, 3, 6);
            CHECK(cycle_integral_symbolic(ext_d(h)).is_zero());

            TruncatedSeries a = sftest::rand_series(rng, ctx, 4, 3, 6);
            CHECK(cycle_integral_symbolic(a * saddle_differential(ctx)).is_zero());

            CHECK(vanishing_obstructions(ext_d(h)).empty());
        }
    }
}

TEST_CASE("obstruction report ordering") {
    VarContext ctx = VarContext::saddle(3, 6, 3);
    CyclePolynomial p(ctx);
    TruncatedSeries z1 = TruncatedSeries::variable(ctx, "z1");
    TruncatedSeries t = TruncatedSeries::variable(ctx, "t");
    p.accumulate(3, t);                                     // j=1, m=3
    p.accumulate(1, t * t * z1);                            // j=2, m=1
    p.accumulate(2, t + z1.scaled(Gaussian(2)));            // j=0 and j=1 at m=2
    std::vector<Obstruction> obs = p.obstructions();
    REQUIRE(obs.size() == 4);
    CHECK((obs[0].j == 0 && obs[0].m == 2));   // z1 coefficient, no parameter
    CHECK((obs[1].j == 1 && obs[1].m == 2));
    CHECK((obs[2].j == 1 && obs[2].m == 3));
    CHECK((obs[3].j == 2 && obs[3].m == 1));
    CHECK(obs[0].value == Gaussian(2));
    CHECK(obs[0].str(ctx) == "c^2*z1: 2");
    CHECK(obs[3].str(ctx) == "c^1*z1*t^2: 1");
}

TEST_CASE("path validation") {
    VarContext ctx = VarContext::saddle(3, 4, 1);
    OneForm f(ctx);
    f.set_component(0, TruncatedSeries::variable(ctx, "y"));
    CyclePath good;
    good.c = {0.5, 0.0};
    good.z = {{0.0, 0.0}};
    CHECK_NOTHROW(cycle_integral_numeric(f, good, 16));

    CyclePath bad = good;
    bad.c = {0.0, 0.0};
    CHECK_THROWS_AS(cycle_integral_numeric(f, bad, 16), InvalidPath);
    bad = good;
    bad.x0 = {0.0, 0.0};
    CHECK_THROWS_AS(cycle_integral_numeric(f, bad, 16), InvalidPath);
    bad = good;
    bad.z.clear();
    CHECK_THROWS_AS(cycle_integral_numeric(f, bad, 16), InvalidPath);
    CHECK_THROWS_AS(cycle_integral_numeric(f, good, 0), InvalidPath);
}

TEST_CASE("orientation reversal flips the sign") {
    VarContext ctx = VarContext::saddle(2, 4, 1);
    OneForm f(ctx);
    f.set_component(0, TruncatedSeries::variable(ctx, "y"));
    CyclePath fwd;
    fwd.c = {0.7, 0.1};
    CyclePath rev = fwd;
    rev.reversed = true;
    std::complex<double> a = cycle_integral_numeric(f, fwd, 64);
    std::complex<double> b = cycle_integral_numeric(f, rev, 64);
    CHECK(sftest::close(a, -b, 1e-12));
}

TEST_CASE("transverse coefficients ride along") {
    VarContext ctx = VarContext::saddle(3, 6, 2);
    TruncatedSeries y = TruncatedSeries::variable(ctx, "y");
    TruncatedSeries z1 = TruncatedSeries::variable(ctx, "z1");
    OneForm f(ctx);
    f.set_component(0, z1 * y);
    CyclePolynomial p = cycle_integral_symbolic(f);
    REQUIRE(p.powers().size() == 1);
    CHECK(p.powers().begin()->second == z1);

    CyclePath path;
    path.c = {0.4, 0.0};
    path.z = {{0.7, 0.0}};
    std::complex<double> quad = cycle_integral_numeric(f, path, 64);
    CHECK(sftest::close(quad, I2PI * std::complex<double>(0.7 * 0.4, 0.0), 1e-11));
}
