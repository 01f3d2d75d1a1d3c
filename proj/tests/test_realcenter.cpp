#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "saddleform/realcenter.hpp"

#include "common.hpp"

using namespace saddleform;
using namespace sftest;

namespace {

RealOneForm rand_real_form(Rng& rng, const VarContext& ctx, int maxdeg, int maxj, int nterms) {
    OneForm f(ctx);
    for (int i = 0; i < ctx.n; ++i)
        f.set_component(i, rand_series(rng, ctx, maxdeg, maxj, nterms, true));
    return RealOneForm(std::move(f));
}

// Value of the form on a tangent vector at a point.
std::complex<double> pair_form(const OneForm& f, const std::vector<std::complex<double>>& pt,
                               const std::vector<std::complex<double>>& tangent,
                               std::complex<double> tval) {
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < f.ctx().n; ++i) acc += f.component(i).eval(pt, tval) * tangent[i];
    return acc;
}

// Push a real point or tangent through z = x + i*y, w = x - i*y.
std::vector<std::complex<double>> push_complex(const std::vector<std::complex<double>>& v) {
    std::vector<std::complex<double>> out = v;
    std::complex<double> iu(0.0, 1.0);
    out[0] = v[0] + iu * v[1];
    out[1] = v[0] - iu * v[1];
    return out;
}

} // namespace

TEST_CASE("complex chart carries the basic center forms to their known images") {
    VarContext ctx = VarContext::center(2, 10, 4);
    VarContext cx = VarContext::complexified(ctx);
    TruncatedSeries x = TruncatedSeries::variable(ctx, 0);
    TruncatedSeries y = TruncatedSeries::variable(ctx, 1);

    // x^2 + y^2 becomes z*w
    TruncatedSeries g = x * x + y * y;
    CHECK(complexify(g) == TruncatedSeries::monomial(cx, MultiIndex({1, 1}, 0), Gaussian(1)));

    // dx becomes (dz + dw)/2
    OneForm dx(ctx);
    dx.set_component(0, TruncatedSeries::constant(ctx, Gaussian(1)));
    OneForm dxc = complexify(RealOneForm(dx));
    Gaussian half(Rational(1, 2));
    CHECK(dxc.component(0) == TruncatedSeries::constant(cx, half));
    CHECK(dxc.component(1) == TruncatedSeries::constant(cx, half));

    // x dy - y dx becomes (w dz - z dw)/(2i) = -(i/2) w dz + (i/2) z dw
    OneForm ang(ctx);
    ang.set_component(0, -y);
    ang.set_component(1, x);
    OneForm angc = complexify(RealOneForm(ang));
    Gaussian ihalf(Rational(0), Rational(1, 2));
    CHECK(angc.component(0) ==
          TruncatedSeries::monomial(cx, MultiIndex({0, 1}, 0), -ihalf));
    CHECK(angc.component(1) == TruncatedSeries::monomial(cx, MultiIndex({1, 0}, 0), ihalf));

    // The same identity checked numerically: pairing against a pushed tangent.
    Rng rng(940);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<std::complex<double>> pt(2), tangent(2);
        for (int i = 0; i < 2; ++i) {
            pt[i] = rand_point(rng).real();
            tangent[i] = rand_point(rng).real();
        }
        CHECK(close(pair_form(ang, pt, tangent, 0.0),
                    pair_form(angc, push_complex(pt), push_complex(tangent), 0.0), 1e-12));
    }
}

TEST_CASE("chart change preserves tangent pairings and commutes with d") {
    Rng rng(941);
    for (int it = 0; it < 12; ++it) {
        int n = it % 2 == 0 ? 2 : 3;
        VarContext ctx = VarContext::center(n, 10, 4);
        RealOneForm f = rand_real_form(rng, ctx, 4, 2, 4);
        OneForm fc = complexify(f);

        for (int rep = 0; rep < 5; ++rep) {
            std::vector<std::complex<double>> pt(n), tangent(n);
            for (int i = 0; i < n; ++i) {
                pt[i] = rand_point(rng).real();
                tangent[i] = rand_point(rng).real();
            }
            std::complex<double> tval(0.3, 0.0);
            CHECK(close(pair_form(f.form(), pt, tangent, tval),
                        pair_form(fc, push_complex(pt), push_complex(tangent), tval), 1e-9));
        }

        TruncatedSeries s = rand_series(rng, ctx, 4, 2, 4, true);
        CHECK(complexify(RealOneForm(ext_d(s))) == ext_d(complexify(s)));
    }
}

TEST_CASE("decomplexification inverts the complex chart") {
    VarContext ctx = VarContext::center(2, 10, 4);
    VarContext cx = VarContext::complexified(ctx);
    TruncatedSeries x = TruncatedSeries::variable(ctx, 0);
    TruncatedSeries y = TruncatedSeries::variable(ctx, 1);

    TruncatedSeries zw = TruncatedSeries::monomial(cx, MultiIndex({1, 1}, 0), Gaussian(1));
    CHECK(decomplexify(zw) == x * x + y * y);

    TruncatedSeries zpw =
        TruncatedSeries::monomial(cx, MultiIndex({1, 0}, 0), Gaussian(1)) +
        TruncatedSeries::monomial(cx, MultiIndex({0, 1}, 0), Gaussian(1));
    CHECK(decomplexify(zpw) == x.scaled(Gaussian(2)));

    Rng rng(942);
    for (int it = 0; it < 100; ++it) {
        int n = it % 2 == 0 ? 2 : 3;
        VarContext rctx = VarContext::center(n, 10, 4);
        RealOneForm f = rand_real_form(rng, rctx, 4, 2, 4);
        OneForm fc = complexify(f);
        CHECK(reality_symmetric(fc));
        CHECK(decomplexify(fc).form() == f.form());

        TruncatedSeries s = rand_series(rng, rctx, 4, 2, 3, true);
        CHECK(decomplexify(complexify(s)) == s);
    }
}

TEST_CASE("imaginary leftovers are rejected and diagnosed") {
    VarContext ctx = VarContext::center(2, 10, 4);
    VarContext cx = VarContext::complexified(ctx);
    Gaussian ihalf(Rational(0), Rational(1, 2));

    // i*(dz + dw)/2 would decomplexify to i*dx
    OneForm eta(cx);
    eta.set_component(0, TruncatedSeries::constant(cx, ihalf));
    eta.set_component(1, TruncatedSeries::constant(cx, ihalf));
    CHECK_FALSE(reality_symmetric(eta));
    try {
        decomplexify(eta);
        CHECK(false);
    } catch (const NotReal& e) {
        CHECK(std::string(e.what()).find("on dx") != std::string::npos);
    }

    // i*dz alone
    OneForm idz(cx);
    idz.set_component(0, TruncatedSeries::constant(cx, Gaussian::i()));
    CHECK_THROWS_AS(decomplexify(idz), NotReal);

    // z dz lacks the swap-conjugate symmetry: its dx coefficient keeps i*y
    OneForm zdz(cx);
    zdz.set_component(0, TruncatedSeries::variable(cx, 0));
    CHECK_FALSE(reality_symmetric(zdz));
    CHECK_THROWS_AS(decomplexify(zdz), NotReal);

    // the symmetric completion z dz + w dw decomplexifies to 2(x dx - y dy)
    OneForm sym = zdz;
    sym.set_component(1, TruncatedSeries::variable(cx, 1));
    CHECK(reality_symmetric(sym));
    RealOneForm symr = decomplexify(sym);
    TruncatedSeries x = TruncatedSeries::variable(ctx, 0);
    TruncatedSeries y = TruncatedSeries::variable(ctx, 1);
    CHECK(symr.form().component(0) == x.scaled(Gaussian(2)));
    CHECK(symr.form().component(1) == y.scaled(Gaussian(-2)));

    // scalar path: z alone goes to x + i*y
    CHECK_THROWS_AS(decomplexify(TruncatedSeries::variable(cx, 0)), NotReal);

    // a real wrapper never accepts an imaginary coefficient in the first place
    OneForm idx(ctx);
    idx.set_component(0, TruncatedSeries::constant(ctx, Gaussian::i()));
    CHECK_THROWS_AS(RealOneForm{idx}, NotReal);
}

TEST_CASE("circle obstructions flag the angular form and clear exact combinations") {
    VarContext ctx = VarContext::center(2, 10, 4);
    TruncatedSeries x = TruncatedSeries::variable(ctx, 0);
    TruncatedSeries y = TruncatedSeries::variable(ctx, 1);

    CHECK(circle_obstructions(RealOneForm(ext_d(x * x + y * y))).empty());

    OneForm ang(ctx);
    ang.set_component(0, -y);
    ang.set_component(1, x);
    auto obs = circle_obstructions(RealOneForm(ang));
    REQUIRE(obs.size() == 1);
    CHECK(obs[0].m == 1);
    CHECK(obs[0].j == 0);
    CHECK(obs[0].z_mono == MultiIndex::zeros(2));
    CHECK(obs[0].value == Gaussian(Rational(0), Rational(-1)));

    // multiples of d(x^2+y^2) plus derivatives integrate to zero over every circle
    Rng rng(943);
    for (int it = 0; it < 10; ++it) {
        int n = it % 2 == 0 ? 2 : 3;
        VarContext rctx = VarContext::center(n, 10, 4);
        TruncatedSeries rx = TruncatedSeries::variable(rctx, 0);
        TruncatedSeries ry = TruncatedSeries::variable(rctx, 1);
        TruncatedSeries a = rand_series(rng, rctx, 3, 2, 3, true);
        TruncatedSeries h = rand_series(rng, rctx, 4, 2, 4, true);
        OneForm w = a * ext_d(rx * rx + ry * ry) + ext_d(h);
        CHECK(circle_obstructions(RealOneForm(w)).empty());
    }
}

TEST_CASE("circle quadrature matches the symbolic normalization") {
    const double twopi = 2.0 * 3.14159265358979323846;
    VarContext ctx = VarContext::center(2, 10, 4);
    TruncatedSeries x = TruncatedSeries::variable(ctx, 0);
    TruncatedSeries y = TruncatedSeries::variable(ctx, 1);

    OneForm ang(ctx);
    ang.set_component(0, -y);
    ang.set_component(1, x);
    RealOneForm angr(ang);

    // Enclosed area, twice: 2*pi*r^2.
    CHECK(std::abs(circle_integral_numeric(angr, {1.0, {}, 0.0}, 256) - twopi) < 1e-10);
    CHECK(std::abs(circle_integral_numeric(angr, {0.5, {}, 0.0}, 256) - twopi * 0.25) < 1e-10);

    RealOneForm exact_form(ext_d(x * x + y * y));
    CHECK(std::abs(circle_integral_numeric(exact_form, {0.8, {}, 0.0}, 256)) < 1e-12);

    CHECK_THROWS_AS(circle_integral_numeric(angr, {0.0, {}, 0.0}, 64), InvalidPath);
    CHECK_THROWS_AS(circle_integral_numeric(angr, {-1.0, {}, 0.0}, 64), InvalidPath);
    CHECK_THROWS_AS(circle_integral_numeric(angr, {1.0, {}, 0.0}, 0), InvalidPath);
    CHECK_THROWS_AS(circle_integral_numeric(angr, {1.0, {0.5}, 0.0}, 64), InvalidPath);

    // Random forms: the real quadrature, the complex contour quadrature of the
    // complexified form, and 2*pi*Re(i*I(r^2)) from the symbolic integral all
    // agree.
    Rng rng(944);
    const double radii[] = {0.4, 0.9, 1.1};
    for (int it = 0; it < 12; ++it) {
        VarContext rctx = VarContext::center(3, 10, 4);
        RealOneForm f = rand_real_form(rng, rctx, 4, 2, 3);
        OneForm fc = complexify(f);
        CyclePolynomial ihat = cycle_integral_symbolic(fc);

        double r = radii[it % 3];
        double uval = rand_point(rng).real();
        double tval = 0.7;

        double numeric = circle_integral_numeric(f, {r, {uval}, tval}, 512);

        CyclePath path;
        path.c = r * r;
        path.x0 = r;
        path.z = {std::complex<double>(uval, 0.0)};
        path.t = tval;
        std::complex<double> contour = cycle_integral_numeric(fc, path, 512);
        CHECK(close(contour, numeric, 1e-9));

        std::complex<double> iu(0.0, 1.0);
        double symbolic =
            twopi * (iu * ihat.eval(r * r, {std::complex<double>(uval, 0.0)}, tval)).real();
        CHECK(std::abs(numeric - symbolic) < 1e-9);
    }
}
