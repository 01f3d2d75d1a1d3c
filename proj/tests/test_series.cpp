#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"

using namespace saddleform;
using sftest::Rng;

namespace {

TruncatedSeries var(const VarContext& ctx, const std::string& name) {
    return TruncatedSeries::variable(ctx, name);
}

TruncatedSeries one(const VarContext& ctx) {
    return TruncatedSeries::constant(ctx, Gaussian(1));
}

} // namespace

TEST_CASE("product truncates and records the loss") {
    VarContext big = VarContext::saddle(2, 4, 2);
    TruncatedSeries x = var(big, "x");
    TruncatedSeries p = (one(big) + x) * (one(big) - x);
    CHECK(p == one(big) - x * x);
    CHECK(p.exact());

    VarContext tight = VarContext::saddle(2, 1, 2);
    TruncatedSeries xt = var(tight, "x");
    TruncatedSeries q = (one(tight) + xt) * (one(tight) + xt);
    CHECK(q == one(tight) + xt.scaled(Gaussian(2)));
    CHECK(!q.exact());
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(1);
    for (int n : {2, 3}) {
        VarContext ctx = VarContext::saddle(n, 4, 2);
        for (int it = 0; it < 250; ++it) {
            TruncatedSeries a = sftest::rand_series(rng, ctx, 2, 1, 3);
            TruncatedSeries b = sftest::rand_series(rng, ctx, 2, 1, 3);
            TruncatedSeries c = sftest::rand_series(rng, ctx, 2, 1, 3);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == TruncatedSeries::zero(ctx));
            CHECK(a * one(ctx) == a);
        }
    }
}

TEST_CASE("derivatives") {
    VarContext ctx = VarContext::saddle(2, 6, 3);
    TruncatedSeries x = var(ctx, "x"), y = var(ctx, "y"), t = var(ctx, "t");
    CHECK((x * x * y).diff(0) == x.scaled(Gaussian(2)) * y);
    CHECK((t * t * y).diff_t() == t.scaled(Gaussian(2)) * y);
    CHECK(x.diff(1).is_zero());

    Rng rng(2);
    for (int it = 0; it < 100; ++it) {
        TruncatedSeries f = sftest::rand_series(rng, ctx, 2, 1, 3);
        TruncatedSeries g = sftest::rand_series(rng, ctx, 2, 1, 3);
        for (int i = 0; i < 2; ++i)
            CHECK((f * g).diff(i) == f.diff(i) * g + f * g.diff(i));
        CHECK((f * g).diff_t() == f.diff_t() * g + f * g.diff_t());
    }
}

TEST_CASE("exp") {
    VarContext ctx = VarContext::saddle(2, 8, 4);
    TruncatedSeries y = var(ctx, "y"), t = var(ctx, "t");

    TruncatedSeries e0 = TruncatedSeries::zero(ctx).exp_series();
    CHECK(e0 == one(ctx));
    CHECK(!e0.exact());

    TruncatedSeries ety = (t * y).exp_series();
    TruncatedSeries expect = one(ctx);
    Rational f(1);
    for (int k = 1; k <= 4; ++k) {
        f *= Rational(k);
        expect += (t * y).pow_u(k).scaled(Gaussian(Rational(1) / f));
    }
    CHECK(ety == expect);

    CHECK_THROWS_AS(one(ctx).exp_series(), NonzeroConstantTerm);

    Rng rng(3);
    for (int it = 0; it < 25; ++it) {
        TruncatedSeries a = sftest::rand_series(rng, ctx, 2, 1, 2);
        TruncatedSeries b = sftest::rand_series(rng, ctx, 2, 1, 2);
        a -= TruncatedSeries::constant(ctx, a.constant_term());
        b -= TruncatedSeries::constant(ctx, b.constant_term());
        CHECK(a.exp_series() * b.exp_series() == (a + b).exp_series());
    }
}

TEST_CASE("linear substitution is a ring map") {
    VarContext src = VarContext::saddle(2, 6, 2);
    VarContext dst = src;
    dst.names = {"z", "w"};
    Rng rng(4);
    TruncatedSeries z = var(dst, "z"), w = var(dst, "w");
    Gaussian half(Rational(1, 2));
    Gaussian mihalf = Gaussian(Rational(0), Rational(-1, 2));
    std::vector<std::optional<TruncatedSeries>> repl = {
        (z + w).scaled(half),        // x
        (z - w).scaled(mihalf),      // y
    };
    for (int it = 0; it < 50; ++it) {
        TruncatedSeries f = sftest::rand_series(rng, src, 2, 1, 3);
        TruncatedSeries g = sftest::rand_series(rng, src, 2, 1, 3);
        CHECK((f * g).subst(repl, dst) == f.subst(repl, dst) * g.subst(repl, dst));
        CHECK((f + g).subst(repl, dst) == f.subst(repl, dst) + g.subst(repl, dst));
    }
    // x*y maps to (z^2 - w^2)/4i... checked concretely: x*y -> (z+w)(z-w)*(-i/4)
    TruncatedSeries xy = var(src, "x") * var(src, "y");
    TruncatedSeries image = xy.subst(repl, dst);
    CHECK(image == ((z * z) - (w * w)).scaled(half * mihalf));

    // Nonlinear or affine assignments are refused.
    std::vector<std::optional<TruncatedSeries>> bad1 = {z * z, std::nullopt};
    CHECK_THROWS_AS(xy.subst(bad1, dst), NonlinearSubstitution);
    std::vector<std::optional<TruncatedSeries>> bad2 = {z + one(dst), std::nullopt};
    CHECK_THROWS_AS(xy.subst(bad2, dst), NonlinearSubstitution);
}

TEST_CASE("evaluation is deterministic and matches hand values") {
    VarContext ctx = VarContext::saddle(2, 6, 2);
    TruncatedSeries f = var(ctx, "x") + var(ctx, "y").scaled(Gaussian::i());
    std::complex<double> v = f.eval({{1.0, 0.0}, {0.0, 2.0}}, {0.0, 0.0});
    CHECK(v == std::complex<double>(-1.0, 0.0));

    Rng rng(5);
    TruncatedSeries g = sftest::rand_series(rng, ctx, 4, 2, 8);
    auto p1 = g.eval({{0.3, 0.1}, {-0.2, 0.7}}, {0.5, 0.0});
    auto p2 = g.eval({{0.3, 0.1}, {-0.2, 0.7}}, {0.5, 0.0});
    CHECK(p1 == p2);

    CHECK_THROWS_AS(g.eval({{1.0, 0.0}}, {0.0, 0.0}), MissingAssignment);
}

TEST_CASE("context mismatch is detected") {
    VarContext a = VarContext::saddle(2, 6, 2);
    VarContext b = VarContext::saddle(2, 7, 2);
    CHECK_THROWS_AS(one(a) + one(b), ContextMismatch);
    CHECK_THROWS_AS(one(a) * one(b), ContextMismatch);
}

TEST_CASE("canonical rendering") {
    VarContext ctx = VarContext::saddle(2, 6, 2);
    TruncatedSeries x = var(ctx, "x"), y = var(ctx, "y"), t = var(ctx, "t");
    TruncatedSeries s = one(ctx) - (t * x * x * y).scaled(Gaussian(2));
    CHECK(s.str() == "1 - 2*t*x^2*y");
    CHECK(TruncatedSeries::zero(ctx).str() == "0");
    CHECK((-t).str() == "-t");
    TruncatedSeries mixed = x.scaled(Gaussian(Rational(1), Rational(-1))) + y;
    CHECK(mixed.str() == "(1 - i)*x + y");
    CHECK((x + t).str() == "x + t");
    CHECK(y.scaled(Gaussian(Rational(0), Rational(1))).str() == "i*y");
}

TEST_CASE("parameter slicing") {
    VarContext ctx = VarContext::saddle(2, 6, 3);
    Rng rng(6);
    for (int it = 0; it < 40; ++it) {
        TruncatedSeries f = sftest::rand_series(rng, ctx, 3, 3, 6);
        TruncatedSeries back = TruncatedSeries::zero(ctx);
        for (int j = 0; j <= 3; ++j) back += f.t_component(j).mul_t(j);
        CHECK(back == f);
    }
}

TEST_CASE("gcd on fixed cases") {
    VarContext ctx2 = VarContext::saddle(2, 8, 2);
    TruncatedSeries x = var(ctx2, "x"), y = var(ctx2, "y"), t = var(ctx2, "t");

    CHECK(poly_gcd({x * x * y, x * y * y}) == x * y);
    CHECK(poly_gcd({t * x.pow_u(3) * y.pow_u(2)}) == t * x.pow_u(3) * y.pow_u(2));
    CHECK(poly_gcd({x * y, x + y}) == one(ctx2));

    VarContext ctx3 = VarContext::saddle(3, 8, 2);
    TruncatedSeries xx = var(ctx3, "x"), yy = var(ctx3, "y"), z1 = var(ctx3, "z1");
    CHECK(poly_gcd({z1 * xx - yy, xx * yy}) == one(ctx3));

    // Normalization: leading coefficient scaled to one.
    CHECK(poly_gcd({(x * y).scaled(Gaussian(6)), (x * y * y).scaled(Gaussian(4))}) == x * y);

    CHECK_THROWS_AS(poly_gcd({TruncatedSeries::zero(ctx2)}), AllZeroInput);
    CHECK_THROWS_AS(poly_gcd({(t * y).exp_series()}), NotExactPolynomial);
}

TEST_CASE("gcd against brute force on monomials") {
    VarContext ctx = VarContext::saddle(3, 10, 3);
    Rng rng(7);
    for (int it = 0; it < 60; ++it) {
        MultiIndex a = sftest::rand_index(rng, ctx, 4, 2);
        MultiIndex b = sftest::rand_index(rng, ctx, 4, 2);
        TruncatedSeries ma = TruncatedSeries::monomial(ctx, a, sftest::rand_gaussian_nonzero(rng));
        TruncatedSeries mb = TruncatedSeries::monomial(ctx, b, sftest::rand_gaussian_nonzero(rng));
        MultiIndex expect = sftest::brute_monomial_gcd(a, b);
        CHECK(poly_gcd({ma, mb}) == TruncatedSeries::monomial(ctx, expect, Gaussian(1)));
    }
}

TEST_CASE("gcd respects common factors") {
    VarContext ctx = VarContext::saddle(2, 12, 2);
    Rng rng(8);
    for (int it = 0; it < 40; ++it) {
        TruncatedSeries g = sftest::rand_series_nonzero(rng, ctx, 2, 1, 2);
        TruncatedSeries p = sftest::rand_series_nonzero(rng, ctx, 2, 0, 2);
        TruncatedSeries q = sftest::rand_series_nonzero(rng, ctx, 2, 0, 2);
        TruncatedSeries d = poly_gcd({g * p, g * q});
        // d divides both products, g divides d, and d/(g*gcd(p,q)) is a unit.
        CHECK(poly_exact_divide(g * p, d).has_value());
        CHECK(poly_exact_divide(g * q, d).has_value());
        CHECK(poly_exact_divide(d, g).has_value());
        TruncatedSeries expect = poly_gcd({g * poly_gcd({p, q})});
        CHECK(d == expect);
    }
}
