#include "saddleform/realcenter.hpp"

#include <cmath>
#include <optional>
#include <utility>

namespace saddleform {

namespace {

std::string term_label(const VarContext& ctx, int comp, const MultiIndex& m) {
    return "d" + ctx.names[comp] + " at " + TruncatedSeries::monomial(ctx, m, Gaussian(1)).str();
}

void require_real(const OneForm& f) {
    for (int i = 0; i < f.ctx().n; ++i)
        for (const auto& [m, c] : f.component(i).terms())
            if (!c.is_real())
                throw NotReal("imaginary coefficient " + c.str() + " on " +
                              term_label(f.ctx(), i, m));
}

// Swap the two saddle exponents and conjugate the coefficient, term by term.
TruncatedSeries conj_swap(const TruncatedSeries& s) {
    TruncatedSeries out = TruncatedSeries::zero(s.ctx());
    for (const auto& [m, c] : s.terms()) {
        MultiIndex sm = m;
        std::swap(sm.e[0], sm.e[1]);
        out += TruncatedSeries::monomial(s.ctx(), sm, c.conj());
    }
    return out;
}

// Substitute z = x + i*y, w = x - i*y without any reality check.
TruncatedSeries to_real_chart(const TruncatedSeries& s, const VarContext& target) {
    TruncatedSeries x = TruncatedSeries::variable(target, 0);
    TruncatedSeries y = TruncatedSeries::variable(target, 1);
    std::vector<std::optional<TruncatedSeries>> repl(s.ctx().n);
    repl[0] = x + y.scaled(Gaussian::i());
    repl[1] = x - y.scaled(Gaussian::i());
    return s.subst(repl, target);
}

VarContext real_chart_of(const VarContext& cx) {
    VarContext re = cx;
    re.names[0] = "x";
    re.names[1] = "y";
    return re;
}

} // namespace

RealOneForm::RealOneForm(OneForm f) : form_(std::move(f)) {
    require_real(form_);
}

TruncatedSeries complexify(const TruncatedSeries& s) {
    VarContext cx = VarContext::complexified(s.ctx());
    TruncatedSeries z = TruncatedSeries::variable(cx, 0);
    TruncatedSeries w = TruncatedSeries::variable(cx, 1);
    std::vector<std::optional<TruncatedSeries>> repl(s.ctx().n);
    repl[0] = (z + w).scaled(Gaussian(Rational(1, 2)));
    // 1/(2i) = -i/2
    repl[1] = (z - w).scaled(Gaussian(Rational(0), Rational(-1, 2)));
    return s.subst(repl, cx);
}

OneForm complexify(const RealOneForm& f) {
    const OneForm& rf = f.form();
    VarContext cx = VarContext::complexified(rf.ctx());
    TruncatedSeries p = complexify(rf.component(0));
    TruncatedSeries q = complexify(rf.component(1));
    Gaussian half(Rational(1, 2));
    OneForm out(cx);
    // P dx + Q dy = ((P - i*Q)/2) dz + ((P + i*Q)/2) dw
    out.set_component(0, (p - q.scaled(Gaussian::i())).scaled(half));
    out.set_component(1, (p + q.scaled(Gaussian::i())).scaled(half));
    for (int i = 2; i < cx.n; ++i) out.set_component(i, complexify(rf.component(i)));
    return out;
}

TruncatedSeries decomplexify(const TruncatedSeries& s) {
    TruncatedSeries out = to_real_chart(s, real_chart_of(s.ctx()));
    for (const auto& [m, c] : out.terms())
        if (!c.is_real())
            throw NotReal("imaginary coefficient " + c.str() + " at " +
                          TruncatedSeries::monomial(out.ctx(), m, Gaussian(1)).str());
    return out;
}

RealOneForm decomplexify(const OneForm& f) {
    VarContext re = real_chart_of(f.ctx());
    TruncatedSeries zc = to_real_chart(f.component(0), re);
    TruncatedSeries wc = to_real_chart(f.component(1), re);
    OneForm out(re);
    // Z dz + W dw = (Z + W) dx + i*(Z - W) dy
    out.set_component(0, zc + wc);
    out.set_component(1, (zc - wc).scaled(Gaussian::i()));
    for (int i = 2; i < re.n; ++i) out.set_component(i, to_real_chart(f.component(i), re));
    return RealOneForm(std::move(out));
}

bool reality_symmetric(const OneForm& f) {
    if (f.component(0) != conj_swap(f.component(1))) return false;
    for (int i = 2; i < f.ctx().n; ++i)
        if (f.component(i) != conj_swap(f.component(i))) return false;
    return true;
}

std::vector<Obstruction> circle_obstructions(const RealOneForm& f) {
    return vanishing_obstructions(complexify(f));
}

double circle_integral_numeric(const RealOneForm& f, const RealCircle& circle, int samples) {
    const VarContext& ctx = f.ctx();
    if (samples <= 0) throw InvalidPath("sample count must be positive");
    if (!(circle.r > 0.0)) throw InvalidPath("circle radius must be positive");
    if ((int)circle.u.size() != ctx.n - 2)
        throw InvalidPath("expected " + std::to_string(ctx.n - 2) + " transverse values");

    const double twopi = 2.0 * 3.14159265358979323846;
    std::vector<std::complex<double>> spatial(ctx.n);
    for (int i = 2; i < ctx.n; ++i) spatial[i] = circle.u[i - 2];

    double acc = 0.0;
    for (int k = 0; k < samples; ++k) {
        double theta = twopi * (double)k / (double)samples;
        double x = circle.r * std::cos(theta);
        double y = circle.r * std::sin(theta);
        spatial[0] = x;
        spatial[1] = y;
        // Velocity: x' = -y, y' = x.
        acc += (f.form().component(0).eval(spatial, circle.t) * (-y) +
                f.form().component(1).eval(spatial, circle.t) * x)
                   .real();
    }
    return acc * twopi / (double)samples;
}

} // namespace saddleform
