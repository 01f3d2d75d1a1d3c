#include "saddleform/cycle.hpp"

#include <algorithm>
#include <cmath>

namespace saddleform {

std::string Obstruction::str(const VarContext& ctx) const {
    std::string s = "c^" + std::to_string(m);
    for (int i = 2; i < ctx.n; ++i)
        if (z_mono.e[i] > 0) {
            s += "*" + ctx.names[i];
            if (z_mono.e[i] > 1) s += "^" + std::to_string(z_mono.e[i]);
        }
    if (j > 0) {
        s += "*" + ctx.tname;
        if (j > 1) s += "^" + std::to_string(j);
    }
    return s + ": " + value.str();
}

Obstructed::Obstructed(std::vector<Obstruction> list)
    : Error("cycle integrals do not vanish (" + std::to_string(list.size()) +
            " obstructing coefficient(s), first at c^" +
            (list.empty() ? std::string("?") : std::to_string(list.front().m)) + ")"),
      list_(std::move(list)) {}

void CyclePolynomial::accumulate(int m, const TruncatedSeries& coeff) {
    require_same_ctx(ctx_, coeff.ctx());
    auto it = powers_.find(m);
    if (it == powers_.end()) {
        if (!coeff.is_zero()) powers_.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) powers_.erase(it);
}

std::complex<double> CyclePolynomial::eval(std::complex<double> c,
                                           const std::vector<std::complex<double>>& zvals,
                                           std::complex<double> tval) const {
    if ((int)zvals.size() != ctx_.n - 2)
        throw MissingAssignment("expected " + std::to_string(ctx_.n - 2) + " transverse values");
    std::vector<std::complex<double>> spatial(ctx_.n, std::complex<double>(0.0, 0.0));
    for (int i = 2; i < ctx_.n; ++i) spatial[i] = zvals[i - 2];
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [m, coeff] : powers_) {
        std::complex<double> cm{1.0, 0.0};
        for (int k = 0; k < m; ++k) cm *= c;
        acc += coeff.eval(spatial, tval) * cm;
    }
    return acc;
}

std::vector<Obstruction> CyclePolynomial::obstructions() const {
    std::vector<Obstruction> out;
    for (const auto& [m, coeff] : powers_) {
        for (const auto& [idx, value] : coeff.terms()) {
            Obstruction o;
            o.m = m;
            o.z_mono = idx;
            o.z_mono.j = 0;
            o.j = idx.j;
            o.value = value;
            out.push_back(std::move(o));
        }
    }
    std::sort(out.begin(), out.end(), [](const Obstruction& a, const Obstruction& b) {
        if (a.j != b.j) return a.j < b.j;
        if (a.m != b.m) return a.m < b.m;
        return a.z_mono.e < b.z_mono.e;
    });
    return out;
}

std::string CyclePolynomial::str() const {
    if (powers_.empty()) return "0";
    std::string out;
    for (const auto& [m, coeff] : powers_) {
        if (!out.empty()) out += " + ";
        out += "(" + coeff.str() + ")*c^" + std::to_string(m);
    }
    return out;
}

CyclePolynomial cycle_integral_symbolic(const OneForm& f) {
    const VarContext& ctx = f.ctx();
    CyclePolynomial result(ctx);
    // dv0 coefficient: x^(m-1) y^m terms survive the angular average.
    for (const auto& [idx, c] : f.component(0).terms()) {
        if (idx.e[1] != idx.e[0] + 1) continue;
        int m = idx.e[1];
        MultiIndex rest = idx;
        rest.e[0] = rest.e[1] = 0;
        result.accumulate(m, TruncatedSeries::monomial(ctx, rest, c));
    }
    // dv1 coefficient: x^m y^(m-1) terms, with the opposite sign.
    for (const auto& [idx, c] : f.component(1).terms()) {
        if (idx.e[0] != idx.e[1] + 1) continue;
        int m = idx.e[0];
        MultiIndex rest = idx;
        rest.e[0] = rest.e[1] = 0;
        result.accumulate(m, TruncatedSeries::monomial(ctx, rest, -c));
    }
    // Transverse components vanish on the path (the z values are pinned).
    return result;
}

std::vector<Obstruction> vanishing_obstructions(const OneForm& f) {
    return cycle_integral_symbolic(f).obstructions();
}

std::complex<double> cycle_integral_numeric(const OneForm& f, const CyclePath& path, int samples) {
    const VarContext& ctx = f.ctx();
    if (samples <= 0) throw InvalidPath("sample count must be positive");
    if (std::abs(path.x0) == 0.0) throw InvalidPath("base point must be nonzero");
    if (std::abs(path.c) == 0.0) throw InvalidPath("fiber value must be nonzero");
    if ((int)path.z.size() != ctx.n - 2)
        throw InvalidPath("expected " + std::to_string(ctx.n - 2) + " transverse values");

    const double twopi = 2.0 * 3.14159265358979323846;
    const std::complex<double> iu(0.0, 1.0);
    std::vector<std::complex<double>> spatial(ctx.n);
    for (int i = 2; i < ctx.n; ++i) spatial[i] = path.z[i - 2];

    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < samples; ++k) {
        double theta = twopi * (double)k / (double)samples;
        std::complex<double> rot(std::cos(theta), std::sin(theta));
        std::complex<double> x = path.x0 * rot;
        std::complex<double> y = path.c / path.x0 / rot;
        spatial[0] = x;
        spatial[1] = y;
        // Velocity: x' = i*x, y' = -i*y; transverse components are constant
        // along the loop and contribute nothing.
        std::complex<double> val = f.component(0).eval(spatial, path.t) * (iu * x) +
                                   f.component(1).eval(spatial, path.t) * (-iu * y);
        acc += val;
    }
    acc *= twopi / (double)samples;
    if (path.reversed) acc = -acc;
    return acc;
}

} // namespace saddleform
