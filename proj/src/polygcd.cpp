#include "saddleform/polygcd.hpp"

#include <algorithm>
#include <map>
#include <utility>

// Gcd runs on an untruncated term map: pseudo-remainder sequences push
// intermediate degrees well past the jet bounds even when inputs and result
// all fit, so the series type (which would silently truncate) is unusable
// in the middle of the computation.

namespace saddleform {

namespace {

using PolyMap = std::map<MultiIndex, Gaussian, TermOrder>;

bool poly_is_zero(const PolyMap& p) { return p.empty(); }

void poly_add_term(PolyMap& p, const MultiIndex& m, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

PolyMap poly_mul(const PolyMap& a, const PolyMap& b) {
    PolyMap r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            MultiIndex m = ma;
            for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
            m.j += mb.j;
            poly_add_term(r, m, ca * cb);
        }
    return r;
}

PolyMap poly_sub(PolyMap a, const PolyMap& b) {
    for (const auto& [m, c] : b) poly_add_term(a, m, -c);
    return a;
}

PolyMap poly_scale(const PolyMap& a, const Gaussian& c) {
    PolyMap r;
    if (!c.is_zero())
        for (const auto& [m, v] : a) r.emplace(m, v * c);
    return r;
}

// Exponent of `var` in m, where var == n addresses the parameter.
int var_exp(const MultiIndex& m, int var) {
    return var == (int)m.e.size() ? m.j : m.e[var];
}

void set_var_exp(MultiIndex& m, int var, int e) {
    if (var == (int)m.e.size())
        m.j = e;
    else
        m.e[var] = e;
}

int poly_deg(const PolyMap& p, int var) {
    int d = 0;
    for (const auto& [m, c] : p) d = std::max(d, var_exp(m, var));
    return d;
}

// Coefficient of var^k, with that exponent zeroed out.
PolyMap var_coeff(const PolyMap& p, int var, int k) {
    PolyMap r;
    for (const auto& [m, c] : p) {
        if (var_exp(m, var) != k) continue;
        MultiIndex s = m;
        set_var_exp(s, var, 0);
        r.emplace(s, c);
    }
    return r;
}

PolyMap shift_var(const PolyMap& p, int var, int k) {
    PolyMap r;
    for (const auto& [m, c] : p) {
        MultiIndex s = m;
        set_var_exp(s, var, var_exp(s, var) + k);
        r.emplace(s, c);
    }
    return r;
}

// Divide out the largest monomial dividing every term and return it.
MultiIndex strip_monomial(PolyMap& p) {
    MultiIndex low = p.begin()->first;
    for (const auto& [m, c] : p) {
        for (std::size_t i = 0; i < low.e.size(); ++i) low.e[i] = std::min(low.e[i], m.e[i]);
        low.j = std::min(low.j, m.j);
    }
    if (low.spatial_degree() + low.j > 0) {
        PolyMap r;
        for (const auto& [m, c] : p) {
            MultiIndex s = m;
            for (std::size_t i = 0; i < s.e.size(); ++i) s.e[i] -= low.e[i];
            s.j -= low.j;
            r.emplace(std::move(s), c);
        }
        p = std::move(r);
    }
    return low;
}

PolyMap attach_monomial(PolyMap p, const MultiIndex& mono) {
    if (mono.spatial_degree() + mono.j == 0) return p;
    PolyMap r;
    for (const auto& [m, c] : p) {
        MultiIndex s = m;
        for (std::size_t i = 0; i < s.e.size(); ++i) s.e[i] += mono.e[i];
        s.j += mono.j;
        r.emplace(std::move(s), c);
    }
    return r;
}

bool is_unit(const PolyMap& p) {
    return p.size() == 1 && p.begin()->first.is_constant();
}

// Univariate polynomials over the Gaussian rationals, exponent -> coefficient.
using UniPoly = std::map<int, Gaussian>;

void uni_make_monic(UniPoly& p) {
    if (p.empty()) return;
    Gaussian lead = p.rbegin()->second;
    for (auto& [e, c] : p) c = c / lead;
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
    int db = b.rbegin()->first;
    const Gaussian& lb = b.rbegin()->second;
    while (!a.empty() && a.rbegin()->first >= db) {
        int k = a.rbegin()->first - db;
        Gaussian f = a.rbegin()->second / lb;
        for (const auto& [e, c] : b) {
            Gaussian v = f * c;
            auto [it, fresh] = a.try_emplace(e + k, -v);
            if (!fresh) {
                it->second -= v;
                if (it->second.is_zero()) a.erase(it);
            }
        }
    }
    return a;
}

int uni_gcd_degree(UniPoly a, UniPoly b) {
    while (!b.empty()) {
        uni_make_monic(b);
        UniPoly r = uni_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.rbegin()->first;
}

// Specialize every variable except `var` at the r-th point tuple, keeping
// `var` symbolic.
UniPoly specialize(const PolyMap& p, int var, int attempt) {
    static const int pts[8] = {2, 3, 5, 7, 11, 13, 17, 19};
    UniPoly out;
    for (const auto& [m, c] : p) {
        Gaussian v = c;
        int nvars = (int)m.e.size() + 1;
        for (int w = 0; w < nvars; ++w) {
            if (w == var) continue;
            Gaussian base((long long)pts[(w + attempt) % 8]);
            for (int k = 0; k < var_exp(m, w); ++k) v = v * base;
        }
        auto [it, fresh] = out.try_emplace(var_exp(m, var), v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

// Upper bound for the degree of gcd(f, g) in `var`, or -1 when no point
// certifies one. A specialization is binding as soon as it preserves the
// var-degree of one of the inputs: the leading var-coefficient of that input
// is the leading coefficient of the gcd times a cofactor, so it survives for
// the gcd too, and the specialized gcd divides the gcd of the
// specializations.
int specialized_degree_bound(const PolyMap& f, const PolyMap& g, int var) {
    int df = poly_deg(f, var), dg = poly_deg(g, var);
    for (int attempt = 0; attempt < 6; ++attempt) {
        UniPoly fs = specialize(f, var, attempt);
        UniPoly gs = specialize(g, var, attempt);
        bool f_ok = !fs.empty() && fs.rbegin()->first == df;
        bool g_ok = !gs.empty() && gs.rbegin()->first == dg;
        if (!f_ok && !g_ok) continue;
        if (fs.empty()) return gs.rbegin()->first;
        if (gs.empty()) return fs.rbegin()->first;
        return uni_gcd_degree(std::move(fs), std::move(gs));
    }
    return -1;
}

// Single-divisor reduction in the graded order. Succeeds exactly when b | a.
std::optional<PolyMap> poly_divide(const PolyMap& a, const PolyMap& b) {
    PolyMap r = a, q;
    const auto& [lb, cb] = *b.rbegin();
    while (!r.empty()) {
        const auto& [lr, cr] = *r.rbegin();
        MultiIndex d = lr;
        bool ok = lr.j >= lb.j;
        d.j = lr.j - lb.j;
        for (std::size_t i = 0; ok && i < d.e.size(); ++i) {
            if (lr.e[i] < lb.e[i]) ok = false;
            d.e[i] = lr.e[i] - lb.e[i];
        }
        if (!ok) return std::nullopt;
        Gaussian cd = cr / cb;
        poly_add_term(q, d, cd);
        PolyMap piece;
        piece.emplace(d, cd);
        r = poly_sub(r, poly_mul(piece, b));
    }
    return q;
}

PolyMap gcd_rec(const PolyMap& f, const PolyMap& g, int vtop);

PolyMap gcd_list(const std::vector<PolyMap>& items, int vtop) {
    PolyMap acc;
    for (const auto& p : items) {
        if (poly_is_zero(p)) continue;
        acc = poly_is_zero(acc) ? p : gcd_rec(acc, p, vtop);
        if (is_unit(acc)) break;
    }
    return acc;
}

PolyMap content(const PolyMap& p, int var, int vtop) {
    std::vector<PolyMap> coeffs;
    for (int k = 0; k <= poly_deg(p, var); ++k) {
        PolyMap c = var_coeff(p, var, k);
        if (!poly_is_zero(c)) coeffs.push_back(std::move(c));
    }
    return gcd_list(coeffs, vtop);
}

// Pseudo-remainder of a by b in `var`: a power of lc(b) times a, reduced mod
// b until the degree in `var` drops below deg(b). Each pass cancels the
// leading var-coefficient exactly, so the loop terminates.
PolyMap prem(PolyMap a, const PolyMap& b, int var) {
    int db = poly_deg(b, var);
    PolyMap lcb = var_coeff(b, var, db);
    while (!poly_is_zero(a)) {
        int da = poly_deg(a, var);
        if (da < db) break;
        PolyMap lca = var_coeff(a, var, da);
        a = poly_sub(poly_mul(lcb, a), poly_mul(shift_var(lca, var, da - db), b));
    }
    return a;
}

PolyMap one_poly(int n) {
    PolyMap r;
    r.emplace(MultiIndex::zeros(n), Gaussian(1));
    return r;
}

PolyMap gcd_core(const PolyMap& f, const PolyMap& g, int vtop) {
    int n = (int)f.begin()->first.e.size();
    if (vtop < 0 || is_unit(f) || is_unit(g)) return one_poly(n);

    int df = poly_deg(f, vtop), dg = poly_deg(g, vtop);
    if (df == 0 && dg == 0) return gcd_core(f, g, vtop - 1);

    // When the gcd provably has degree zero in vtop it divides every
    // vtop-coefficient, so it is the gcd of the two contents. Catching this
    // early keeps the remainder sequence, whose intermediate swell is the
    // expensive part, for inputs that actually share a factor.
    if (df == 0 || dg == 0 || specialized_degree_bound(f, g, vtop) == 0) {
        PolyMap cf = content(f, vtop, vtop - 1);
        PolyMap cg = content(g, vtop, vtop - 1);
        return gcd_rec(cf, cg, vtop - 1);
    }

    PolyMap cf = content(f, vtop, vtop - 1);
    PolyMap cg = content(g, vtop, vtop - 1);
    PolyMap c = gcd_rec(cf, cg, vtop - 1);
    PolyMap F = *poly_divide(f, cf);
    PolyMap G = *poly_divide(g, cg);
    if (poly_deg(F, vtop) < poly_deg(G, vtop)) std::swap(F, G);

    // Primitive remainder sequence.
    while (true) {
        if (poly_deg(G, vtop) == 0) {
            // G is a unit times its (trivial) content: coprime in vtop.
            return c;
        }
        PolyMap R = prem(F, G, vtop);
        if (poly_is_zero(R)) return poly_mul(c, G);
        PolyMap cR = content(R, vtop, vtop - 1);
        R = *poly_divide(R, cR);
        F = std::move(G);
        G = std::move(R);
    }
}

PolyMap gcd_rec(const PolyMap& f, const PolyMap& g, int vtop) {
    if (poly_is_zero(f)) return g;
    if (poly_is_zero(g)) return f;
    PolyMap fp = f, gp = g;
    MultiIndex mf = strip_monomial(fp);
    MultiIndex mg = strip_monomial(gp);
    for (std::size_t i = 0; i < mf.e.size(); ++i) mf.e[i] = std::min(mf.e[i], mg.e[i]);
    mf.j = std::min(mf.j, mg.j);
    return attach_monomial(gcd_core(fp, gp, vtop), mf);
}

PolyMap to_poly(const TruncatedSeries& s) {
    PolyMap p;
    for (const auto& [m, c] : s.terms()) p.emplace(m, c);
    return p;
}

TruncatedSeries from_poly(const PolyMap& p, const VarContext& ctx) {
    TruncatedSeries s = TruncatedSeries::zero(ctx);
    for (const auto& [m, c] : p) s += TruncatedSeries::monomial(ctx, m, c);
    if (!s.exact()) throw InternalError("gcd result does not fit the truncation bounds");
    return s;
}

} // namespace

std::optional<TruncatedSeries> poly_exact_divide(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ctx(a.ctx(), b.ctx());
    if (!a.exact() || !b.exact()) throw NotExactPolynomial();
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return TruncatedSeries::zero(a.ctx());
    auto q = poly_divide(to_poly(a), to_poly(b));
    if (!q) return std::nullopt;
    return from_poly(*q, a.ctx());
}

TruncatedSeries poly_gcd(const std::vector<TruncatedSeries>& items) {
    if (items.empty()) throw AllZeroInput();
    const VarContext& ctx = items.front().ctx();
    std::vector<PolyMap> polys;
    for (const auto& s : items) {
        require_same_ctx(s.ctx(), ctx);
        if (!s.exact()) throw NotExactPolynomial();
        if (!s.is_zero()) polys.push_back(to_poly(s));
    }
    if (polys.empty()) throw AllZeroInput();
    PolyMap g = gcd_list(polys, ctx.n); // variable ctx.n is the parameter
    // Normalize: leading coefficient 1 in the graded order.
    g = poly_scale(g, Gaussian(1) / g.rbegin()->second);
    return from_poly(g, ctx);
}

} // namespace saddleform
