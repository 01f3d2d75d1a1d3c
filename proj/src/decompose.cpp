#include "saddleform/decompose.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace saddleform {

namespace {

bool transverse_free(const TruncatedSeries& s) {
    for (const auto& [m, c] : s.terms())
        for (std::size_t i = 2; i < m.e.size(); ++i)
            if (m.e[i] != 0) return false;
    return true;
}

TruncatedSeries shift_down(const TruncatedSeries& s, int var) {
    TruncatedSeries out = TruncatedSeries::zero(s.ctx());
    for (const auto& [m, c] : s.terms()) {
        if (m.e[var] == 0)
            throw NotDivisible("coefficient term " + TruncatedSeries::monomial(s.ctx(), m, c).str() +
                               " lacks the factor " + s.ctx().names[var]);
        MultiIndex d = m;
        d.e[var] -= 1;
        out += TruncatedSeries::monomial(s.ctx(), d, c);
    }
    if (!s.exact()) out.mark_inexact();
    return out;
}

TruncatedSeries drop_above_degree(const TruncatedSeries& s, int bound) {
    TruncatedSeries out = TruncatedSeries::zero(s.ctx());
    for (const auto& [m, c] : s.terms())
        if (m.spatial_degree() <= bound) out += TruncatedSeries::monomial(s.ctx(), m, c);
    out.mark_inexact();
    return out;
}

bool is_saddle_diagonal(const MultiIndex& m) {
    if (m.e[0] != m.e[1] || m.e[0] == 0) return false;
    for (std::size_t i = 2; i < m.e.size(); ++i)
        if (m.e[i] != 0) return false;
    return true;
}

/// Exponent tuples bucketed by spatial degree 0..bound, each bucket in
/// ascending lexicographic order.
std::vector<std::vector<std::vector<int>>> tuples_by_degree(const VarContext& ctx, int bound) {
    std::vector<std::vector<std::vector<int>>> buckets(bound + 1);
    std::vector<int> cur(ctx.n, 0);
    for (;;) {
        int deg = 0;
        for (int v : cur) deg += v;
        if (deg <= bound) buckets[deg].push_back(cur);
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == bound) cur[i++] = 0;
        if (i == cur.size()) break;
        ++cur[i];
    }
    for (auto& b : buckets) std::sort(b.begin(), b.end());
    return buckets;
}

} // namespace

OneForm recombine(const StandardForm& sf) {
    return sf.a * saddle_differential(sf.a.ctx()) + ext_d(sf.h);
}

TruncatedSeries solve_h_2d(const OneForm& eta) {
    const VarContext& ctx = eta.ctx();
    for (int i = 2; i < ctx.n; ++i)
        if (!eta.component(i).is_zero())
            throw PreconditionFailed("the two-variable recurrence cannot handle transverse components");
    const TruncatedSeries& A = eta.component(0);
    const TruncatedSeries& B = eta.component(1);
    if (!transverse_free(A) || !transverse_free(B))
        throw PreconditionFailed("the two-variable recurrence cannot handle transverse variables");

    // Right-hand side of (m-n)*h_{m,n} = A_{m-1,n} - B_{m,n-1}, collected per
    // monomial. Pure coefficient reads, so entries one degree above the
    // stored terms are still the true ones.
    std::map<MultiIndex, Gaussian, TermOrder> rhs;
    auto put = [&rhs](MultiIndex m, const Gaussian& v) {
        auto [it, fresh] = rhs.emplace(std::move(m), v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) rhs.erase(it);
        }
    };
    for (const auto& [m, c] : A.terms()) {
        MultiIndex up = m;
        up.e[0] += 1;
        put(std::move(up), c);
    }
    for (const auto& [m, c] : B.terms()) {
        MultiIndex up = m;
        up.e[1] += 1;
        put(std::move(up), -c);
    }

    std::vector<Obstruction> blocked;
    TruncatedSeries h = TruncatedSeries::zero(ctx);
    for (const auto& [m, v] : rhs) {
        if (m.e[0] == m.e[1]) {
            Obstruction o;
            o.m = m.e[0];
            o.z_mono = MultiIndex::zeros(ctx.n);
            o.j = m.j;
            o.value = v;
            blocked.push_back(std::move(o));
            continue;
        }
        h += TruncatedSeries::monomial(ctx, m, v / Gaussian(m.e[0] - m.e[1]));
    }
    if (!blocked.empty()) {
        std::sort(blocked.begin(), blocked.end(), [](const Obstruction& a, const Obstruction& b) {
            return a.j != b.j ? a.j < b.j : a.m < b.m;
        });
        throw Obstructed(std::move(blocked));
    }
    if (!eta.exact()) h.mark_inexact();
    return h;
}

TruncatedSeries divide_by_df(const OneForm& rho) {
    const VarContext& ctx = rho.ctx();
    for (int i = 2; i < ctx.n; ++i)
        if (!rho.component(i).is_zero())
            throw NotDivisible("nonzero d" + ctx.names[i] + " component; the form is not a multiple of " +
                               ctx.names[1] + "*d" + ctx.names[0] + " + " + ctx.names[0] + "*d" + ctx.names[1]);
    TruncatedSeries from_A = shift_down(rho.component(0), 1);
    TruncatedSeries from_B = shift_down(rho.component(1), 0);
    if (from_A != from_B)
        throw NotDivisible("the d" + ctx.names[0] + " and d" + ctx.names[1] +
                           " coefficients disagree after dividing out the saddle differential");
    return from_A;
}

namespace {

StandardForm standard_form_2d(const OneForm& eta) {
    const VarContext& ctx = eta.ctx();
    bool full = eta.exact() && eta.spatial_degree() <= ctx.D - 1;

    TruncatedSeries h = solve_h_2d(eta);
    OneForm rho = eta - ext_d(h);

    if (full) {
        TruncatedSeries a = TruncatedSeries::zero(ctx);
        try {
            a = divide_by_df(rho);
        } catch (const NotDivisible& nd) {
            throw InternalError(std::string("recurrence left a nondivisible remainder: ") + nd.what());
        }
        StandardForm sf{std::move(a), std::move(h), true, std::nullopt};
        if (recombine(sf) != eta)
            throw InternalError("standard form does not recombine to its input");
        return sf;
    }

    // Truncated input: dh is only trustworthy below the truncation degree,
    // so the division runs on the certified part and the result carries a
    // residual bound.
    int bound = ctx.D - 1;
    OneForm clipped(ctx);
    clipped.set_component(0, drop_above_degree(rho.component(0), bound));
    clipped.set_component(1, drop_above_degree(rho.component(1), bound));
    TruncatedSeries a = TruncatedSeries::zero(ctx);
    try {
        a = divide_by_df(clipped);
    } catch (const NotDivisible& nd) {
        throw InternalError(std::string("recurrence left a nondivisible remainder: ") + nd.what());
    }
    a.mark_inexact();
    h.mark_inexact();
    StandardForm sf{std::move(a), std::move(h), false, bound};

    OneForm delta = eta - recombine(sf);
    for (int i = 0; i < ctx.n; ++i)
        for (const auto& [m, c] : delta.component(i).terms())
            if (m.spatial_degree() <= bound)
                throw InternalError("truncated standard form violates its residual bound");
    return sf;
}

StandardForm standard_form_jet(const OneForm& eta) {
    const VarContext& ctx = eta.ctx();

    ThreeForm hyp = wedge12(saddle_differential(ctx), ext_d(eta));
    if (!hyp.is_zero())
        throw IntegrabilityHypothesisFailed(
            "d(eta) ^ d(" + ctx.names[0] + "*" + ctx.names[1] + ") has nonzero terms; "
            "no standard form needs to exist for such a deformation");

    std::vector<Obstruction> obs = vanishing_obstructions(eta);
    if (!obs.empty()) throw Obstructed(std::move(obs));

    bool full = eta.exact() && eta.spatial_degree() <= ctx.D - 1;
    int R = full ? ctx.D : ctx.D - 1;

    // The equations for the monomials of spatial degree k at parameter order
    // j touch only the degree k-1 part of a and the degree k+1 part of h at
    // the same order, so each (k, j) block is its own small linear system.
    // Diagonal h-monomials (xy)^i t^j are the gauge directions and get no
    // column; a monomial out of column range contributes nothing, which
    // imposes the gauge and the degree bound on the solution.
    std::vector<std::vector<std::vector<int>>> tuples = tuples_by_degree(ctx, ctx.D);
    TruncatedSeries a = TruncatedSeries::zero(ctx);
    TruncatedSeries h = TruncatedSeries::zero(ctx);
    auto label = [&ctx](int comp, const MultiIndex& m) {
        return "d" + ctx.names[comp] + " @ " + TruncatedSeries::monomial(ctx, m, Gaussian(1)).str();
    };

    try {
        for (int j = 0; j <= ctx.J; ++j) {
            for (int k = 0; k <= R; ++k) {
                std::map<MultiIndex, int, TermOrder> a_col, h_col;
                int next = 0;
                if (k >= 1)
                    for (const auto& e : tuples[k - 1]) a_col.emplace(MultiIndex(e, j), next++);
                if (k + 1 <= ctx.D)
                    for (const auto& e : tuples[k + 1]) {
                        MultiIndex m(e, j);
                        if (!is_saddle_diagonal(m)) h_col.emplace(std::move(m), next++);
                    }
                auto a_at = [&a_col](const MultiIndex& m) -> std::optional<int> {
                    auto it = a_col.find(m);
                    return it == a_col.end() ? std::nullopt : std::make_optional(it->second);
                };
                auto h_at = [&h_col](const MultiIndex& m) -> std::optional<int> {
                    auto it = h_col.find(m);
                    return it == h_col.end() ? std::nullopt : std::make_optional(it->second);
                };

                LinearSystem sys(next);
                for (const auto& e : tuples[k]) {
                    MultiIndex mu(e, j);
                    {
                        std::map<int, Gaussian> row;
                        if (mu.e[1] >= 1) {
                            MultiIndex m = mu;
                            m.e[1] -= 1;
                            if (auto c = a_at(m)) row.emplace(*c, Gaussian(1));
                        }
                        MultiIndex hx = mu;
                        hx.e[0] += 1;
                        if (auto c = h_at(hx)) row.emplace(*c, Gaussian(mu.e[0] + 1));
                        sys.add_row(std::move(row), eta.component(0).coeff(mu), label(0, mu));
                    }
                    {
                        std::map<int, Gaussian> row;
                        if (mu.e[0] >= 1) {
                            MultiIndex m = mu;
                            m.e[0] -= 1;
                            if (auto c = a_at(m)) row.emplace(*c, Gaussian(1));
                        }
                        MultiIndex hy = mu;
                        hy.e[1] += 1;
                        if (auto c = h_at(hy)) row.emplace(*c, Gaussian(mu.e[1] + 1));
                        sys.add_row(std::move(row), eta.component(1).coeff(mu), label(1, mu));
                    }
                    for (int i = 2; i < ctx.n; ++i) {
                        std::map<int, Gaussian> row;
                        MultiIndex hz = mu;
                        hz.e[i] += 1;
                        if (auto c = h_at(hz)) row.emplace(*c, Gaussian(mu.e[i] + 1));
                        sys.add_row(std::move(row), eta.component(i).coeff(mu), label(i, mu));
                    }
                }

                LinearSolution sol = exact_linear_solve(sys);
                for (const auto& [m, col] : a_col)
                    if (!sol.values[col].is_zero())
                        a += TruncatedSeries::monomial(ctx, m, sol.values[col]);
                for (const auto& [m, col] : h_col)
                    if (!sol.values[col].is_zero())
                        h += TruncatedSeries::monomial(ctx, m, sol.values[col]);
            }
        }
    } catch (const Infeasible& inf) {
        if (eta.exact())
            throw InternalError(std::string("jet system infeasible with no cycle obstruction: ") +
                                inf.what());
        throw TruncationInconclusive(
            "the jet system fails (" + inf.witness() +
            ") with no obstruction visible at this truncation; a higher order may decide");
    }

    if (full) {
        StandardForm sf{std::move(a), std::move(h), true, std::nullopt};
        if (recombine(sf) != eta)
            throw InternalError("standard form does not recombine to its input");
        return sf;
    }

    a.mark_inexact();
    h.mark_inexact();
    StandardForm sf{std::move(a), std::move(h), false, R};
    OneForm delta = eta - recombine(sf);
    for (int i = 0; i < ctx.n; ++i)
        for (const auto& [m, c] : delta.component(i).terms())
            if (m.spatial_degree() <= R)
                throw InternalError("truncated standard form violates its residual bound");
    return sf;
}

} // namespace

StandardForm standard_form(const OneForm& eta) {
    if (eta.ctx().n == 2) return standard_form_2d(eta);
    return standard_form_jet(eta);
}

} // namespace saddleform
