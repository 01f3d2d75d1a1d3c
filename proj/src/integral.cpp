#include "saddleform/integral.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "saddleform/errors.hpp"
#include "saddleform/linsolve.hpp"

namespace saddleform {

namespace {

bool is_saddle_power(const MultiIndex& m) {
    if (m.e[0] != m.e[1]) return false;
    for (std::size_t i = 2; i < m.e.size(); ++i)
        if (m.e[i] != 0) return false;
    return true;
}

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

int column_of(const std::map<MultiIndex, int, TermOrder>& col, const MultiIndex& m) {
    auto it = col.find(m);
    if (it == col.end())
        throw InternalError("first-integral solve touched a monomial outside its column set");
    return it->second;
}

} // namespace

FirstIntegral build_first_integral(const OneForm& omega) {
    const VarContext& ctx = omega.ctx();
    if (ctx.D < 2)
        throw PreconditionFailed("the truncation window cannot hold the saddle product");
    OneForm sd = saddle_differential(ctx);
    if (omega.t_component(0) != sd)
        throw PreconditionFailed("build_first_integral expects a deformation whose parameter-order-zero "
                                 "part is exactly " + sd.str());
    if (!wedge12(omega, ext_d(omega)).is_zero())
        throw PreconditionFailed("build_first_integral expects an integrable deformation, but "
                                 "omega ^ d(omega) has nonzero terms");

    std::vector<std::vector<std::vector<int>>> tuples = tuples_by_degree(ctx, ctx.D);
    auto label = [&ctx](int p, int q, const MultiIndex& m) {
        return "d" + ctx.names[p] + "^d" + ctx.names[q] + " @ " +
               TruncatedSeries::monomial(ctx, m, Gaussian(1)).str();
    };

    TruncatedSeries F = saddle_product(ctx);
    for (int j = 1; j <= ctx.J; ++j) {
        // The order-j equation is dF_j ^ d(xy) = -(t^j coefficient of
        // dF_{<j} ^ omega), and the left side preserves spatial degree, so
        // every equation stays inside the window and the stored right-hand
        // coefficients are the true ones.
        TwoForm rhs = wedge11(ext_d(F), omega);

        std::map<MultiIndex, int, TermOrder> col;
        int next = 0;
        for (int k = 0; k <= ctx.D; ++k)
            for (const auto& e : tuples[k]) {
                MultiIndex m(e, j);
                if (!is_saddle_power(m)) col.emplace(std::move(m), next++);
            }

        LinearSystem sys(next);
        for (int k = 0; k <= ctx.D; ++k)
            for (const auto& e : tuples[k])
                for (int c = 0; c < TwoForm::pair_count(ctx.n); ++c) {
                    auto [p, q] = TwoForm::pair_at(ctx.n, c);
                    MultiIndex mu(e, j);
                    std::map<int, Gaussian> row;
                    if (p == 0 && q == 1) {
                        if (mu.e[0] != mu.e[1])
                            row.emplace(column_of(col, mu), Gaussian(mu.e[0] - mu.e[1]));
                    } else if (p <= 1) {
                        // dx or dy leg from d(xy); the matching F_j monomial
                        // trades the other saddle variable for variable q.
                        int s = 1 - p;
                        if (mu.e[s] >= 1) {
                            MultiIndex m = mu;
                            m.e[s] -= 1;
                            m.e[q] += 1;
                            row.emplace(column_of(col, m), Gaussian(-(mu.e[q] + 1)));
                        }
                    }
                    // two transverse legs never meet dF_j ^ d(xy): those rows
                    // only constrain the right-hand side
                    Gaussian v = -rhs.component_at(c).coeff(mu);
                    if (row.empty() && v.is_zero()) continue;
                    sys.add_row(std::move(row), std::move(v), label(p, q, mu));
                }

        LinearSolution sol;
        try {
            sol = exact_linear_solve(sys);
        } catch (const Infeasible& inf) {
            throw Infeasible(j, inf.witness());
        }
        if (!sol.free_columns.empty())
            throw InternalError("first-integral system left free columns despite the gauge");
        for (const auto& [m, c] : col)
            if (!sol.values[c].is_zero()) F += TruncatedSeries::monomial(ctx, m, sol.values[c]);
    }

    if (!wedge11(ext_d(F), omega).is_zero())
        throw InternalError("first integral fails its defining identity after the solve");
    return FirstIntegral{std::move(F), ctx.D, ctx.J};
}

ResidualReport verify_first_integral(const TruncatedSeries& F, const OneForm& omega) {
    const VarContext& ctx = omega.ctx();
    TwoForm resid = wedge11(ext_d(F), omega);

    ResidualReport rep;
    rep.spatial_degree = ctx.D;
    rep.t_order = ctx.J;
    TermOrder before;
    for (int c = 0; c < resid.component_count(); ++c) {
        auto [p, q] = TwoForm::pair_at(ctx.n, c);
        for (const auto& [m, v] : resid.component_at(c).terms())
            if (!rep.failure || before(m, rep.failure->monomial))
                rep.failure = ResidualFailure{p, q, m, v};
    }
    rep.pass = !rep.failure;
    return rep;
}

std::string ResidualReport::str(const VarContext& ctx) const {
    if (pass)
        return "dF ^ omega vanishes through spatial degree " + std::to_string(spatial_degree) +
               " and parameter order " + std::to_string(t_order);
    const ResidualFailure& f = *failure;
    return "first nonzero term of dF ^ omega is (" +
           TruncatedSeries::monomial(ctx, f.monomial, f.value).str() + ")*d" +
           ctx.names[f.var_a] + "^d" + ctx.names[f.var_b];
}

} // namespace saddleform
