#include "saddleform/singular.hpp"

#include <map>
#include <vector>

namespace saddleform {

TwoForm wedge_with_df(const OneForm& omega) {
    return wedge11(omega, saddle_differential(omega.ctx()));
}

CodimReport classify_codim(const TwoForm& alpha) {
    const VarContext& ctx = alpha.ctx();

    std::vector<TruncatedSeries> coeffs;
    for (int k = 0; k < alpha.component_count(); ++k) {
        const TruncatedSeries& c = alpha.component_at(k);
        if (!c.exact()) return {CodimClass::Inconclusive, std::nullopt, 0};
        if (!c.is_zero()) coeffs.push_back(c);
    }
    if (coeffs.empty()) return {CodimClass::IdenticallyZero, std::nullopt, 0};

    TruncatedSeries g = poly_gcd(coeffs);

    // The largest factor of g that is a polynomial in the parameter alone is
    // the gcd of the parameter polynomials sitting on each spatial monomial.
    std::map<std::vector<int>, TruncatedSeries> per_monomial;
    for (const auto& [m, c] : g.terms()) {
        auto it = per_monomial.find(m.e);
        if (it == per_monomial.end())
            it = per_monomial.emplace(m.e, TruncatedSeries::zero(ctx)).first;
        MultiIndex tpow = MultiIndex::zeros(ctx.n);
        tpow.j = m.j;
        it->second += TruncatedSeries::monomial(ctx, tpow, c);
    }
    std::vector<TruncatedSeries> tpolys;
    tpolys.reserve(per_monomial.size());
    for (auto& [e, p] : per_monomial) tpolys.push_back(std::move(p));
    TruncatedSeries content = poly_gcd(tpolys);

    int stripped = content.t_degree();
    TruncatedSeries reduced = g;
    if (stripped > 0) {
        std::optional<TruncatedSeries> q = poly_exact_divide(g, content);
        if (!q) throw InternalError("parameter content fails to divide the coefficient gcd");
        reduced = std::move(*q);
    }

    if (reduced.spatial_degree() >= 1 && reduced.constant_term().is_zero())
        return {CodimClass::CodimOne, std::move(reduced), stripped};
    return {CodimClass::CodimAtLeastTwo, std::nullopt, stripped};
}

std::string codim_class_name(CodimClass c) {
    switch (c) {
        case CodimClass::IdenticallyZero: return "identically_zero";
        case CodimClass::CodimOne: return "codim_one";
        case CodimClass::CodimAtLeastTwo: return "codim_at_least_two";
        case CodimClass::Inconclusive: return "inconclusive";
    }
    throw InternalError("unhandled codimension class");
}

} // namespace saddleform
