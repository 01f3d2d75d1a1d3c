#pragma once

#include <optional>
#include <string>

#include "saddleform/forms.hpp"
#include "saddleform/series.hpp"

namespace saddleform {

/// A truncated one-parameter first integral: F restricts to the saddle
/// product at parameter order zero, and dF ^ omega has no nonzero
/// coefficient of spatial degree <= verified_spatial_degree and parameter
/// order <= verified_t_order.
struct FirstIntegral {
    TruncatedSeries F;
    int verified_spatial_degree = 0;
    int verified_t_order = 0;
};

/// Lowest-graded nonzero term of dF ^ omega, identified by the basis plane
/// carrying it.
struct ResidualFailure {
    int var_a = 0;
    int var_b = 0;
    MultiIndex monomial;
    Gaussian value;
};

struct ResidualReport {
    bool pass = false;
    int spatial_degree = 0;
    int t_order = 0;
    std::optional<ResidualFailure> failure;

    std::string str(const VarContext& ctx) const;
};

/// Solves dF ^ omega = 0 for F = xy + sum_{j>=1} t^j F_j, order by order in
/// the parameter, over the context's truncation window. Excluding every
/// power of xy from the F_j makes the answer unique, and the returned F is
/// always re-verified before it leaves. omega must restrict to the saddle
/// differential at parameter order zero and satisfy omega ^ d(omega) = 0 on
/// its stored terms; both are PreconditionFailed otherwise. When some order
/// has no solution the Infeasible carries that order and the blocking row.
FirstIntegral build_first_integral(const OneForm& omega);

/// Computes dF ^ omega and reports a clean pass over the truncation window
/// or its lowest-graded nonzero term.
ResidualReport verify_first_integral(const TruncatedSeries& F, const OneForm& omega);

} // namespace saddleform
