#pragma once

#include <optional>

#include "saddleform/cycle.hpp"
#include "saddleform/forms.hpp"
#include "saddleform/linsolve.hpp"

namespace saddleform {

/// The writing eta = a * d(xy) + dh. When `exact` is true the identity holds
/// on the nose; otherwise it is asserted only for monomials of spatial degree
/// <= residual_degree (and parameter order within the context bound), which
/// is all a truncated input can support.
struct StandardForm {
    TruncatedSeries a;
    TruncatedSeries h;
    bool exact = true;
    std::optional<int> residual_degree;
};

OneForm recombine(const StandardForm& sf);

/// Two-variable coefficient recurrence for x*h_x - y*h_y = x*A - y*B. The
/// diagonal gradings carry no unknown; a nonzero right-hand side there is
/// exactly a nonvanishing cycle coefficient and is thrown as Obstructed
/// (all of them, not just the first). Diagonal h-monomials are gauged to
/// zero. Requires a form with no transverse components and no transverse
/// variables in its coefficients.
TruncatedSeries solve_h_2d(const OneForm& eta);

/// Division by d(xy): the unique a with rho = a * d(xy), read off by shifting
/// the dx coefficient down one power of y (and cross-checked against the dy
/// coefficient shifted down one power of x). Throws NotDivisible when the
/// two read-offs disagree, a transverse component is present, or a
/// coefficient lacks the required factor.
TruncatedSeries divide_by_df(const OneForm& rho);

/// Full standard-form construction. Dimension 2 runs the recurrence plus the
/// division step; dimension >= 3 assembles the jet linear system for the
/// coefficients of a and h and solves it exactly, after checking the
/// hypothesis d(eta) ^ d(xy) = 0. Throws Obstructed when cycle coefficients
/// block, IntegrabilityHypothesisFailed when the hypothesis fails on stored
/// terms, TruncationInconclusive when a truncated input fails the solve
/// without a visible obstruction.
StandardForm standard_form(const OneForm& eta);

} // namespace saddleform
