#pragma once

#include <optional>
#include <vector>

#include "saddleform/series.hpp"

namespace saddleform {

/// Exact quotient a/b over Q(i), or nothing when b does not divide a.
/// Both operands must be exact polynomials.
std::optional<TruncatedSeries> poly_exact_divide(const TruncatedSeries& a, const TruncatedSeries& b);

/// Gcd of a list of exact polynomials in the spatial variables and the
/// parameter, normalized so the leading coefficient (largest term in the
/// graded order) is 1. Zero entries are ignored; an all-zero list is an error.
TruncatedSeries poly_gcd(const std::vector<TruncatedSeries>& items);

} // namespace saddleform
