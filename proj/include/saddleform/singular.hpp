#pragma once

#include <optional>
#include <string>

#include "saddleform/forms.hpp"
#include "saddleform/polygcd.hpp"

namespace saddleform {

enum class CodimClass { IdenticallyZero, CodimOne, CodimAtLeastTwo, Inconclusive };

/// Codimension of the common zero set of a 2-form's coefficients at the
/// origin. A CodimOne report carries the shared factor that cuts the
/// codimension-1 component; stripped_t_power records the degree of the
/// factor depending on the parameter alone that was divided out before
/// classifying (the zero set is read at generic nonzero parameter).
struct CodimReport {
    CodimClass cls = CodimClass::Inconclusive;
    std::optional<TruncatedSeries> witness;
    int stripped_t_power = 0;
};

/// The tangency 2-form omega ^ (y*dx + x*dy).
TwoForm wedge_with_df(const OneForm& omega);

/// Trichotomy on the coefficients of alpha: all zero, sharing a nonunit
/// common factor vanishing at the origin (codimension 1), or neither
/// (codimension >= 2). Truncated coefficients give Inconclusive, never a
/// guess: the gcd of truncations is not the gcd of the underlying germs.
CodimReport classify_codim(const TwoForm& alpha);

/// Snake-case tag for reports: "codim_one" and friends.
std::string codim_class_name(CodimClass c);

} // namespace saddleform
