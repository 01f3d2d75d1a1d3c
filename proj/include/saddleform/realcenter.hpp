#pragma once

#include <vector>

#include "saddleform/cycle.hpp"
#include "saddleform/forms.hpp"

namespace saddleform {

/// One-form whose coefficients are exact real rationals, living on the real
/// chart around a center point. Construction rejects any component carrying
/// a nonzero imaginary part.
class RealOneForm {
public:
    explicit RealOneForm(OneForm f);

    const VarContext& ctx() const { return form_.ctx(); }
    const OneForm& form() const { return form_; }

    std::string str() const { return form_.str(); }

private:
    OneForm form_;
};

/// Circle of radius r about the origin of the first two coordinates,
/// traversed counterclockwise, with the transverse variables frozen at u and
/// the parameter at t.
struct RealCircle {
    double r = 1.0;
    std::vector<double> u;
    double t = 0.0;
};

/// Rewrite in the complex chart z = x + i*y, w = x - i*y, where the circles
/// x^2 + y^2 = r^2 become the fibers z*w = r^2. Scalars substitute
/// x = (z + w)/2 and y = (z - w)/(2i); covectors follow along, so dx becomes
/// (dz + dw)/2 and dy becomes (dz - dw)/(2i). Exact and loss-free.
TruncatedSeries complexify(const TruncatedSeries& s);
OneForm complexify(const RealOneForm& f);

/// Inverse chart change: z goes back to x + i*y and dz to dx + i*dy. Throws
/// NotReal when a nonzero imaginary part survives in some final coefficient,
/// which happens exactly when the input lacks the swap-conjugate symmetry
/// below.
TruncatedSeries decomplexify(const TruncatedSeries& s);
RealOneForm decomplexify(const OneForm& f);

/// Whether swapping the two saddle coordinates while conjugating every
/// coefficient leaves the form fixed. Complexifications of real forms have
/// this symmetry, and only forms with it decomplexify without error.
bool reality_symmetric(const OneForm& f);

/// Obstructions to the vanishing of the integral over every small circle:
/// the cycle integral of the complexified form, term by term. Empty means
/// the integral of f over each circle x^2 + y^2 = r^2 is zero for all small
/// r, identically in the transverse variables and the parameter.
std::vector<Obstruction> circle_obstructions(const RealOneForm& f);

/// Trapezoid quadrature of f over the circle. Spectrally exact for
/// polynomial coefficients once the sample count clears the degree.
double circle_integral_numeric(const RealOneForm& f, const RealCircle& circle, int samples);

} // namespace saddleform
