#pragma once

#include <complex>
#include <map>
#include <vector>

#include "saddleform/forms.hpp"

namespace saddleform {

/// Closed loop on the fiber {v0*v1 = c} at fixed transverse values:
/// v0 = x0*e^{i*theta}, v1 = (c/x0)*e^{-i*theta}, theta in [0, 2pi),
/// counterclockwise unless reversed.
struct CyclePath {
    std::complex<double> c;
    std::complex<double> x0{1.0, 0.0};
    std::vector<std::complex<double>> z;
    std::complex<double> t{0.0, 0.0};
    bool reversed = false;
};

/// One nonvanishing coefficient of the normalized cycle integral: the
/// c^m coefficient at transverse monomial z_mono and parameter order j.
struct Obstruction {
    int m = 0;
    MultiIndex z_mono; // saddle and parameter slots zero
    int j = 0;
    Gaussian value;

    std::string str(const VarContext& ctx) const;
};

class Obstructed : public Error {
public:
    explicit Obstructed(std::vector<Obstruction> list);
    const std::vector<Obstruction>& obstructions() const { return list_; }

private:
    std::vector<Obstruction> list_;
};

/// Normalized cycle integral (1/2pi*i) of a one-form over the fibers, as a
/// polynomial in the fiber value c whose coefficients are series in the
/// transverse variables and the parameter. Vanishing identically is
/// equivalent to all cycle integrals vanishing at the truncation order.
class CyclePolynomial {
public:
    explicit CyclePolynomial(const VarContext& ctx) : ctx_(ctx) {}

    const VarContext& ctx() const { return ctx_; }
    const std::map<int, TruncatedSeries>& powers() const { return powers_; }

    void accumulate(int m, const TruncatedSeries& coeff);

    bool is_zero() const { return powers_.empty(); }

    /// Sum over m of coeff_m(z, t) * c^m.
    std::complex<double> eval(std::complex<double> c,
                              const std::vector<std::complex<double>>& zvals,
                              std::complex<double> tval) const;

    /// Stored terms flattened to a list, sorted by (parameter order, c-power,
    /// transverse exponents).
    std::vector<Obstruction> obstructions() const;

    /// e.g. "(-t)*c^2 + (z1)*c^3"; "0" when empty.
    std::string str() const;

private:
    VarContext ctx_;
    std::map<int, TruncatedSeries> powers_;
};

/// Coefficient extraction along the path above. With the dv0 coefficient A
/// and the dv1 coefficient B, the c^m coefficient is A_{m-1,m} - B_{m,m-1}
/// (saddle exponents; transverse exponents and parameter order ride along).
/// Pinned against the quadrature below before anything was built on top.
CyclePolynomial cycle_integral_symbolic(const OneForm& f);

std::vector<Obstruction> vanishing_obstructions(const OneForm& f);

/// Trapezoid quadrature of f over the path; spectrally exact for polynomial
/// coefficients once the sample count clears the degree. Fixed summation
/// order, so results are reproducible bit for bit.
std::complex<double> cycle_integral_numeric(const OneForm& f, const CyclePath& path, int samples);

} // namespace saddleform
