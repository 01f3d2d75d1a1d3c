#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "saddleform/cycle.hpp"
#include "saddleform/decompose.hpp"
#include "saddleform/integral.hpp"
#include "saddleform/realcenter.hpp"
#include "saddleform/singular.hpp"

namespace saddleform {

/// One symbolic-vs-quadrature comparison over a concrete contour.
struct NumericCheck {
    std::string path;
    std::complex<double> symbolic;
    std::complex<double> quadrature;
    double abs_error = 0.0;
};

struct StageStatus {
    std::string name;
    std::string status; // "ok", "failed", or "skipped"
    std::string detail;
};

/// Everything the analysis produced, stage by stage. Stages that could not
/// run are present with status "skipped" and a reason; stage failures are
/// recorded here rather than thrown. json() renders the canonical report,
/// byte-identical for identical inputs.
struct AnalysisReport {
    std::string input;
    VarContext ctx;
    bool real = false;

    CyclePolynomial cycle;
    std::vector<Obstruction> obstructions;

    std::optional<StandardForm> standard;
    bool integrability_pass = false;
    CodimReport codim;
    std::optional<FirstIntegral> first_integral;
    std::string first_integral_real; // decomplexified F (center mode only)

    std::vector<NumericCheck> numeric_checks;
    std::vector<StageStatus> stages;

    explicit AnalysisReport(const VarContext& c) : ctx(c), cycle(c) {}

    const StageStatus* stage(const std::string& name) const;

    std::string json_text(bool pretty = false) const;
};

/// Run the full saddle-mode decision procedure: cycle integrals, standard
/// form, integrability, singular-locus codimension, first integral, numeric
/// cross-checks. Throws PreconditionFailed unless the parameter-free part of
/// omega is d(xy); every later error is captured in the report.
AnalysisReport run_analysis(const OneForm& omega);

/// Real-center variant: complexify, then the same stages on the fibers
/// zw = r^2, then decomplexify the first integral. Throws PreconditionFailed
/// unless the parameter-free part is d(x^2 + y^2).
AnalysisReport center_pipeline(const RealOneForm& omega);

} // namespace saddleform
