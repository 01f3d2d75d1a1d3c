#pragma once

#include <string>

#include "saddleform/forms.hpp"

namespace saddleform {

/// Parse an expression over the context's variables into a one-form.
///
/// Grammar: sums and differences of products of powered atoms, where an atom
/// is a rational literal, the imaginary unit i, a variable (parameter
/// included), a parenthesized expression, exp(scalar), d(scalar), or a basis
/// covector (d followed by a spatial variable name, e.g. dx, dz1). A leading
/// minus on an expression is allowed. Every subexpression is either a scalar
/// or a one-form; mixing them in + or taking products of two forms is
/// rejected. A scalar result parses only when it is zero (the zero form).
///
/// Throws SyntaxError with the byte offset of the offending token, or
/// UnknownVariable for an undeclared name under d(..).
OneForm parse_form(const std::string& text, const VarContext& ctx);

/// Same grammar restricted to scalars; basis covectors and d(..) are
/// rejected.
TruncatedSeries parse_scalar(const std::string& text, const VarContext& ctx);

/// One analysis problem read from the `key = value` input format: `n`,
/// `mode` (saddle or center), `omega`, optional `deg` and `tdeg` (default
/// 10 and 4). Lines starting with '#' and blank lines are skipped.
struct InputProblem {
    VarContext ctx;
    bool center = false;
    std::string omega_text;
    OneForm omega;

    InputProblem(const VarContext& c, OneForm f) : ctx(c), omega(std::move(f)) {}
};

InputProblem parse_input_text(const std::string& text);
InputProblem parse_input_file(const std::string& path);

} // namespace saddleform
