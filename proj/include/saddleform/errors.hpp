#pragma once

#include <stdexcept>
#include <string>

namespace saddleform {

// Base for everything this library throws on purpose. Anything escaping a
// public entry point that is not an Error is a bug in the library itself.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ContextMismatch : public Error {
public:
    explicit ContextMismatch(const std::string& what = "operands live in different variable contexts")
        : Error(what) {}
};

class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable: " + name) {}
};

class NonlinearSubstitution : public Error {
public:
    explicit NonlinearSubstitution(const std::string& what)
        : Error(what) {}
};

class NonzeroConstantTerm : public Error {
public:
    NonzeroConstantTerm() : Error("exp needs a zero constant term") {}
};

class AllZeroInput : public Error {
public:
    AllZeroInput() : Error("gcd of an all-zero input list") {}
};

class NotExactPolynomial : public Error {
public:
    explicit NotExactPolynomial(const std::string& what = "operand is a truncation, not an exact polynomial")
        : Error(what) {}
};

class MissingAssignment : public Error {
public:
    explicit MissingAssignment(const std::string& name)
        : Error("no value assigned to variable: " + name) {}
};

class InvalidPath : public Error {
public:
    explicit InvalidPath(const std::string& what) : Error(what) {}
};

class NotDivisible : public Error {
public:
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

class IntegrabilityHypothesisFailed : public Error {
public:
    explicit IntegrabilityHypothesisFailed(const std::string& what)
        : Error(what) {}
};

class TruncationInconclusive : public Error {
public:
    explicit TruncationInconclusive(const std::string& what) : Error(what) {}
};

class NotReal : public Error {
public:
    explicit NotReal(const std::string& what) : Error(what) {}
};

class PreconditionFailed : public Error {
public:
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position), detail_(what) {}
    std::size_t position() const { return position_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

class UnknownExample : public Error {
public:
    explicit UnknownExample(const std::string& id)
        : Error("unknown corpus example: " + id) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error("internal invariant violated: " + what) {}
};

} // namespace saddleform
