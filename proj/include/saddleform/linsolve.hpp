#pragma once

#include <map>
#include <string>
#include <vector>

#include "saddleform/exact.hpp"
#include "saddleform/errors.hpp"

namespace saddleform {

class Infeasible : public Error {
public:
    Infeasible(int order, const std::string& witness)
        : Error("no solution exists" +
                (order >= 0 ? " at parameter order " + std::to_string(order) : std::string()) +
                ": " + witness),
          order_(order), witness_(witness) {}

    /// Parameter order at which the blocking equation lives, or -1 when the
    /// system did not come from an order-by-order solve.
    int order() const { return order_; }
    const std::string& witness() const { return witness_; }

private:
    int order_;
    std::string witness_;
};

class LinearSystem;

struct LinearSolution {
    std::vector<Gaussian> values;    // one per column; free columns hold 0
    std::vector<int> free_columns;   // columns no pivot landed on
};

/// Gaussian elimination over the exact field. Rows are consumed in insertion
/// order and each reduced row pivots on its first remaining column, so the
/// result is reproducible. Free variables are set to zero. Throws Infeasible
/// (order -1) with the offending row's label when a row reduces to
/// 0 = nonzero.
LinearSolution exact_linear_solve(const LinearSystem& sys);

/// Sparse linear system over the Gaussian rationals. Rows are added in the
/// order the caller discovers equations; that order is part of the pivot
/// rule, so assembly must be deterministic.
class LinearSystem {
public:
    explicit LinearSystem(int ncols) : ncols_(ncols) {}

    int cols() const { return ncols_; }
    int rows() const { return (int)rows_.size(); }

    /// Row as sparse column -> coefficient map; label is used in Infeasible
    /// messages.
    void add_row(std::map<int, Gaussian> coeffs, Gaussian rhs, std::string label = "");

private:
    friend LinearSolution exact_linear_solve(const LinearSystem& sys);

    int ncols_;
    std::vector<std::map<int, Gaussian>> rows_;
    std::vector<Gaussian> rhs_;
    std::vector<std::string> labels_;
};

} // namespace saddleform
