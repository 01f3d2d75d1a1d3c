#include "saddleform/linsolve.hpp"

#include <algorithm>

namespace saddleform {

void LinearSystem::add_row(std::map<int, Gaussian> coeffs, Gaussian rhs, std::string label) {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (it->first < 0 || it->first >= ncols_)
            throw InternalError("linear system column out of range");
        if (it->second.is_zero())
            it = coeffs.erase(it);
        else
            ++it;
    }
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(std::move(rhs));
    labels_.push_back(std::move(label));
}

LinearSolution exact_linear_solve(const LinearSystem& sys) {
    // pivots[c] is a reduced row whose first column is c.
    std::map<int, std::pair<std::map<int, Gaussian>, Gaussian>> pivots;

    for (std::size_t r = 0; r < sys.rows_.size(); ++r) {
        std::map<int, Gaussian> row = sys.rows_[r];
        Gaussian rhs = sys.rhs_[r];
        // Eliminate against known pivots; each pass removes the row's current
        // first column, so this terminates.
        while (!row.empty()) {
            int c = row.begin()->first;
            auto hit = pivots.find(c);
            if (hit == pivots.end()) break;
            Gaussian factor = row.begin()->second / hit->second.first.begin()->second;
            for (const auto& [pc, pv] : hit->second.first) {
                auto it = row.find(pc);
                Gaussian updated = (it == row.end() ? Gaussian() : it->second) - factor * pv;
                if (updated.is_zero()) {
                    if (it != row.end()) row.erase(it);
                } else if (it == row.end()) {
                    row.emplace(pc, updated);
                } else {
                    it->second = updated;
                }
            }
            rhs -= factor * hit->second.second;
        }
        if (row.empty()) {
            if (!rhs.is_zero())
                throw Infeasible(-1, sys.labels_[r].empty()
                                         ? "equation row " + std::to_string(r) + " reduces to 0 = " + rhs.str()
                                         : sys.labels_[r] + " reduces to 0 = " + rhs.str());
            continue; // redundant row
        }
        int pivot_col = row.begin()->first;
        pivots.emplace(pivot_col, std::make_pair(std::move(row), std::move(rhs)));
    }

    LinearSolution sol;
    sol.values.assign(sys.ncols_, Gaussian());
    // Pivot rows only reference columns >= their own, so resolve from the
    // back.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& [row, rhs] = it->second;
        Gaussian acc = rhs;
        auto term = row.begin();
        Gaussian lead = term->second;
        for (++term; term != row.end(); ++term)
            acc -= term->second * sol.values[term->first];
        sol.values[it->first] = acc / lead;
    }
    for (int c = 0; c < sys.ncols_; ++c)
        if (!pivots.count(c)) sol.free_columns.push_back(c);
    return sol;
}

} // namespace saddleform
