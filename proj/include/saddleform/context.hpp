#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "saddleform/errors.hpp"

namespace saddleform {

/// Ambient variable set plus truncation bounds. Two series interoperate only
/// when their contexts compare equal (same variables, same bounds).
///
/// Spatial variables sit at indices 0..n-1; index 0 and 1 play the roles of
/// the two saddle coordinates whatever their names are (x,y for the saddle
/// chart, z,w after complexifying a real form). The deformation parameter is
/// tracked separately and never counts as spatial.
struct VarContext {
    int n = 2;
    std::vector<std::string> names;
    std::string tname = "t";
    int D = 10;
    int J = 4;

    static VarContext saddle(int n, int D, int J) {
        VarContext c;
        c.n = n;
        c.D = D;
        c.J = J;
        c.names = {"x", "y"};
        for (int i = 1; i <= n - 2; ++i) c.names.push_back("z" + std::to_string(i));
        return c;
    }

    static VarContext center(int n, int D, int J) {
        VarContext c;
        c.n = n;
        c.D = D;
        c.J = J;
        c.names = {"x", "y"};
        for (int i = 1; i <= n - 2; ++i) c.names.push_back("u" + std::to_string(i));
        return c;
    }

    /// Same transverse variables and bounds, saddle coordinates renamed z, w.
    static VarContext complexified(const VarContext& real) {
        VarContext c = real;
        c.names[0] = "z";
        c.names[1] = "w";
        return c;
    }

    int index_of(const std::string& name) const {
        for (int i = 0; i < n; ++i)
            if (names[i] == name) return i;
        throw UnknownVariable(name);
    }

    bool has_variable(const std::string& name) const {
        for (const auto& s : names)
            if (s == name) return true;
        return false;
    }

    bool operator==(const VarContext&) const = default;
};

/// Exponent vector of one monomial: e[i] for spatial variable i, j for the
/// deformation parameter.
struct MultiIndex {
    std::vector<int> e;
    int j = 0;

    MultiIndex() = default;
    MultiIndex(std::vector<int> exps, int tj) : e(std::move(exps)), j(tj) {}
    static MultiIndex zeros(int n) { return MultiIndex(std::vector<int>(n, 0), 0); }

    int spatial_degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    int grade() const { return spatial_degree() + j; }
    bool is_constant() const { return j == 0 && spatial_degree() == 0; }

    bool operator==(const MultiIndex&) const = default;
};

/// Graded order: total degree first (parameter included), then the spatial
/// exponents lexicographically, then the parameter exponent. A monomial
/// well-order, so term maps have a meaningful leading (= last) element and
/// iteration order is reproducible.
struct TermOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        int ga = a.grade(), gb = b.grade();
        if (ga != gb) return ga < gb;
        if (a.e != b.e) return a.e < b.e;
        return a.j < b.j;
    }
};

} // namespace saddleform
