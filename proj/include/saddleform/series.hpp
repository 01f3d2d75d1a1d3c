#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "saddleform/context.hpp"
#include "saddleform/exact.hpp"

namespace saddleform {

/// Polynomial jet in the spatial variables and the deformation parameter,
/// truncated at spatial degree D and parameter order J. Coefficients are
/// exact Gaussian rationals; stored coefficients are never zero.
///
/// exact() is true while the object is a genuine polynomial: it flips to
/// false as soon as a nonzero product term falls outside the truncation
/// bounds, or the object came out of exp(). Arithmetic propagates the flag
/// conservatively (false wins).
class TruncatedSeries {
public:
    using TermMap = std::map<MultiIndex, Gaussian, TermOrder>;

    static TruncatedSeries zero(const VarContext& ctx) { return TruncatedSeries(ctx); }

    static TruncatedSeries constant(const VarContext& ctx, const Gaussian& c) {
        TruncatedSeries s(ctx);
        s.add_term(MultiIndex::zeros(ctx.n), c);
        return s;
    }

    /// Degree-one monomial for spatial variable i.
    static TruncatedSeries variable(const VarContext& ctx, int i);

    /// Spatial variable or the parameter, looked up by name.
    static TruncatedSeries variable(const VarContext& ctx, const std::string& name);

    static TruncatedSeries monomial(const VarContext& ctx, const MultiIndex& m, const Gaussian& c);

    const VarContext& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool exact() const { return exact_; }
    bool is_zero() const { return terms_.empty(); }

    /// Highest spatial total degree among stored terms; -1 for the zero series.
    int spatial_degree() const;
    /// Highest parameter exponent among stored terms; -1 for the zero series.
    int t_degree() const;

    Gaussian coeff(const MultiIndex& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Gaussian() : it->second;
    }
    Gaussian constant_term() const { return coeff(MultiIndex::zeros(ctx_.n)); }

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries scaled(const Gaussian& c) const;

    /// Partial derivative with respect to spatial variable i.
    TruncatedSeries diff(int i) const;
    /// Partial derivative with respect to the parameter.
    TruncatedSeries diff_t() const;

    TruncatedSeries pow_u(unsigned k) const;

    /// exp of a series with zero constant term. The result is marked inexact:
    /// it stands for an infinite object.
    TruncatedSeries exp_series() const;

    /// Linear change of variables. repl[i], when present, replaces spatial
    /// variable i and must be a spatial-degree-<=1, parameter-free polynomial
    /// with zero constant term over the target context; absent entries map the
    /// variable to the target variable of the same name. The parameter passes
    /// through unchanged. Target bounds must dominate the source bounds, so
    /// the composition is loss-free.
    TruncatedSeries subst(const std::vector<std::optional<TruncatedSeries>>& repl,
                          const VarContext& target) const;

    /// Coefficient of t^j, reindexed to parameter exponent zero.
    TruncatedSeries t_component(int j) const;
    /// Multiply by t^j.
    TruncatedSeries mul_t(int j) const;

    /// Evaluate at a point, summing in storage order with precomputed powers,
    /// so repeated runs are bit-identical.
    std::complex<double> eval(const std::vector<std::complex<double>>& spatial,
                              std::complex<double> tval) const;
    /// Same, with the point given by variable name (parameter included).
    std::complex<double> eval(const std::map<std::string, std::complex<double>>& point) const;

    /// Canonical text: terms in ascending graded order (ties broken through
    /// the alphabetical variable tuple), factors alphabetical, coefficients
    /// rendered exactly. Output re-parses to the same series.
    std::string str() const;

    /// Structural equality of term maps; the exactness flag is metadata and
    /// does not participate.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    void mark_inexact() { exact_ = false; }

private:
    explicit TruncatedSeries(const VarContext& ctx) : ctx_(ctx) {}

    // Accumulate c on monomial m, dropping out-of-bounds terms and recording
    // the loss in the exactness flag.
    void add_term(const MultiIndex& m, const Gaussian& c);

    VarContext ctx_;
    TermMap terms_;
    bool exact_ = true;
};

void require_same_ctx(const VarContext& a, const VarContext& b);

} // namespace saddleform
