#pragma once

#include <string>
#include <utility>
#include <vector>

#include "saddleform/series.hpp"

namespace saddleform {

/// Basis covectors are ordered by their variable index (dx < dy < dz1 < ...),
/// and every product basis is stored with strictly increasing indices. All
/// wedge signs in the library reduce to this one convention.

class OneForm {
public:
    explicit OneForm(const VarContext& ctx);

    static OneForm zero(const VarContext& ctx) { return OneForm(ctx); }

    const VarContext& ctx() const { return ctx_; }
    const TruncatedSeries& component(int i) const { return comp_[i]; }
    void set_component(int i, TruncatedSeries s);

    bool is_zero() const;
    bool exact() const;
    int spatial_degree() const;
    int t_degree() const;

    OneForm operator-() const;
    OneForm& operator+=(const OneForm& o);
    OneForm& operator-=(const OneForm& o);
    friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
    friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }

    /// Scalar times form.
    friend OneForm operator*(const TruncatedSeries& s, const OneForm& f);

    OneForm t_component(int j) const;
    OneForm mul_t(int j) const;

    friend bool operator==(const OneForm& a, const OneForm& b) {
        return a.ctx_ == b.ctx_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const OneForm& a, const OneForm& b) { return !(a == b); }

    /// "(y + t*x^2*y^2)*dx + x*dy"; "0" for the zero form. Re-parses to the
    /// same form.
    std::string str() const;

private:
    VarContext ctx_;
    std::vector<TruncatedSeries> comp_;
};

class TwoForm {
public:
    explicit TwoForm(const VarContext& ctx);

    static TwoForm zero(const VarContext& ctx) { return TwoForm(ctx); }

    static int pair_count(int n) { return n * (n - 1) / 2; }
    /// Position of dv_i ^ dv_j (i < j) in the component vector.
    static int pair_index(int n, int i, int j);
    static std::pair<int, int> pair_at(int n, int k);

    const VarContext& ctx() const { return ctx_; }
    const TruncatedSeries& component(int i, int j) const {
        return comp_[pair_index(ctx_.n, i, j)];
    }
    const TruncatedSeries& component_at(int k) const { return comp_[k]; }
    int component_count() const { return (int)comp_.size(); }

    /// Accumulate c on dv_i ^ dv_j with i, j in any order; equal indices are
    /// a no-op, reversed indices flip the sign.
    void accumulate(int i, int j, const TruncatedSeries& c);

    bool is_zero() const;
    bool exact() const;

    TwoForm operator-() const;
    TwoForm& operator+=(const TwoForm& o);
    TwoForm& operator-=(const TwoForm& o);
    friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
    friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
    friend TwoForm operator*(const TruncatedSeries& s, const TwoForm& f);

    TwoForm t_component(int j) const;

    friend bool operator==(const TwoForm& a, const TwoForm& b) {
        return a.ctx_ == b.ctx_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const TwoForm& a, const TwoForm& b) { return !(a == b); }

    std::string str() const;

private:
    VarContext ctx_;
    std::vector<TruncatedSeries> comp_;
};

class ThreeForm {
public:
    explicit ThreeForm(const VarContext& ctx);

    static ThreeForm zero(const VarContext& ctx) { return ThreeForm(ctx); }

    static int triple_count(int n) { return n * (n - 1) * (n - 2) / 6; }
    static int triple_index(int n, int i, int j, int k);

    const VarContext& ctx() const { return ctx_; }
    const TruncatedSeries& component(int i, int j, int k) const {
        return comp_[triple_index(ctx_.n, i, j, k)];
    }
    int component_count() const { return (int)comp_.size(); }

    /// Accumulate with sign sorting; repeated indices are a no-op.
    void accumulate(int i, int j, int k, const TruncatedSeries& c);

    bool is_zero() const;

    friend bool operator==(const ThreeForm& a, const ThreeForm& b) {
        return a.ctx_ == b.ctx_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const ThreeForm& a, const ThreeForm& b) { return !(a == b); }

    std::string str() const;

private:
    VarContext ctx_;
    std::vector<TruncatedSeries> comp_;
};

/// Exterior derivative in the spatial variables only; the parameter is inert
/// and no dt component ever appears.
OneForm ext_d(const TruncatedSeries& f);
TwoForm ext_d(const OneForm& f);

TwoForm wedge11(const OneForm& a, const OneForm& b);
ThreeForm wedge12(const OneForm& a, const TwoForm& b);

/// Product of the two saddle coordinates (whatever their names).
TruncatedSeries saddle_product(const VarContext& ctx);
/// Its differential v1*dv0 + v0*dv1.
OneForm saddle_differential(const VarContext& ctx);

} // namespace saddleform
