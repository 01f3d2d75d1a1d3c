#include "saddleform/forms.hpp"

#include <algorithm>

namespace saddleform {

namespace {

// Renders one named component of a form: single-term coefficients inline,
// anything longer parenthesized. Returns the piece without its sign; `neg`
// reports whether a leading minus was peeled off.
std::string coefficient_piece(const TruncatedSeries& s, const std::string& basis, bool& neg) {
    std::string body = s.str();
    neg = false;
    if (s.terms().size() == 1) {
        if (!body.empty() && body[0] == '-') {
            neg = true;
            body = body.substr(1);
        }
        if (body == "1") return basis;
        return body + "*" + basis;
    }
    return "(" + body + ")*" + basis;
}

std::string join_pieces(const std::vector<std::pair<bool, std::string>>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [neg, body] : pieces) {
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

} // namespace

OneForm::OneForm(const VarContext& ctx) : ctx_(ctx), comp_(ctx.n, TruncatedSeries::zero(ctx)) {}

void OneForm::set_component(int i, TruncatedSeries s) {
    require_same_ctx(ctx_, s.ctx());
    comp_[i] = std::move(s);
}

bool OneForm::is_zero() const {
    return std::all_of(comp_.begin(), comp_.end(), [](const TruncatedSeries& s) { return s.is_zero(); });
}

bool OneForm::exact() const {
    return std::all_of(comp_.begin(), comp_.end(), [](const TruncatedSeries& s) { return s.exact(); });
}

int OneForm::spatial_degree() const {
    int d = -1;
    for (const auto& s : comp_) d = std::max(d, s.spatial_degree());
    return d;
}

int OneForm::t_degree() const {
    int d = -1;
    for (const auto& s : comp_) d = std::max(d, s.t_degree());
    return d;
}

OneForm OneForm::operator-() const {
    OneForm r(ctx_);
    for (int i = 0; i < ctx_.n; ++i) r.comp_[i] = -comp_[i];
    return r;
}

OneForm& OneForm::operator+=(const OneForm& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (int i = 0; i < ctx_.n; ++i) comp_[i] += o.comp_[i];
    return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (int i = 0; i < ctx_.n; ++i) comp_[i] -= o.comp_[i];
    return *this;
}

OneForm operator*(const TruncatedSeries& s, const OneForm& f) {
    require_same_ctx(s.ctx(), f.ctx_);
    OneForm r(f.ctx_);
    for (int i = 0; i < f.ctx_.n; ++i) r.comp_[i] = s * f.comp_[i];
    return r;
}

OneForm OneForm::t_component(int j) const {
    OneForm r(ctx_);
    for (int i = 0; i < ctx_.n; ++i) r.comp_[i] = comp_[i].t_component(j);
    return r;
}

OneForm OneForm::mul_t(int j) const {
    OneForm r(ctx_);
    for (int i = 0; i < ctx_.n; ++i) r.comp_[i] = comp_[i].mul_t(j);
    return r;
}

std::string OneForm::str() const {
    std::vector<std::pair<bool, std::string>> pieces;
    for (int i = 0; i < ctx_.n; ++i) {
        if (comp_[i].is_zero()) continue;
        bool neg = false;
        std::string body = coefficient_piece(comp_[i], "d" + ctx_.names[i], neg);
        pieces.emplace_back(neg, body);
    }
    return join_pieces(pieces);
}

TwoForm::TwoForm(const VarContext& ctx)
    : ctx_(ctx), comp_(pair_count(ctx.n), TruncatedSeries::zero(ctx)) {}

int TwoForm::pair_index(int n, int i, int j) {
    // (0,1) (0,2) ... (0,n-1) (1,2) ...
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> TwoForm::pair_at(int n, int k) {
    for (int i = 0; i < n; ++i) {
        int row = n - 1 - i;
        if (k < row) return {i, i + 1 + k};
        k -= row;
    }
    throw InternalError("two-form component index out of range");
}

void TwoForm::accumulate(int i, int j, const TruncatedSeries& c) {
    if (i == j) return;
    if (i < j)
        comp_[pair_index(ctx_.n, i, j)] += c;
    else
        comp_[pair_index(ctx_.n, j, i)] -= c;
}

bool TwoForm::is_zero() const {
    return std::all_of(comp_.begin(), comp_.end(), [](const TruncatedSeries& s) { return s.is_zero(); });
}

bool TwoForm::exact() const {
    return std::all_of(comp_.begin(), comp_.end(), [](const TruncatedSeries& s) { return s.exact(); });
}

TwoForm TwoForm::operator-() const {
    TwoForm r(ctx_);
    for (std::size_t k = 0; k < comp_.size(); ++k) r.comp_[k] = -comp_[k];
    return r;
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (std::size_t k = 0; k < comp_.size(); ++k) comp_[k] += o.comp_[k];
    return *this;
}

TwoForm& TwoForm::operator-=(const TwoForm& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (std::size_t k = 0; k < comp_.size(); ++k) comp_[k] -= o.comp_[k];
    return *this;
}

TwoForm operator*(const TruncatedSeries& s, const TwoForm& f) {
    require_same_ctx(s.ctx(), f.ctx_);
    TwoForm r(f.ctx_);
    for (std::size_t k = 0; k < f.comp_.size(); ++k) r.comp_[k] = s * f.comp_[k];
    return r;
}

TwoForm TwoForm::t_component(int j) const {
    TwoForm r(ctx_);
    for (std::size_t k = 0; k < comp_.size(); ++k) r.comp_[k] = comp_[k].t_component(j);
    return r;
}

std::string TwoForm::str() const {
    std::vector<std::pair<bool, std::string>> pieces;
    for (std::size_t k = 0; k < comp_.size(); ++k) {
        if (comp_[k].is_zero()) continue;
        auto [i, j] = pair_at(ctx_.n, (int)k);
        std::string basis = "d" + ctx_.names[i] + "^d" + ctx_.names[j];
        bool neg = false;
        std::string body = coefficient_piece(comp_[k], basis, neg);
        pieces.emplace_back(neg, body);
    }
    return join_pieces(pieces);
}

ThreeForm::ThreeForm(const VarContext& ctx)
    : ctx_(ctx), comp_(triple_count(ctx.n), TruncatedSeries::zero(ctx)) {}

int ThreeForm::triple_index(int n, int i, int j, int k) {
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (a == i && b == j && c == k) return idx;
                ++idx;
            }
    throw InternalError("three-form component index out of range");
}

void ThreeForm::accumulate(int i, int j, int k, const TruncatedSeries& c) {
    int v[3] = {i, j, k};
    if (v[0] == v[1] || v[0] == v[2] || v[1] == v[2]) return;
    // Sort the three indices, tracking the permutation sign.
    bool flip = false;
    for (int pass = 0; pass < 2; ++pass)
        for (int a = 0; a < 2 - pass; ++a)
            if (v[a] > v[a + 1]) {
                std::swap(v[a], v[a + 1]);
                flip = !flip;
            }
    int idx = triple_index(ctx_.n, v[0], v[1], v[2]);
    if (flip)
        comp_[idx] -= c;
    else
        comp_[idx] += c;
}

bool ThreeForm::is_zero() const {
    return std::all_of(comp_.begin(), comp_.end(), [](const TruncatedSeries& s) { return s.is_zero(); });
}

std::string ThreeForm::str() const {
    std::vector<std::pair<bool, std::string>> pieces;
    int idx = 0;
    for (int a = 0; a < ctx_.n; ++a)
        for (int b = a + 1; b < ctx_.n; ++b)
            for (int c = b + 1; c < ctx_.n; ++c, ++idx) {
                if (comp_[idx].is_zero()) continue;
                std::string basis =
                    "d" + ctx_.names[a] + "^d" + ctx_.names[b] + "^d" + ctx_.names[c];
                bool neg = false;
                std::string body = coefficient_piece(comp_[idx], basis, neg);
                pieces.emplace_back(neg, body);
            }
    return join_pieces(pieces);
}

OneForm ext_d(const TruncatedSeries& f) {
    OneForm r(f.ctx());
    for (int i = 0; i < f.ctx().n; ++i) r.set_component(i, f.diff(i));
    return r;
}

TwoForm ext_d(const OneForm& f) {
    TwoForm r(f.ctx());
    for (int i = 0; i < f.ctx().n; ++i) {
        if (f.component(i).is_zero()) continue;
        for (int m = 0; m < f.ctx().n; ++m) {
            if (m == i) continue;
            r.accumulate(m, i, f.component(i).diff(m));
        }
    }
    return r;
}

TwoForm wedge11(const OneForm& a, const OneForm& b) {
    require_same_ctx(a.ctx(), b.ctx());
    TwoForm r(a.ctx());
    for (int i = 0; i < a.ctx().n; ++i) {
        if (a.component(i).is_zero()) continue;
        for (int j = 0; j < b.ctx().n; ++j) {
            if (i == j || b.component(j).is_zero()) continue;
            r.accumulate(i, j, a.component(i) * b.component(j));
        }
    }
    return r;
}

ThreeForm wedge12(const OneForm& a, const TwoForm& b) {
    require_same_ctx(a.ctx(), b.ctx());
    ThreeForm r(a.ctx());
    int n = a.ctx().n;
    for (int i = 0; i < n; ++i) {
        if (a.component(i).is_zero()) continue;
        for (int k = 0; k < b.component_count(); ++k) {
            if (b.component_at(k).is_zero()) continue;
            auto [p, q] = TwoForm::pair_at(n, k);
            r.accumulate(i, p, q, a.component(i) * b.component_at(k));
        }
    }
    return r;
}

TruncatedSeries saddle_product(const VarContext& ctx) {
    return TruncatedSeries::variable(ctx, 0) * TruncatedSeries::variable(ctx, 1);
}

OneForm saddle_differential(const VarContext& ctx) {
    return ext_d(saddle_product(ctx));
}

} // namespace saddleform
