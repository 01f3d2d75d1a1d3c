#include "saddleform/series.hpp"

#include <algorithm>
#include <sstream>

namespace saddleform {

void require_same_ctx(const VarContext& a, const VarContext& b) {
    if (!(a == b)) throw ContextMismatch();
}

TruncatedSeries TruncatedSeries::variable(const VarContext& ctx, int i) {
    if (i < 0 || i >= ctx.n) throw UnknownVariable("#" + std::to_string(i));
    MultiIndex m = MultiIndex::zeros(ctx.n);
    m.e[i] = 1;
    return monomial(ctx, m, Gaussian(1));
}

TruncatedSeries TruncatedSeries::variable(const VarContext& ctx, const std::string& name) {
    if (name == ctx.tname) {
        MultiIndex m = MultiIndex::zeros(ctx.n);
        m.j = 1;
        return monomial(ctx, m, Gaussian(1));
    }
    return variable(ctx, ctx.index_of(name));
}

TruncatedSeries TruncatedSeries::monomial(const VarContext& ctx, const MultiIndex& m, const Gaussian& c) {
    if ((int)m.e.size() != ctx.n) throw InternalError("monomial arity does not match context");
    TruncatedSeries s(ctx);
    s.add_term(m, c);
    return s;
}

void TruncatedSeries::add_term(const MultiIndex& m, const Gaussian& c) {
    if (c.is_zero()) return;
    if (m.j > ctx_.J || m.spatial_degree() > ctx_.D) {
        exact_ = false;
        return;
    }
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int TruncatedSeries::spatial_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.spatial_degree());
    return d;
}

int TruncatedSeries::t_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.j);
    return d;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    r.exact_ = exact_;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    exact_ = exact_ && o.exact_;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    exact_ = exact_ && o.exact_;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ctx(a.ctx_, b.ctx_);
    TruncatedSeries r(a.ctx_);
    MultiIndex m;
    m.e.resize(a.ctx_.n);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.ctx_.n; ++i) m.e[i] = ma.e[i] + mb.e[i];
            m.j = ma.j + mb.j;
            r.add_term(m, ca * cb);
        }
    }
    r.exact_ = a.exact_ && b.exact_ && r.exact_;
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Gaussian& c) const {
    TruncatedSeries r(ctx_);
    if (!c.is_zero())
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    r.exact_ = exact_;
    return r;
}

TruncatedSeries TruncatedSeries::diff(int i) const {
    if (i < 0 || i >= ctx_.n) throw UnknownVariable("#" + std::to_string(i));
    TruncatedSeries r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.e[i] == 0) continue;
        MultiIndex d = m;
        d.e[i] -= 1;
        r.terms_.emplace(d, c * Gaussian(m.e[i]));
    }
    r.exact_ = exact_;
    return r;
}

TruncatedSeries TruncatedSeries::diff_t() const {
    TruncatedSeries r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.j == 0) continue;
        MultiIndex d = m;
        d.j -= 1;
        r.terms_.emplace(d, c * Gaussian(m.j));
    }
    r.exact_ = exact_;
    return r;
}

TruncatedSeries TruncatedSeries::pow_u(unsigned k) const {
    TruncatedSeries r = constant(ctx_, Gaussian(1));
    for (unsigned b = 0; b < k; ++b) r = r * *this;
    return r;
}

TruncatedSeries TruncatedSeries::exp_series() const {
    if (!constant_term().is_zero()) throw NonzeroConstantTerm();
    TruncatedSeries acc = constant(ctx_, Gaussian(1));
    TruncatedSeries power = acc;
    Rational invfact(1);
    // Every nonzero term of *this has grade >= 1, so the k-th power dies once
    // k exceeds D + J.
    for (int k = 1; k <= ctx_.D + ctx_.J; ++k) {
        power = power * *this;
        if (power.is_zero()) break;
        invfact /= Rational(k);
        acc += power.scaled(Gaussian(invfact));
    }
    acc.exact_ = false;
    return acc;
}

TruncatedSeries TruncatedSeries::subst(const std::vector<std::optional<TruncatedSeries>>& repl,
                                       const VarContext& target) const {
    if ((int)repl.size() != ctx_.n) throw NonlinearSubstitution("one assignment slot per spatial variable expected");
    if (target.D < ctx_.D || target.J < ctx_.J)
        throw ContextMismatch("substitution target truncates harder than the source");
    std::vector<TruncatedSeries> image;
    image.reserve(ctx_.n);
    for (int i = 0; i < ctx_.n; ++i) {
        if (repl[i]) {
            const TruncatedSeries& s = *repl[i];
            require_same_ctx(s.ctx(), target);
            if (s.spatial_degree() > 1 || s.t_degree() > 0 || !s.constant_term().is_zero())
                throw NonlinearSubstitution("assignments must be linear in the spatial variables with zero constant term");
            image.push_back(s);
        } else {
            image.push_back(TruncatedSeries::variable(target, target.index_of(ctx_.names[i])));
        }
    }
    TruncatedSeries out = zero(target);
    for (const auto& [m, c] : terms_) {
        TruncatedSeries term = constant(target, c);
        for (int i = 0; i < ctx_.n; ++i)
            if (m.e[i] > 0) term = term * image[i].pow_u((unsigned)m.e[i]);
        out += term.mul_t(m.j);
    }
    out.exact_ = out.exact_ && exact_;
    for (const auto& r : repl)
        if (r) out.exact_ = out.exact_ && r->exact();
    return out;
}

TruncatedSeries TruncatedSeries::t_component(int j) const {
    TruncatedSeries r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.j != j) continue;
        MultiIndex s = m;
        s.j = 0;
        r.terms_.emplace(s, c);
    }
    r.exact_ = exact_;
    return r;
}

TruncatedSeries TruncatedSeries::mul_t(int j) const {
    TruncatedSeries r(ctx_);
    for (const auto& [m, c] : terms_) {
        MultiIndex s = m;
        s.j += j;
        r.add_term(s, c);
    }
    r.exact_ = exact_ && r.exact_;
    return r;
}

namespace {

std::vector<std::complex<double>> power_table(std::complex<double> v, int maxexp) {
    std::vector<std::complex<double>> p(maxexp + 1);
    p[0] = {1.0, 0.0};
    for (int k = 1; k <= maxexp; ++k) p[k] = p[k - 1] * v;
    return p;
}

} // namespace

std::complex<double> TruncatedSeries::eval(const std::vector<std::complex<double>>& spatial,
                                           std::complex<double> tval) const {
    if ((int)spatial.size() != ctx_.n)
        throw MissingAssignment("expected " + std::to_string(ctx_.n) + " spatial values");
    std::vector<int> maxe(ctx_.n, 0);
    int maxj = 0;
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < ctx_.n; ++i) maxe[i] = std::max(maxe[i], m.e[i]);
        maxj = std::max(maxj, m.j);
    }
    std::vector<std::vector<std::complex<double>>> pows;
    pows.reserve(ctx_.n);
    for (int i = 0; i < ctx_.n; ++i) pows.push_back(power_table(spatial[i], maxe[i]));
    auto tpow = power_table(tval, maxj);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
        std::complex<double> v = c.to_complex();
        for (int i = 0; i < ctx_.n; ++i)
            if (m.e[i] > 0) v *= pows[i][m.e[i]];
        if (m.j > 0) v *= tpow[m.j];
        acc += v;
    }
    return acc;
}

std::complex<double> TruncatedSeries::eval(const std::map<std::string, std::complex<double>>& point) const {
    std::vector<std::complex<double>> spatial;
    spatial.reserve(ctx_.n);
    for (int i = 0; i < ctx_.n; ++i) {
        auto it = point.find(ctx_.names[i]);
        if (it == point.end()) throw MissingAssignment(ctx_.names[i]);
        spatial.push_back(it->second);
    }
    auto it = point.find(ctx_.tname);
    if (it == point.end()) throw MissingAssignment(ctx_.tname);
    return eval(spatial, it->second);
}

namespace {

// Alphabetical positions of all variables (parameter included): used both for
// the factor order inside a monomial and for tie-breaking between terms.
std::vector<int> alpha_permutation(const VarContext& ctx) {
    std::vector<std::pair<std::string, int>> named;
    for (int i = 0; i < ctx.n; ++i) named.emplace_back(ctx.names[i], i);
    named.emplace_back(ctx.tname, ctx.n);
    std::sort(named.begin(), named.end());
    std::vector<int> perm;
    perm.reserve(named.size());
    for (auto& [name, idx] : named) perm.push_back(idx);
    return perm;
}

std::vector<int> permuted_tuple(const MultiIndex& m, const std::vector<int>& perm, int n) {
    std::vector<int> t;
    t.reserve(perm.size());
    for (int p : perm) t.push_back(p == n ? m.j : m.e[p]);
    return t;
}

std::string monomial_str(const VarContext& ctx, const MultiIndex& m, const std::vector<int>& perm) {
    std::string s;
    for (int p : perm) {
        int e = (p == ctx.n) ? m.j : m.e[p];
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += (p == ctx.n) ? ctx.tname : ctx.names[p];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    auto perm = alpha_permutation(ctx_);
    // Ties within a grade go to the alphabetically earliest variables with
    // the highest exponents, the parameter counting last: x^2 before x*y
    // before y^2, and x before t. Encoded by negating the tie-break tuple.
    std::vector<int> tie_perm;
    for (int p : perm)
        if (p != ctx_.n) tie_perm.push_back(p);
    tie_perm.push_back(ctx_.n);
    std::vector<std::pair<std::vector<int>, const std::pair<const MultiIndex, Gaussian>*>> order;
    order.reserve(terms_.size());
    for (const auto& term : terms_) {
        std::vector<int> key{term.first.grade()};
        for (int p : tie_perm) key.push_back(p == ctx_.n ? -term.first.j : -term.first.e[p]);
        order.emplace_back(std::move(key), &term);
    }
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::string out;
    bool first = true;
    for (const auto& [key, term] : order) {
        const MultiIndex& m = term->first;
        const Gaussian& c = term->second;
        bool negative = c.real().is_zero() ? c.imag().is_negative() : c.real().is_negative();
        bool mixed = !c.real().is_zero() && !c.imag().is_zero();
        std::string mono = m.is_constant() ? "" : monomial_str(ctx_, m, perm);
        if (mono.empty() && mixed) {
            // A mixed complex constant carries signs on both parts; a bare
            // leading minus cannot stand for the whole value.
            if (first) {
                out += c.str();
                first = false;
            } else {
                out += negative ? " - (" + (-c).str() + ")" : " + (" + c.str() + ")";
            }
            continue;
        }
        Gaussian mag = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += mono;
        } else if (mag.real().is_zero() || mag.imag().is_zero()) {
            out += mag.str() + "*" + mono;
        } else {
            out += "(" + mag.str() + ")*" + mono;
        }
    }
    return out;
}

} // namespace saddleform
