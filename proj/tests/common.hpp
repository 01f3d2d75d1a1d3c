#pragma once

#include <complex>
#include <random>

#include "saddleform/cycle.hpp"
#include "saddleform/forms.hpp"
#include "saddleform/polygcd.hpp"
#include "saddleform/series.hpp"

namespace sftest {

using namespace saddleform;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

inline Rational rand_rational(Rng& rng) {
    return Rational(rand_int(rng, -9, 9), rand_int(rng, 1, 9));
}

inline Gaussian rand_gaussian(Rng& rng, bool real_only = false) {
    Rational re = rand_rational(rng);
    if (real_only || rand_int(rng, 0, 2) == 0) return Gaussian(re);
    return Gaussian(re, rand_rational(rng));
}

inline Gaussian rand_gaussian_nonzero(Rng& rng, bool real_only = false) {
    for (;;) {
        Gaussian g = rand_gaussian(rng, real_only);
        if (!g.is_zero()) return g;
    }
}

inline MultiIndex rand_index(Rng& rng, const VarContext& ctx, int maxdeg, int maxj) {
    for (;;) {
        MultiIndex m = MultiIndex::zeros(ctx.n);
        for (int i = 0; i < ctx.n; ++i) m.e[i] = rand_int(rng, 0, maxdeg);
        if (m.spatial_degree() > maxdeg) continue;
        m.j = rand_int(rng, 0, maxj);
        return m;
    }
}

inline TruncatedSeries rand_series(Rng& rng, const VarContext& ctx, int maxdeg, int maxj,
                                   int nterms, bool real_only = false) {
    TruncatedSeries s = TruncatedSeries::zero(ctx);
    for (int k = 0; k < nterms; ++k) {
        MultiIndex m = rand_index(rng, ctx, maxdeg, maxj);
        s += TruncatedSeries::monomial(ctx, m, rand_gaussian(rng, real_only));
    }
    return s;
}

inline TruncatedSeries rand_series_nonzero(Rng& rng, const VarContext& ctx, int maxdeg, int maxj,
                                           int nterms, bool real_only = false) {
    for (;;) {
        TruncatedSeries s = rand_series(rng, ctx, maxdeg, maxj, nterms, real_only);
        if (!s.is_zero()) return s;
    }
}

inline OneForm rand_oneform(Rng& rng, const VarContext& ctx, int maxdeg, int maxj, int nterms) {
    OneForm f(ctx);
    for (int i = 0; i < ctx.n; ++i)
        f.set_component(i, rand_series(rng, ctx, maxdeg, maxj, nterms));
    return f;
}

inline std::complex<double> rand_point(Rng& rng, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    return {d(rng), d(rng)};
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) < tol;
}

// Largest monomial dividing both inputs, found by exhaustive search over the
// bounded exponent box. Independent check for the gcd of monomials.
inline MultiIndex brute_monomial_gcd(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex g = MultiIndex::zeros((int)a.e.size());
    MultiIndex best = g;
    // The componentwise minimum dominates every common divisor; scanning the
    // whole box and keeping the largest reproduces it the slow way.
    std::vector<int> cap(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) cap[i] = std::min(a.e[i], b.e[i]);
    int capj = std::min(a.j, b.j);
    std::vector<int> cur(a.e.size(), 0);
    for (;;) {
        for (int j = 0; j <= capj; ++j) {
            MultiIndex cand(cur, j);
            if (TermOrder{}(best, cand)) best = cand;
        }
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == cap[i]) cur[i++] = 0;
        if (i == cur.size()) break;
        ++cur[i];
    }
    return best;
}

} // namespace sftest
