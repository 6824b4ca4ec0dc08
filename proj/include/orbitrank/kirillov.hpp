#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "orbitrank/chevalley.hpp"
#include "orbitrank/linalg.hpp"

namespace orbitrank {

/// Linear functional on the algebra, as coefficients over the dual basis.
using Functional = std::vector<Rational>;

inline Functional zero_functional(const NilpotentLieAlgebra& L) {
    return Functional(L.dim(), make_rational(0));
}

/// Skew form B(x, y) = lambda([x, y]) as a matrix over the basis.
inline RationalMatrix skew_form(const NilpotentLieAlgebra& L, const Functional& lambda) {
    if (static_cast<int>(lambda.size()) != L.dim())
        throw std::invalid_argument("skew_form: functional has wrong dimension");
    const int n = L.dim();
    RationalMatrix B(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (L.coef[i][j] != 0) B(i, j) = L.coef[i][j] * lambda[L.target[i][j]];
    return B;
}

/// Coadjoint orbit dimension: the exact rank of the skew form.
inline int orbit_dimension(const NilpotentLieAlgebra& L, const Functional& lambda) {
    return rank_exact(skew_form(L, lambda));
}

/// Floating-point cross-check of the orbit dimension (never authoritative).
inline int orbit_dimension_float(const NilpotentLieAlgebra& L, const Functional& lambda,
                                 double rel_tol = 1e-8) {
    return rank_svd(skew_form(L, lambda), rel_tol);
}

inline int stabilizer_dimension(const NilpotentLieAlgebra& L, const Functional& lambda) {
    return L.dim() - orbit_dimension(L, lambda);
}

/// Functional supported on the first d layer-center dual vectors with the
/// given nonzero scalars.
inline Functional rankable_functional(const NilpotentLieAlgebra& L, int d,
                                      const std::vector<Rational>& scalars) {
    const int r = static_cast<int>(L.layers.size());
    if (d < 1 || d > r)
        throw std::invalid_argument("rankable_functional: d must lie in [1, " + std::to_string(r) +
                                    "]");
    if (static_cast<int>(scalars.size()) != d)
        throw std::invalid_argument("rankable_functional: expected " + std::to_string(d) +
                                    " scalars");
    for (const Rational& c : scalars)
        if (c == 0) throw std::invalid_argument("rankable_functional: scalars must be nonzero");
    Functional lambda = zero_functional(L);
    for (int i = 0; i < d; ++i) lambda[L.centers[i]] = scalars[i];
    return lambda;
}

/// Largest orbit dimension compatible with rank d: sum of the first d layer
/// dimensions minus d. Zero for d = 0.
inline int rank_threshold(const NilpotentLieAlgebra& L, int d) {
    const int r = static_cast<int>(L.layers.size());
    if (d < 0 || d > r)
        throw std::invalid_argument("rank_threshold: d must lie in [0, " + std::to_string(r) + "]");
    int t = 0;
    for (int i = 0; i < d; ++i) t += static_cast<int>(L.layers[i].size()) - 1;
    return t;
}

/// Smallest d with orbit_dimension <= rank_threshold(d). The zero functional
/// classifies as 0. Throws std::domain_error if even d = r does not bound the
/// orbit, which no functional of a valid tower algebra can reach.
inline int classify_rank(const NilpotentLieAlgebra& L, const Functional& lambda) {
    const int dim_orbit = orbit_dimension(L, lambda);
    const int r = static_cast<int>(L.layers.size());
    for (int d = 0; d <= r; ++d)
        if (dim_orbit <= rank_threshold(L, d)) return d;
    throw std::domain_error("classify_rank: orbit dimension exceeds the rank-r threshold");
}

/// Coadjoint action of exp(x): lambda composed with exp(-ad x), summed as the
/// finite series that nilpotency guarantees.
inline Functional coadjoint_action(const NilpotentLieAlgebra& L, const std::vector<Rational>& x,
                                   const Functional& lambda) {
    if (static_cast<int>(x.size()) != L.dim() || static_cast<int>(lambda.size()) != L.dim())
        throw std::invalid_argument("coadjoint_action: dimension mismatch");
    const int n = L.dim();

    RationalMatrix ad(n, n);
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (L.coef[i][j] != 0) ad(L.target[i][j], j) += x[i] * L.coef[i][j];
    }

    Functional result = lambda, term = lambda;
    for (int k = 1; k <= n; ++k) {
        Functional next(n, make_rational(0));
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            Rational s = make_rational(0);
            for (int i = 0; i < n; ++i)
                if (ad(i, j) != 0 && term[i] != 0) s += term[i] * ad(i, j);
            s /= -k;
            s.canonicalize();
            next[j] = s;
            nonzero = nonzero || s != 0;
        }
        term = std::move(next);
        if (!nonzero) break;
        for (int j = 0; j < n; ++j) result[j] += term[j];
    }
    return result;
}

}  // namespace orbitrank
