#pragma once

#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitrank/linalg.hpp"
#include "orbitrank/root_system.hpp"
#include "orbitrank/tower.hpp"

namespace orbitrank {

/// Structure constants N(a,b) with [e_a, e_b] = N(a,b) e_{a+b} for the span of
/// the positive root vectors, |N(a,b)| = p+1 with p the chain-down length.
///
/// Signs: the extraspecial pair of each non-simple positive root (the
/// decomposition gamma = a + b whose first member is smallest in the canonical
/// order) gets a positive constant. Every other constant follows from the
/// standard identities N(-a,-b) = -N(a,b) and, for a+b+c = 0,
/// N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b), reduced against the
/// extraspecial pair of the same sum.
class ChevalleyConstants {
public:
    explicit ChevalleyConstants(const RootSystem& rs) : rs_(&rs) {
        const int m = rs.n_positive();
        n_.assign(m, std::vector<int>(m, 0));

        // Pairs are grouped by their sum; positives are indexed in height
        // order, so increasing target index is a valid induction order.
        std::vector<std::vector<std::pair<int, int>>> pairs(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const int g = rs.index_of(add(rs.positive(i), rs.positive(j)));
                if (g >= 0 && g < m) pairs[g].emplace_back(i, j);
            }

        for (int g = 0; g < m; ++g) {
            if (pairs[g].empty()) continue;
            const auto [x1, y1] = pairs[g].front();  // extraspecial: minimal first member
            set(x1, y1, rs.chain_down(rs.positive(x1), rs.positive(y1)) + 1);
            for (std::size_t k = 1; k < pairs[g].size(); ++k) {
                const auto [xi, yi] = pairs[g][k];
                derive(g, x1, y1, xi, yi);
            }
        }
    }

    /// N for two positive roots given by their indices; 0 when the sum is not
    /// a root.
    int coefficient(int i, int j) const {
        if (i == j) return 0;
        return i < j ? n_[i][j] : -n_[j][i];
    }

private:
    void set(int i, int j, int v) { n_[i][j] = v; }

    void derive(int g, int x1, int y1, int xi, int yi) {
        const RootSystem& rs = *rs_;
        const Root &a1 = rs.positive(x1), &b1 = rs.positive(y1);
        const Root &a = rs.positive(xi), &b = rs.positive(yi);

        const Rational na = rs.pairing(a, a), nb = rs.pairing(b, b);
        const Rational ng = rs.pairing(rs.positive(g), rs.positive(g));
        const Rational nb1 = rs.pairing(b1, b1);

        Rational acc = make_rational(0);
        bool any = false;
        if (const int d = positive_index(sub(a, a1)); d >= 0) {
            const Rational nd = rs.pairing(rs.positive(d), rs.positive(d));
            acc += -(nd / na) * coefficient(d, x1) * coefficient(d, yi);
            any = true;
        }
        if (const int e = positive_index(sub(b, a1)); e >= 0) {
            const Rational ne = rs.pairing(rs.positive(e), rs.positive(e));
            acc += (ne / nb) * coefficient(e, x1) * coefficient(e, xi);
            any = true;
        }
        internal_check(any, "special pair unreachable from its extraspecial pair");

        Rational val = acc * ng / (nb1 * coefficient(x1, y1));
        val.canonicalize();
        internal_check(val.get_den() == 1, "structure constant not integral");
        const int v = static_cast<int>(val.get_num().get_si());
        internal_check(v != 0, "structure constant vanished for a root sum");
        internal_check(std::abs(v) == rs.chain_down(a, b) + 1,
                       "structure constant magnitude differs from chain length");
        set(xi, yi, v);
    }

    int positive_index(const Root& x) const {
        if (!all_nonneg(x) || height(x) == 0) return -1;
        const int idx = rs_->index_of(x);
        return idx < rs_->n_positive() ? idx : -1;
    }

    const RootSystem* rs_;
    std::vector<std::vector<int>> n_;
};

/// The nilpotent algebra spanned by the Heisenberg layers of a tower: root
/// vectors for every positive root supported on gamma, with integral
/// structure constants and the layer decomposition.
struct NilpotentLieAlgebra {
    DynkinType ambient{};
    std::vector<Root> basis;               // layer by layer, canonical order inside a layer
    std::vector<std::vector<int>> layers;  // basis indices per tower step
    std::vector<int> centers;              // basis index of each layer's highest root
    std::vector<std::vector<int>> coef;    // antisymmetric structure constants
    std::vector<std::vector<int>> target;  // basis index of the sum root, -1 if no bracket

    int dim() const { return static_cast<int>(basis.size()); }
    int layer_of(int idx) const {
        for (std::size_t l = 0; l < layers.size(); ++l)
            for (int i : layers[l])
                if (i == idx) return static_cast<int>(l);
        return -1;
    }
};

inline NilpotentLieAlgebra build_nilradical(const RootSystem& rs, const HeisenbergTower& tw) {
    ChevalleyConstants cc(rs);

    NilpotentLieAlgebra L;
    L.ambient = rs.type();
    std::map<Root, int> pos_of;
    for (std::size_t s = 0; s < tw.steps.size(); ++s) {
        std::vector<int> layer;
        for (const Root& a : tw.steps[s].layer) {
            layer.push_back(L.dim());
            pos_of[a] = L.dim();
            L.basis.push_back(a);
        }
        L.layers.push_back(layer);
        L.centers.push_back(pos_of.at(tw.steps[s].highest));
    }

    // The layers must exhaust exactly the positive roots supported on gamma.
    {
        std::vector<int> gamma_idx;
        for (const Root& g : tw.gamma)
            for (int i = 0; i < rs.rank(); ++i)
                if (g == rs.simple(i)) gamma_idx.push_back(i);
        int supported = 0;
        for (int i = 0; i < rs.n_positive(); ++i) {
            const Root& a = rs.positive(i);
            bool on_gamma = false;
            for (int gi : gamma_idx) on_gamma = on_gamma || a[gi] != 0;
            if (on_gamma) {
                ++supported;
                internal_check(pos_of.count(a) != 0, "gamma-supported root missing from the layers");
            }
        }
        internal_check(supported == L.dim(), "layers contain a root without gamma support");
    }

    const int n = L.dim();
    L.coef.assign(n, std::vector<int>(n, 0));
    L.target.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Root sum = add(L.basis[i], L.basis[j]);
            const int idx = rs.index_of(sum);
            if (idx < 0) continue;
            internal_check(idx < rs.n_positive(), "bracket left the positive span");
            auto it = pos_of.find(sum);
            internal_check(it != pos_of.end(), "bracket left the gamma-supported span");
            L.coef[i][j] = cc.coefficient(rs.index_of(L.basis[i]), rs.index_of(L.basis[j]));
            L.target[i][j] = it->second;
        }
    return L;
}

/// [x, y] for coefficient vectors over the basis.
inline std::vector<Rational> bracket(const NilpotentLieAlgebra& L, const std::vector<Rational>& x,
                                     const std::vector<Rational>& y) {
    const int n = L.dim();
    std::vector<Rational> z(n, make_rational(0));
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (L.coef[i][j] == 0 || y[j] == 0) continue;
            z[L.target[i][j]] += x[i] * y[j] * L.coef[i][j];
        }
    }
    return z;
}

/// Violations of the two-step Heisenberg structure, one message per failure.
/// Empty result means every layer is a Heisenberg algebra: brackets inside a
/// layer land on its center, the center is killed, and the induced skew form
/// on layer/center is nondegenerate.
inline std::vector<std::string> heisenberg_violations(const NilpotentLieAlgebra& L) {
    std::vector<std::string> bad;
    for (std::size_t l = 0; l < L.layers.size(); ++l) {
        const auto& layer = L.layers[l];
        const int c = L.centers[l];
        const std::string tag = "layer " + std::to_string(l + 1) + " of " + to_string(L.ambient);
        for (int u : layer) {
            if (L.coef[c][u] != 0) bad.push_back(tag + ": center acts nontrivially");
            for (int v : layer)
                if (L.coef[u][v] != 0 && L.target[u][v] != c)
                    bad.push_back(tag + ": bracket escapes the center line");
        }
        std::vector<int> sympl;
        for (int u : layer)
            if (u != c) sympl.push_back(u);
        RationalMatrix S(static_cast<int>(sympl.size()), static_cast<int>(sympl.size()));
        for (std::size_t i = 0; i < sympl.size(); ++i)
            for (std::size_t j = 0; j < sympl.size(); ++j)
                if (L.target[sympl[i]][sympl[j]] == c)
                    S(static_cast<int>(i), static_cast<int>(j)) =
                        make_rational(L.coef[sympl[i]][sympl[j]]);
        if (rank_exact(S) != static_cast<int>(sympl.size()))
            bad.push_back(tag + ": induced skew form is degenerate");
    }
    return bad;
}

inline bool verify_heisenberg(const NilpotentLieAlgebra& L) {
    return heisenberg_violations(L).empty();
}

/// Violations of the tower action: for m < l, layer l must map layer m into
/// itself and kill its center.
inline std::vector<std::string> tower_action_violations(const NilpotentLieAlgebra& L) {
    std::vector<std::string> bad;
    for (std::size_t m = 0; m < L.layers.size(); ++m) {
        std::set<int> inside(L.layers[m].begin(), L.layers[m].end());
        for (std::size_t l = m + 1; l < L.layers.size(); ++l) {
            const std::string tag = "layers " + std::to_string(l + 1) + " on " +
                                    std::to_string(m + 1) + " of " + to_string(L.ambient);
            for (int x : L.layers[l]) {
                if (L.coef[x][L.centers[m]] != 0) bad.push_back(tag + ": center not killed");
                for (int y : L.layers[m])
                    if (L.coef[x][y] != 0 && inside.count(L.target[x][y]) == 0)
                        bad.push_back(tag + ": action leaves the layer");
            }
        }
    }
    return bad;
}

inline bool verify_tower_action(const NilpotentLieAlgebra& L) {
    return tower_action_violations(L).empty();
}

/// Brute-force Jacobi check over all basis triples. Returns one message per
/// violating triple (empty - identity holds).
inline std::vector<std::string> jacobi_violations(const NilpotentLieAlgebra& L,
                                                  std::size_t max_reported = 5) {
    std::vector<std::string> bad;
    const int n = L.dim();
    const auto term = [&](int i, int j, int k) -> long {
        if (L.coef[i][j] == 0) return 0;
        const int t = L.target[i][j];
        if (L.coef[t][k] == 0) return 0;
        return static_cast<long>(L.coef[i][j]) * L.coef[t][k];
    };
    for (int i = 0; i < n && bad.size() < max_reported; ++i)
        for (int j = i + 1; j < n && bad.size() < max_reported; ++j)
            for (int k = j + 1; k < n; ++k) {
                const long s = term(i, j, k) + term(j, k, i) + term(k, i, j);
                if (s != 0) {
                    bad.push_back("jacobi fails on triple (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ") of " +
                                  to_string(L.ambient));
                    if (bad.size() >= max_reported) break;
                }
            }
    return bad;
}

inline bool verify_jacobi(const NilpotentLieAlgebra& L) { return jacobi_violations(L).empty(); }

}  // namespace orbitrank
