#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitrank/dynkin.hpp"
#include "orbitrank/rational.hpp"

namespace orbitrank {

/// A root, stored as its integer coordinate vector over the simple roots.
using Root = std::vector<int>;

inline int height(const Root& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline Root negated(const Root& a) {
    Root b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = -a[i];
    return b;
}

inline Root add(const Root& a, const Root& b) {
    Root c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline Root sub(const Root& a, const Root& b) {
    Root c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline bool all_nonneg(const Root& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c >= 0; });
}

inline bool all_nonpos(const Root& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c <= 0; });
}

/// a dominates b when a - b is coordinatewise nonnegative.
inline bool dominates(const Root& a, const Root& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

/// Canonical total order on roots: height first, then lexicographically with
/// the larger leading coordinate first (so the simple roots come out in index
/// order). This single order fixes basis layouts and the structure constant
/// signs, see docs/conventions.md.
inline bool root_less(const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
}

inline void internal_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + msg);
}

namespace detail {

struct CartanData {
    std::vector<std::vector<int>> cartan;  // cartan[j][i] = 2(a_i,a_j)/(a_j,a_j)
    std::vector<Rational> norm;            // (a_i, a_i), long roots normalized to 2
};

/// Simple-root data in Bourbaki numbering (0-based indices internally).
inline CartanData make_cartan(DynkinType t) {
    const int n = t.rank;
    std::vector<std::pair<int, int>> edges;
    std::vector<Rational> norm(n, make_rational(2));

    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            norm[n - 1] = make_rational(1);
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            for (int i = 0; i + 1 < n; ++i) norm[i] = make_rational(1);
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 3, n - 1);
            break;
        case Family::E:
            // Branch node a4 carries a2; the long arm is a1-a3-a4-a5-...
            edges = {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}};
            for (int i = 6; i < n; ++i) edges.emplace_back(i - 1, i);
            break;
        case Family::F:
            edges = {{0, 1}, {1, 2}, {2, 3}};
            norm[2] = norm[3] = make_rational(1);
            break;
        case Family::G:
            edges = {{0, 1}};
            norm[0] = make_rational(2, 3);
            break;
    }

    std::vector<std::vector<Rational>> form(n, std::vector<Rational>(n, make_rational(0)));
    for (int i = 0; i < n; ++i) form[i][i] = norm[i];
    for (auto [i, j] : edges) {
        const Rational v = -std::max(norm[i], norm[j]) / 2;
        form[i][j] = v;
        form[j][i] = v;
    }

    CartanData d;
    d.norm = norm;
    d.cartan.assign(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            Rational c = 2 * form[i][j] / norm[j];
            c.canonicalize();
            internal_check(c.get_den() == 1, "Cartan entry not integral");
            d.cartan[j][i] = static_cast<int>(c.get_num().get_si());
        }
    return d;
}

}  // namespace detail

/// Split simple root system: Cartan data, invariant form, and the full set of
/// roots enumerated by closing the simple roots under simple reflections.
class RootSystem {
public:
    explicit RootSystem(DynkinType t) : type_(t), rank_(t.rank) {
        if (!is_valid(t)) throw std::invalid_argument("invalid type " + to_string(t));
        auto data = detail::make_cartan(t);
        cartan_ = std::move(data.cartan);
        norm_ = std::move(data.norm);
        form_.assign(rank_, std::vector<Rational>(rank_, make_rational(0)));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) form_[i][j] = cartan_[j][i] * norm_[j] / 2;
        enumerate();
    }

    DynkinType type() const { return type_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    /// All roots; positives first (canonical order), then their negatives in
    /// the matching order.
    const std::vector<Root>& roots() const { return roots_; }
    int n_positive() const { return n_pos_; }
    const Root& positive(int i) const { return roots_[i]; }

    Root simple(int i) const {
        Root a(rank_, 0);
        a[i] = 1;
        return a;
    }

    bool contains(const Root& a) const { return index_.count(a) != 0; }

    /// Index into roots(), or -1 when absent.
    int index_of(const Root& a) const {
        auto it = index_.find(a);
        return it == index_.end() ? -1 : it->second;
    }

    /// Invariant symmetric form, normalized so long roots have (a, a) = 2.
    Rational pairing(const Root& a, const Root& b) const {
        Rational s = make_rational(0);
        for (int i = 0; i < rank_; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < rank_; ++j)
                if (b[j] != 0) s += a[i] * b[j] * form_[i][j];
        }
        return s;
    }

    /// Integer pairing of a against the j-th simple coroot.
    int coroot_pairing(const Root& a, int j) const {
        long s = 0;
        for (int i = 0; i < rank_; ++i) s += static_cast<long>(cartan_[j][i]) * a[i];
        return static_cast<int>(s);
    }

    /// Simple reflection s_j.
    Root reflect(const Root& a, int j) const {
        Root b = a;
        b[j] -= coroot_pairing(a, j);
        return b;
    }

    /// Chain-down length: max k with b - k*a still a root.
    int chain_down(const Root& a, const Root& b) const {
        int p = 0;
        Root x = sub(b, a);
        while (contains(x)) {
            ++p;
            x = sub(x, a);
        }
        return p;
    }

    /// The unique positive root of maximal height; dominates every root
    /// coordinatewise. Throws std::domain_error on a reducible system.
    Root highest_root() const;

private:
    void enumerate() {
        std::set<Root> seen;
        std::queue<Root> work;
        for (int i = 0; i < rank_; ++i) {
            seen.insert(simple(i));
            work.push(simple(i));
        }
        while (!work.empty()) {
            Root a = work.front();
            work.pop();
            for (int j = 0; j < rank_; ++j) {
                Root b = reflect(a, j);
                if (seen.insert(b).second) work.push(b);
            }
        }
        std::vector<Root> pos;
        for (const Root& a : seen) {
            internal_check(all_nonneg(a) || all_nonpos(a), "mixed-sign root");
            if (all_nonneg(a)) pos.push_back(a);
        }
        std::sort(pos.begin(), pos.end(), root_less);
        n_pos_ = static_cast<int>(pos.size());
        roots_ = pos;
        for (const Root& a : pos) roots_.push_back(negated(a));
        for (int i = 0; i < static_cast<int>(roots_.size()); ++i) index_[roots_[i]] = i;
    }

    DynkinType type_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Rational> norm_;
    std::vector<std::vector<Rational>> form_;
    std::vector<Root> roots_;
    int n_pos_ = 0;
    std::map<Root, int> index_;
};

/// A subset of an ambient root system that is itself a root system: roots kept
/// in ambient coordinates together with a base of indecomposable positives.
struct Subsystem {
    std::vector<Root> roots;  // positives (canonical order), then negatives
    std::vector<Root> base;   // canonical order

    std::vector<Root> positives() const {
        std::vector<Root> p;
        for (const Root& a : roots)
            if (all_nonneg(a)) p.push_back(a);
        return p;
    }
};

/// The whole system viewed as a subsystem of itself.
inline Subsystem as_subsystem(const RootSystem& rs) {
    Subsystem s;
    s.roots = rs.roots();
    for (int i = 0; i < rs.rank(); ++i) s.base.push_back(rs.simple(i));
    return s;
}

namespace detail {

inline Root dominant_root(const std::vector<Root>& positives) {
    if (positives.empty()) throw std::domain_error("highest root: empty system");
    int hmax = 0;
    for (const Root& a : positives) hmax = std::max(hmax, height(a));
    for (const Root& a : positives) {
        if (height(a) != hmax) continue;
        bool dom = true;
        for (const Root& b : positives)
            if (!dominates(a, b)) {
                dom = false;
                break;
            }
        if (dom) return a;
    }
    throw std::domain_error("highest root: system is reducible (no dominant root)");
}

}  // namespace detail

inline Root RootSystem::highest_root() const {
    std::vector<Root> pos(roots_.begin(), roots_.begin() + n_pos_);
    return detail::dominant_root(pos);
}

inline Root highest_root(const Subsystem& s) { return detail::dominant_root(s.positives()); }

/// Splits a closed, negation-symmetric set of roots into its irreducible
/// components. Each component carries its base (the indecomposable positives)
/// and its roots in ambient coordinates. Components are ordered by their
/// canonically smallest base root.
inline std::vector<Subsystem> irreducible_components(const std::vector<Root>& roots,
                                                     const RootSystem& rs) {
    if (roots.empty()) return {};
    std::set<Root> rset(roots.begin(), roots.end());
    for (const Root& a : roots)
        if (!rset.count(negated(a)))
            throw std::invalid_argument("irreducible_components: set not closed under negation");

    std::vector<Root> pos;
    for (const Root& a : roots)
        if (all_nonneg(a)) pos.push_back(a);
    std::sort(pos.begin(), pos.end(), root_less);
    std::set<Root> pset(pos.begin(), pos.end());

    // Base: positives that are not the sum of two positives of the set.
    std::vector<Root> base;
    for (const Root& p : pos) {
        bool decomposable = false;
        for (const Root& q : pos) {
            if (q == p) continue;
            if (!dominates(p, q)) continue;
            Root d = sub(p, q);
            if (pset.count(d)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) base.push_back(p);
    }
    internal_check(!base.empty(), "component base empty");

    // Union-find over the base by non-orthogonality.
    const int m = static_cast<int>(base.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (rs.pairing(base[i], base[j]) != 0) parent[find(i)] = find(j);

    std::map<int, Subsystem> comp;  // representative -> component under construction
    for (int i = 0; i < m; ++i) comp[find(i)].base.push_back(base[i]);

    for (const Root& p : pos) {
        int home = -1;
        for (int i = 0; i < m; ++i) {
            if (rs.pairing(p, base[i]) == 0) continue;
            const int rep = find(i);
            internal_check(home == -1 || home == rep, "root touches two components");
            home = rep;
        }
        internal_check(home != -1, "root orthogonal to the whole base");
        comp[home].roots.push_back(p);
    }

    std::vector<Subsystem> out;
    for (auto& [rep, s] : comp) {
        std::sort(s.base.begin(), s.base.end(), root_less);
        std::sort(s.roots.begin(), s.roots.end(), root_less);
        std::vector<Root> negs;
        for (const Root& p : s.roots) negs.push_back(negated(p));
        s.roots.insert(s.roots.end(), negs.begin(), negs.end());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const Subsystem& a, const Subsystem& b) { return root_less(a.base[0], b.base[0]); });
    return out;
}

/// Identifies the Cartan type of an irreducible subsystem from the Cartan
/// matrix of its base. Coincidences are canonicalized: a rank-3 simply-laced
/// path is reported as A3 (covers D3), and the rank-2 double-edge system is
/// named by the Bourbaki length pattern along the canonically ordered base
/// (last root short: B2, last root long: C2). Throws std::domain_error when
/// the diagram matches no finite type and std::invalid_argument when the
/// input is not irreducible.
inline DynkinType classify_type(const Subsystem& s, const RootSystem& rs) {
    const auto& base = s.base;
    const int m = static_cast<int>(base.size());
    if (m == 0) throw std::invalid_argument("classify_type: empty base");
    if (m == 1) return {Family::A, 1};

    std::vector<Rational> norm(m);
    for (int i = 0; i < m; ++i) norm[i] = rs.pairing(base[i], base[i]);

    std::vector<std::vector<int>> mult(m, std::vector<int>(m, 0));
    std::vector<int> deg(m, 0);
    int n_edges = 0, n_double = 0, n_triple = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Rational pij = rs.pairing(base[i], base[j]);
            if (pij == 0) continue;
            Rational cij = 2 * pij / norm[j], cji = 2 * pij / norm[i];
            cij.canonicalize();
            cji.canonicalize();
            internal_check(cij.get_den() == 1 && cji.get_den() == 1, "base Cartan not integral");
            const Rational bond = cij * cji;
            const int e = static_cast<int>(bond.get_num().get_si());
            if (e < 1 || e > 3) throw std::domain_error("classify_type: no finite type (bond order)");
            mult[i][j] = mult[j][i] = e;
            ++deg[i];
            ++deg[j];
            ++n_edges;
            if (e == 2) ++n_double;
            if (e == 3) ++n_triple;
        }

    // Connected tree or it is not an irreducible finite diagram.
    {
        std::vector<bool> vis(m, false);
        std::queue<int> q;
        q.push(0);
        vis[0] = true;
        int seen = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < m; ++w)
                if (mult[v][w] && !vis[w]) {
                    vis[w] = true;
                    ++seen;
                    q.push(w);
                }
        }
        if (seen != m) throw std::invalid_argument("classify_type: system is not irreducible");
        if (n_edges != m - 1) throw std::domain_error("classify_type: no finite type (cycle)");
    }

    if (n_triple > 0) {
        if (m == 2 && n_triple == 1) return {Family::G, 2};
        throw std::domain_error("classify_type: no finite type (triple bond)");
    }
    for (int i = 0; i < m; ++i)
        if (deg[i] > 3) throw std::domain_error("classify_type: no finite type (degree > 3)");

    std::vector<int> branches;
    for (int i = 0; i < m; ++i)
        if (deg[i] == 3) branches.push_back(i);

    const Rational long_norm = *std::max_element(norm.begin(), norm.end());
    const auto is_long = [&](int i) { return norm[i] == long_norm; };

    if (branches.empty()) {
        // Path; read it from either endpoint.
        const auto walk_from = [&](int start) {
            std::vector<int> w{start};
            int prev = -1, cur = start;
            while (static_cast<int>(w.size()) < m) {
                for (int nxt = 0; nxt < m; ++nxt)
                    if (mult[cur][nxt] && nxt != prev) {
                        w.push_back(nxt);
                        prev = cur;
                        cur = nxt;
                        break;
                    }
            }
            return w;
        };
        std::vector<int> ends;
        for (int i = 0; i < m; ++i)
            if (deg[i] == 1) ends.push_back(i);
        internal_check(ends.size() == 2, "path without two endpoints");

        if (n_double == 0) return {Family::A, m};
        if (n_double > 1) throw std::domain_error("classify_type: no finite type (two double bonds)");

        if (m == 2) return norm[1] < norm[0] ? DynkinType{Family::B, 2} : DynkinType{Family::C, 2};

        for (int e : {ends[0], ends[1]}) {
            const auto w = walk_from(e);
            bool tail_short = !is_long(w[m - 1]);
            bool head_long = true, head_short = true;
            for (int k = 0; k + 1 < m; ++k) {
                head_long = head_long && is_long(w[k]);
                head_short = head_short && !is_long(w[k]);
            }
            if (head_long && tail_short) return {Family::B, m};
            if (head_short && !tail_short) return {Family::C, m};
            if (m == 4 && is_long(w[0]) && is_long(w[1]) && !is_long(w[2]) && !is_long(w[3]))
                return {Family::F, 4};
        }
        throw std::domain_error("classify_type: no finite type (length pattern)");
    }

    if (branches.size() == 1 && n_double == 0) {
        const int b = branches[0];
        std::vector<int> arms;
        for (int nb = 0; nb < m; ++nb) {
            if (!mult[b][nb]) continue;
            int len = 1, prev = b, cur = nb;
            for (;;) {
                int nxt = -1;
                for (int k = 0; k < m; ++k)
                    if (mult[cur][k] && k != prev) nxt = k;
                if (nxt == -1) break;
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        internal_check(arms.size() == 3, "branch node without three arms");
        if (arms[0] == 1 && arms[1] == 1) return {Family::D, m};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
            return {Family::E, m};
    }
    throw std::domain_error("classify_type: no finite type (branch shape)");
}

/// Type of a full root system; round-trips with construction except for the
/// D3 = A3 coincidence, which canonicalizes to A3.
inline DynkinType classify_type(const RootSystem& rs) {
    return classify_type(as_subsystem(rs), rs);
}

}  // namespace orbitrank
