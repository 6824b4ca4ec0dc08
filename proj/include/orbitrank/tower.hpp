#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "orbitrank/root_system.hpp"

namespace orbitrank {

/// One step of the chain of Heisenberg parabolic subsystems: the subsystem
/// itself, its highest root, the base roots not orthogonal to it, and the
/// Heisenberg layer (positive roots pairing positively with the highest root).
struct TowerStep {
    Subsystem system;
    DynkinType type;
    Root highest;
    std::vector<Root> sigma;
    std::vector<Root> layer;

    int layer_dim() const { return static_cast<int>(layer.size()); }
};

struct HeisenbergTower {
    DynkinType ambient;
    std::vector<TowerStep> steps;
    std::vector<Root> gamma;  // union of the sigma sets, canonical order

    int r() const { return static_cast<int>(steps.size()); }
};

/// Base roots of s that pair nontrivially with beta.
inline std::vector<Root> sigma_set(const Subsystem& s, const RootSystem& rs, const Root& beta) {
    std::vector<Root> out;
    for (const Root& d : s.base)
        if (rs.pairing(d, beta) != 0) out.push_back(d);
    return out;
}

/// Roots of s orthogonal to beta. Closed under negation and addition, so it
/// feeds irreducible_components directly.
inline std::vector<Root> orthogonal_roots(const Subsystem& s, const RootSystem& rs,
                                          const Root& beta) {
    std::vector<Root> out;
    for (const Root& a : s.roots)
        if (rs.pairing(a, beta) == 0) out.push_back(a);
    return out;
}

/// The next subsystem of the chain: the unique component of the orthogonal
/// complement of beta that is not of type A1. Empty optional when every
/// component is A1 (or the complement is empty), which terminates the chain.
inline std::optional<Subsystem> next_subsystem(const Subsystem& s, const RootSystem& rs,
                                               const Root& beta) {
    const auto orth = orthogonal_roots(s, rs, beta);
    if (orth.empty()) return std::nullopt;
    std::optional<Subsystem> pick;
    for (auto& c : irreducible_components(orth, rs)) {
        if (c.base.size() == 1) continue;
        internal_check(!pick.has_value(), "orthogonal complement has two non-A1 components");
        pick = std::move(c);
    }
    return pick;
}

/// Builds the full chain for an ambient simple system. A1 is rejected: it has
/// no Heisenberg layer to speak of.
inline HeisenbergTower build_tower(const RootSystem& rs) {
    if (rs.type() == DynkinType{Family::A, 1})
        throw std::invalid_argument("build_tower: ambient A1 has no Heisenberg chain");

    HeisenbergTower tw;
    tw.ambient = rs.type();

    std::optional<Subsystem> cur = as_subsystem(rs);
    std::set<Root> gamma_seen;
    while (cur) {
        TowerStep step;
        step.system = std::move(*cur);
        step.type = classify_type(step.system, rs);
        step.highest = highest_root(step.system);
        step.sigma = sigma_set(step.system, rs, step.highest);
        for (const Root& p : step.system.positives()) {
            const Rational v = rs.pairing(p, step.highest);
            internal_check(v >= 0, "positive root pairs negatively with the highest root");
            if (v > 0) step.layer.push_back(p);
        }
        internal_check(step.layer_dim() >= 3 && step.layer_dim() % 2 == 1,
                       "Heisenberg layer dimension not an odd number >= 3");

        if (!tw.steps.empty()) {
            const auto& prev = tw.steps.back();
            internal_check(step.system.base.size() < prev.system.base.size(),
                           "tower rank did not strictly decrease");
            std::set<Root> prev_base(prev.system.base.begin(), prev.system.base.end());
            for (const Root& b : step.system.base)
                internal_check(prev_base.count(b) != 0, "step base escapes the previous base");
        }
        for (const Root& d : step.sigma) {
            internal_check(height(d) == 1, "sigma root is not an ambient simple root");
            internal_check(gamma_seen.insert(d).second, "sigma sets overlap across steps");
        }

        cur = next_subsystem(step.system, rs, step.highest);
        tw.steps.push_back(std::move(step));
    }

    tw.gamma.assign(gamma_seen.begin(), gamma_seen.end());
    std::sort(tw.gamma.begin(), tw.gamma.end(), root_less);
    return tw;
}

inline std::vector<int> layer_dims(const HeisenbergTower& tw) {
    std::vector<int> out;
    for (const auto& s : tw.steps) out.push_back(s.layer_dim());
    return out;
}

/// 1-based simple-root indices of gamma.
inline std::vector<int> gamma_indices(const HeisenbergTower& tw, const RootSystem& rs) {
    std::vector<int> out;
    for (int i = 0; i < rs.rank(); ++i) {
        const Root s = rs.simple(i);
        for (const Root& g : tw.gamma)
            if (g == s) out.push_back(i + 1);
    }
    return out;
}

/// 1-based indices of the simple roots outside gamma.
inline std::vector<int> delta_minus_gamma_indices(const HeisenbergTower& tw,
                                                  const RootSystem& rs) {
    const auto in = gamma_indices(tw, rs);
    std::vector<int> out;
    for (int i = 1; i <= rs.rank(); ++i)
        if (std::find(in.begin(), in.end(), i) == in.end()) out.push_back(i);
    return out;
}

/// Closed-form chain length r for each family.
inline int closed_form_r(DynkinType t) {
    if (!is_valid(t) || t == DynkinType{Family::A, 1})
        throw std::invalid_argument("closed_form_r: no chain for " + to_string(t));
    switch (t.family) {
        case Family::A: return t.rank / 2;
        case Family::B: return t.rank / 2;
        case Family::C: return t.rank - 1;
        case Family::D: return (t.rank - 1) / 2;
        case Family::E: return t.rank / 2;
        case Family::F: return 3;
        case Family::G: return 1;
    }
    throw std::logic_error("unreachable");
}

/// Every valid ambient type with 2 <= rank <= max_rank, family order A..G.
inline std::vector<DynkinType> tower_types_up_to(int max_rank) {
    std::vector<DynkinType> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        for (int n = 2; n <= max_rank; ++n) {
            DynkinType t{f, n};
            if (is_valid(t) && t != DynkinType{Family::A, 1}) out.push_back(t);
        }
    return out;
}

}  // namespace orbitrank
