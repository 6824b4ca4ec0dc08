#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orbitrank/tower.hpp"
#include "orbitrank/verify.hpp"

namespace orbitrank {

/// Wire form of one tower step.
struct TowerStepReport {
    int index = 0;
    std::string type;
    int sigma_size = 0;
    int layer_dim = 0;
    std::vector<int> highest_root;
    std::vector<std::vector<int>> sigma;

    friend bool operator==(const TowerStepReport&, const TowerStepReport&) = default;
};

/// Wire form of a whole tower; round-trips losslessly through JSON.
struct TowerReport {
    std::string type;
    int rank = 0;
    int r = 0;
    std::vector<TowerStepReport> steps;
    std::vector<int> layer_dims;
    std::vector<int> gamma;             // 1-based simple root indices
    std::vector<int> delta_minus_gamma; // 1-based simple root indices

    friend bool operator==(const TowerReport&, const TowerReport&) = default;
};

inline TowerReport make_tower_report(const RootSystem& rs, const HeisenbergTower& tw) {
    TowerReport rep;
    rep.type = to_string(rs.type());
    rep.rank = rs.rank();
    rep.r = tw.r();
    for (int s = 0; s < tw.r(); ++s) {
        const auto& step = tw.steps[s];
        TowerStepReport sr;
        sr.index = s + 1;
        sr.type = to_string(step.type);
        sr.sigma_size = static_cast<int>(step.sigma.size());
        sr.layer_dim = step.layer_dim();
        sr.highest_root = step.highest;
        for (const Root& d : step.sigma) sr.sigma.push_back(d);
        rep.steps.push_back(std::move(sr));
    }
    rep.layer_dims = layer_dims(tw);
    rep.gamma = gamma_indices(tw, rs);
    rep.delta_minus_gamma = delta_minus_gamma_indices(tw, rs);
    return rep;
}

inline void to_json(nlohmann::json& j, const TowerStepReport& s) {
    j = nlohmann::json{{"index", s.index},
                       {"type", s.type},
                       {"sigma_size", s.sigma_size},
                       {"layer_dim", s.layer_dim},
                       {"highest_root", s.highest_root},
                       {"sigma", s.sigma}};
}

inline void from_json(const nlohmann::json& j, TowerStepReport& s) {
    j.at("index").get_to(s.index);
    j.at("type").get_to(s.type);
    j.at("sigma_size").get_to(s.sigma_size);
    j.at("layer_dim").get_to(s.layer_dim);
    j.at("highest_root").get_to(s.highest_root);
    j.at("sigma").get_to(s.sigma);
}

inline void to_json(nlohmann::json& j, const TowerReport& r) {
    j = nlohmann::json{{"type", r.type},
                       {"rank", r.rank},
                       {"r", r.r},
                       {"steps", r.steps},
                       {"layer_dims", r.layer_dims},
                       {"gamma", r.gamma},
                       {"delta_minus_gamma", r.delta_minus_gamma}};
}

inline void from_json(const nlohmann::json& j, TowerReport& r) {
    j.at("type").get_to(r.type);
    j.at("rank").get_to(r.rank);
    j.at("r").get_to(r.r);
    j.at("steps").get_to(r.steps);
    j.at("layer_dims").get_to(r.layer_dims);
    j.at("gamma").get_to(r.gamma);
    j.at("delta_minus_gamma").get_to(r.delta_minus_gamma);
}

inline void to_json(nlohmann::json& j, const CheckResult& c) {
    j = nlohmann::json{{"name", c.name},
                       {"cases", c.cases},
                       {"failures", c.failures},
                       {"wall_ms", c.wall_ms}};
}

/// Summary of a verify run.
struct VerificationSummary {
    std::string suite;
    std::uint64_t seed = 0;
    int max_rank = 0;
    int trials = 0;
    std::vector<CheckResult> checks;

    int cases() const {
        int n = 0;
        for (const auto& c : checks) n += c.cases;
        return n;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            for (const auto& f : c.failures) out.push_back(c.name + ": " + f);
        return out;
    }
    double wall_ms() const {
        double t = 0;
        for (const auto& c : checks) t += c.wall_ms;
        return t;
    }
};

inline void to_json(nlohmann::json& j, const VerificationSummary& v) {
    j = nlohmann::json{{"suite", v.suite},       {"seed", v.seed},
                       {"max_rank", v.max_rank}, {"trials", v.trials},
                       {"cases", v.cases()},     {"failures", v.failures()},
                       {"checks", v.checks},     {"wall_ms", v.wall_ms()}};
}

}  // namespace orbitrank
