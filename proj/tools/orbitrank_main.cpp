// Command line front end: tower construction, chain length table, coadjoint
// orbit dimensions, and the verification suites. All output is JSON on
// stdout; diagnostics go to stderr. Exit codes: 0 success, 1 failed checks,
// 2 invalid usage.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitrank/kirillov.hpp"
#include "orbitrank/report.hpp"

namespace {

using nlohmann::json;
using namespace orbitrank;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ORBITRANK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("ORBITRANK_SEED is not an unsigned integer");
        }
    }
    return 42;
}

/// Parses a functional spec: "rankable:d:c1,...,cd" or "coeffs:[c1,...,cn]".
Functional parse_lambda(const NilpotentLieAlgebra& L, const std::string& spec) {
    const auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : s) {
            if (ch == sep) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
        return parts;
    };

    if (spec.rfind("rankable:", 0) == 0) {
        const auto parts = split(spec.substr(9), ':');
        if (parts.size() != 2)
            throw std::invalid_argument("lambda spec: expected rankable:d:c1,...,cd");
        int d = 0;
        try {
            d = std::stoi(parts[0]);
        } catch (const std::exception&) {
            throw std::invalid_argument("lambda spec: bad rank '" + parts[0] + "'");
        }
        std::vector<Rational> scalars;
        for (const auto& tok : split(parts[1], ',')) scalars.push_back(parse_rational(tok));
        return rankable_functional(L, d, scalars);
    }
    if (spec.rfind("coeffs:", 0) == 0) {
        std::string body = spec.substr(7);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw std::invalid_argument("lambda spec: expected coeffs:[c1,...,cn]");
        body = body.substr(1, body.size() - 2);
        Functional lambda;
        for (const auto& tok : split(body, ',')) lambda.push_back(parse_rational(tok));
        if (static_cast<int>(lambda.size()) != L.dim())
            throw std::invalid_argument("lambda spec: expected " + std::to_string(L.dim()) +
                                        " coefficients for " + to_string(L.ambient));
        return lambda;
    }
    throw std::invalid_argument("lambda spec: expected rankable:... or coeffs:[...]");
}

int cmd_tower(const std::string& type_token) {
    const RootSystem rs(parse_type(type_token));
    const HeisenbergTower tw = build_tower(rs);
    emit(json(make_tower_report(rs, tw)));
    return 0;
}

int cmd_rtable(int max_rank) {
    if (max_rank < 2) throw std::invalid_argument("--max-rank must be at least 2");
    json entries = json::array();
    for (DynkinType t : tower_types_up_to(max_rank)) {
        const RootSystem rs(t);
        const int got = build_tower(rs).r();
        const int want = closed_form_r(t);
        entries.push_back(
            {{"type", to_string(t)}, {"r", got}, {"expected", want}, {"match", got == want}});
    }
    emit(json{{"max_rank", max_rank}, {"entries", entries}});
    return 0;
}

int cmd_orbitdim(const std::string& type_token, const std::string& lambda_spec) {
    const RootSystem rs(parse_type(type_token));
    const NilpotentLieAlgebra L = build_nilradical(rs, build_tower(rs));
    const Functional lambda = parse_lambda(L, lambda_spec);

    json coeffs = json::array();
    for (const Rational& c : lambda) coeffs.push_back(format_rational(c));
    const int dim_orbit = orbit_dimension(L, lambda);
    emit(json{{"type", to_string(rs.type())},
              {"dim", L.dim()},
              {"lambda", json{{"spec", lambda_spec}, {"coeffs", coeffs}}},
              {"orbit_dim", dim_orbit},
              {"stabilizer_dim", L.dim() - dim_orbit},
              {"rank_class", classify_rank(L, lambda)}});
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt) {
    VerificationSummary summary;
    summary.suite = suite;
    summary.seed = opt.seed;
    summary.max_rank = opt.max_rank;
    summary.trials = opt.trials;
    summary.checks = run_suite(suite, opt);
    emit(json(summary));
    return summary.failures().empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heisenberg chains of split simple root systems and exact Kirillov orbit data"};
    app.require_subcommand(1);

    std::string type_token, lambda_spec;
    int max_rank = 8;
    std::string suite = "all";
    VerifyOptions vopt;

    auto* tower = app.add_subcommand("tower", "Chain report for an ambient type");
    tower->add_option("type", type_token, "Ambient type, e.g. E8 or c3")->required();

    auto* rtable = app.add_subcommand("rtable", "Chain length table against the closed form");
    rtable->add_option("--max-rank", max_rank, "Largest ambient rank")->capture_default_str();

    auto* orbitdim = app.add_subcommand("orbitdim", "Coadjoint orbit dimension of a functional");
    orbitdim->add_option("type", type_token, "Ambient type")->required();
    orbitdim
        ->add_option("--lambda", lambda_spec,
                     "Functional: rankable:d:c1,...,cd or coeffs:[c1,...,cn]")
        ->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify
        ->add_option("--suite", suite,
                     "table, heisenberg, jacobi, dimformula, rankcheck, semicont, or all")
        ->capture_default_str();
    verify->add_option("--max-rank", vopt.max_rank, "Largest ambient rank")->capture_default_str();
    auto* seed_opt = verify->add_option("--seed", vopt.seed, "Random seed (default: ORBITRANK_SEED or 42)");
    verify->add_option("--trials", vopt.trials, "Samples per type and sub-check")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*tower) return cmd_tower(type_token);
        if (*rtable) return cmd_rtable(max_rank);
        if (*orbitdim) return cmd_orbitdim(type_token, lambda_spec);
        if (*verify) {
            if (!*seed_opt) vopt.seed = default_seed();
            if (vopt.max_rank < 2 || vopt.trials < 1)
                throw std::invalid_argument("--max-rank must be >= 2 and --trials >= 1");
            return cmd_verify(suite, vopt);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
