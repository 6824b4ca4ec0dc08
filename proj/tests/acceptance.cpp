// Acceptance gate: the nine binding checks with their parameters pinned.
// Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

#include <cstdio>

#include "orbitrank/verify.hpp"

using namespace orbitrank;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kSvdTolerance = 1e-8;  // matches orbit_dimension_float's default

int n_passed = 0, n_total = 0;

void report(const char* what, const CheckResult& res, double time_limit_ms = 0.0) {
    ++n_total;
    bool ok = res.passed();
    std::string extra;
    if (time_limit_ms > 0 && res.wall_ms > time_limit_ms) {
        ok = false;
        extra = " [time budget exceeded]";
    }
    if (ok) ++n_passed;
    std::printf("[%d] %s %s (%d cases, %.0f ms)%s\n", n_total, ok ? "PASS" : "FAIL", what,
                res.cases, res.wall_ms, extra.c_str());
    std::size_t shown = 0;
    for (const auto& f : res.failures) {
        if (shown++ == 3) {
            std::printf("      ... %zu more\n", res.failures.size() - 3);
            break;
        }
        std::printf("      %s\n", f.c_str());
    }
}

}  // namespace

int main() {
    std::printf("acceptance run: seed %llu, svd tolerance %.0e\n",
                static_cast<unsigned long long>(kSeed), kSvdTolerance);
    TypeCache cache;

    report("chain lengths match the closed forms through rank 12, under 10 s",
           check_rank_table(cache, 12), 10000.0);

    report("sigma has exactly two roots precisely at type-A steps, through rank 12",
           check_sigma_cardinality(cache, 12));

    report("type-A uncovered base roots: none at even rank, the middle node at odd rank",
           check_parabolic_complement(cache, 12));

    report("every layer is Heisenberg and later layers act within earlier ones, rank <= 8, under 60 s",
           check_heisenberg(cache, 8), 60000.0);

    report("Jacobi identity on all basis triples, rank <= 8, and one flipped sign breaks it",
           check_jacobi(cache, 8));

    report("rank-d orbit dimension hits the layer-sum threshold and classifies back to d, rank <= 6, 20 tuples",
           check_dimension_formula(cache, 6, kSeed, 20));

    report("exact rank equals SVD rank at 1e-8 relative tolerance, rank <= 6, 100 functionals",
           check_field_independence(cache, 6, kSeed, 100));

    report("orbit dimension invariant under coadjoint moves, rank <= 6, 10 elements x 20 functionals",
           check_coadjoint_invariance(cache, 6, kSeed, 10, 20));

    report("rank semicontinuity on 50 sampled lines per type, rank <= 4, at least 45 satisfied",
           check_rank_semicontinuity(cache, 4, kSeed, 50, 45));

    std::printf("result: %d of %d criteria passed\n", n_passed, n_total);
    return n_passed == n_total ? 0 : 1;
}
