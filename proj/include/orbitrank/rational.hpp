#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orbitrank {

/// Exact rational scalar. All core computations run over this type; floating
/// point appears only in cross-check oracles.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds a canonical (lowest terms, positive denominator) rational.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Canonical string form: "p/q" with q > 1, plain "p" when the value is integral.
inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional sign, q != 0). Result is canonicalized.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// FNV-1a, used to derive per-task seeds from a root seed plus a label.
/// std::hash is not stable across implementations, so we keep our own.
inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Deterministic random source. The mt19937_64 engine is bit-exact per the
/// standard; bounded draws are done by rejection sampling rather than
/// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Splits off an independent stream for a named sub-task of a root seed.
    static Rng split(std::uint64_t root_seed, std::string_view label) {
        return Rng(root_seed ^ fnv1a(label));
    }

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform draw from [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("rng: empty range");
        const std::uint64_t n = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return lo + static_cast<int>(x % n);
    }

    /// Random small rational: numerator uniform in [-9,9] without 0,
    /// denominator uniform in [1,9]. Canonicalized.
    Rational small_rational() {
        int num = uniform_int(-9, 8);
        if (num >= 0) ++num;  // skip zero
        const int den = uniform_int(1, 9);
        return make_rational(num, den);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace orbitrank
