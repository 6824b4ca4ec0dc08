#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

namespace orbitrank {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan type of a split simple root system, Bourbaki numbering throughout.
struct DynkinType {
    Family family;
    int rank;

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
    friend auto operator<=>(const DynkinType& a, const DynkinType& b) {
        return std::tie(a.family, a.rank) <=> std::tie(b.family, b.rank);
    }
};

inline bool is_valid(DynkinType t) {
    switch (t.family) {
        case Family::A: return t.rank >= 1;
        case Family::B: return t.rank >= 2;
        case Family::C: return t.rank >= 2;
        case Family::D: return t.rank >= 3;
        case Family::E: return t.rank >= 6 && t.rank <= 8;
        case Family::F: return t.rank == 4;
        case Family::G: return t.rank == 2;
    }
    return false;
}

inline std::string to_string(DynkinType t) {
    return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

/// Parses a type token: family letter followed by the rank, case-insensitive
/// ("E8", "g2", "d10"). Throws std::invalid_argument on anything else.
inline DynkinType parse_type(std::string_view token) {
    const auto fail = [&] {
        throw std::invalid_argument("unknown root system type '" + std::string(token) + "'");
    };
    if (token.size() < 2) fail();
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    if (f < 'A' || f > 'G') fail();
    int rank = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) fail();
        rank = rank * 10 + (token[i] - '0');
        if (rank > 1000) fail();
    }
    DynkinType t{static_cast<Family>(f), rank};
    if (!is_valid(t)) fail();
    return t;
}

}  // namespace orbitrank
