#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace cell600 {

// Element a + b*tau of the ring Z[tau], tau = (1+sqrt(5))/2, with the
// reduction rule tau^2 = tau + 1.  kappa = 1/tau = tau - 1 is the element
// (-1, 1).  All arithmetic is overflow-checked: every value arising from the
// ray coordinates and their products is tiny, so an overflow can only mean a
// logic bug and is reported as a hard error.
struct Golden {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend constexpr bool operator==(const Golden&, const Golden&) = default;
};

inline constexpr Golden golden_zero{0, 0};
inline constexpr Golden golden_one{1, 0};
inline constexpr Golden golden_tau{0, 1};
inline constexpr Golden golden_kappa{-1, 1};

Golden add(Golden x, Golden y);
Golden sub(Golden x, Golden y);
Golden neg(Golden x);
Golden mul(Golden x, Golden y);

// Exact sign of the real number a + b*(1+sqrt(5))/2, by integer case
// analysis only (never floating point).
int sign(Golden x);

inline bool is_zero(Golden x) { return x.a == 0 && x.b == 0; }
Golden abs(Golden x);

inline Golden operator+(Golden x, Golden y) { return add(x, y); }
inline Golden operator-(Golden x, Golden y) { return sub(x, y); }
inline Golden operator-(Golden x) { return neg(x); }
inline Golden operator*(Golden x, Golden y) { return mul(x, y); }

// Total order induced by the real embedding.
inline bool operator<(Golden x, Golden y) { return sign(sub(x, y)) < 0; }
inline bool operator>(Golden x, Golden y) { return y < x; }
inline bool operator<=(Golden x, Golden y) { return !(y < x); }
inline bool operator>=(Golden x, Golden y) { return !(x < y); }

// Display form following the ray-table conventions: "0", "1", "2", "τ",
// "κ", "2τ", "2κ", ... with "−" prefixed to negative values and "a+bτ"
// as the general fallback.
std::string to_string(Golden x);

}  // namespace cell600

template <>
struct std::hash<cell600::Golden> {
    std::size_t operator()(const cell600::Golden& g) const noexcept {
        std::size_t h = std::hash<std::int64_t>{}(g.a);
        return h ^ (std::hash<std::int64_t>{}(g.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
