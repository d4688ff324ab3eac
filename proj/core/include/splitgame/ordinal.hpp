#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace splitgame {

/// Ordinal below omega^2 in Cantor normal form (w*a + b), plus a
/// distinguished infinity greater than every ordinal. Used as the game
/// clock value.
class ClockOrdinal {
public:
    constexpr ClockOrdinal() = default;
    constexpr ClockOrdinal(uint32_t omega_coeff, uint32_t finite_part)
        : omega_(omega_coeff), finite_(finite_part) {}

    static constexpr ClockOrdinal finite(uint32_t n) { return ClockOrdinal(0, n); }
    static constexpr ClockOrdinal infinity() {
        ClockOrdinal o;
        o.infinite_ = true;
        return o;
    }

    constexpr bool is_infinity() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_ && omega_ == 0; }
    constexpr bool is_zero() const { return !infinite_ && omega_ == 0 && finite_ == 0; }
    constexpr uint32_t omega_coeff() const { return omega_; }
    constexpr uint32_t finite_part() const { return finite_; }

    friend constexpr std::strong_ordering operator<=>(const ClockOrdinal& a,
                                                      const ClockOrdinal& b) {
        if (a.infinite_ != b.infinite_)
            return a.infinite_ ? std::strong_ordering::greater
                               : std::strong_ordering::less;
        if (a.infinite_) return std::strong_ordering::equal;
        if (a.omega_ != b.omega_) return a.omega_ <=> b.omega_;
        return a.finite_ <=> b.finite_;
    }
    friend constexpr bool operator==(const ClockOrdinal&, const ClockOrdinal&) = default;

    std::string to_string() const;

private:
    uint32_t omega_ = 0;
    uint32_t finite_ = 0;
    bool infinite_ = false;
};

enum class Ordering { LT, EQ, GT };

Ordering ordinal_compare(const ClockOrdinal& a, const ClockOrdinal& b);

/// w * beta.
ClockOrdinal omega_times(uint32_t beta);

/// Parses the clock literal grammar: "k" | "w" | "w*k" | "w*k+m" | "inf".
ClockOrdinal parse_clock(const std::string& text);

} // namespace splitgame
