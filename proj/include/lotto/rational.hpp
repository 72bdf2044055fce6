#ifndef LOTTO_RATIONAL_HPP
#define LOTTO_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace lotto {

// Exact rational with denominator 2. All weight arithmetic in the library is
// done in these half-integer units; no floating point.
struct Half {
    std::int64_t twice = 0; // stored value is twice/2

    constexpr Half() = default;
    constexpr explicit Half(std::int64_t numerator_of_halves) : twice(numerator_of_halves) {}

    static constexpr Half whole(std::int64_t k) { return Half(2 * k); }
    static constexpr Half halves(std::int64_t k) { return Half(k); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr std::int64_t floor_int() const {
        return twice >= 0 ? twice / 2 : -((-twice + 1) / 2);
    }
    constexpr std::int64_t ceil_int() const {
        return twice >= 0 ? (twice + 1) / 2 : -((-twice) / 2);
    }
    // exact integer value; caller must know it is integral
    constexpr std::int64_t as_int() const { return twice / 2; }

    friend constexpr Half operator+(Half a, Half b) { return Half(a.twice + b.twice); }
    friend constexpr Half operator-(Half a, Half b) { return Half(a.twice - b.twice); }
    friend constexpr Half operator*(std::int64_t k, Half a) { return Half(k * a.twice); }
    friend constexpr Half operator*(Half a, std::int64_t k) { return Half(k * a.twice); }
    friend constexpr bool operator==(Half a, Half b) { return a.twice == b.twice; }
    friend constexpr bool operator!=(Half a, Half b) { return a.twice != b.twice; }
    friend constexpr bool operator<(Half a, Half b) { return a.twice < b.twice; }
    friend constexpr bool operator<=(Half a, Half b) { return a.twice <= b.twice; }
    friend constexpr bool operator>(Half a, Half b) { return a.twice > b.twice; }
    friend constexpr bool operator>=(Half a, Half b) { return a.twice >= b.twice; }
};

inline std::string to_string(Half h) {
    if (h.is_integer()) return std::to_string(h.as_int());
    return std::to_string(h.twice) + "/2";
}

} // namespace lotto

#endif
