#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace altlink {

// Exact element of (1/2)Z, stored as twice its value. Filtration and
// grading levels live here; never use floating point for them.
struct HalfInt {
    std::int64_t twice = 0;

    static constexpr HalfInt whole(std::int64_t n) { return HalfInt{2 * n}; }
    static constexpr HalfInt from_twice(std::int64_t t) { return HalfInt{t}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr std::int64_t as_integer() const { return twice / 2; } // pre: is_integer()

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return HalfInt{k * a.twice}; }

    HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    // "2", "-1", "1/2", "-3/2"
    std::string str() const {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

} // namespace altlink
