// SPDX-License-Identifier: MIT

#ifndef FASTALPHA_RGBA_HPP
#define FASTALPHA_RGBA_HPP

#include <cstdint>

#include "fastalpha/scalar.hpp"

namespace fastalpha {

// Packed RGBA32 pixel: red in bits 0-7, green in 8-15, blue in 16-23,
// alpha in 24-31.
struct Rgba32 {
    std::uint32_t bits = 0;

    constexpr Channel red() const noexcept { return static_cast<Channel>(bits & 0xffu); }
    constexpr Channel green() const noexcept { return static_cast<Channel>((bits >> 8) & 0xffu); }
    constexpr Channel blue() const noexcept { return static_cast<Channel>((bits >> 16) & 0xffu); }
    constexpr Channel alpha() const noexcept { return static_cast<Channel>(bits >> 24); }

    static constexpr Rgba32 from_lanes(Channel r, Channel g, Channel b, Channel a) noexcept {
        return Rgba32{std::uint32_t(r) | (std::uint32_t(g) << 8) | (std::uint32_t(b) << 16) |
                      (std::uint32_t(a) << 24)};
    }

    friend constexpr bool operator==(Rgba32, Rgba32) noexcept = default;
};

// Premultiplied form: no color lane may exceed the alpha lane.
constexpr bool is_premultiplied(Rgba32 p) noexcept {
    const Channel a = p.alpha();
    return p.red() <= a && p.green() <= a && p.blue() <= a;
}

}  // namespace fastalpha

#endif  // FASTALPHA_RGBA_HPP
