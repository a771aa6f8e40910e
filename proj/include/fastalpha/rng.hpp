// SPDX-License-Identifier: MIT

#ifndef FASTALPHA_RNG_HPP
#define FASTALPHA_RNG_HPP

#include <cstdint>

#include "fastalpha/pixel_buffer.hpp"
#include "fastalpha/rgba.hpp"

namespace fastalpha {

// splitmix64. Chosen as the project-wide pixel generator because the
// algorithm is tiny and its output is identical on every platform, so a
// seed pins a pixel stream exactly. Default seed is 0.
struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr explicit SplitMix64(std::uint64_t seed = 0) noexcept : state(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

// One pixel per draw: the low 32 bits of next().
constexpr Rgba32 random_pixel(SplitMix64& rng) noexcept {
    return Rgba32{static_cast<std::uint32_t>(rng.next() & 0xffffffffull)};
}

// width*height pixels drawn in row-major order from rng.
PixelBuffer random_buffer(std::uint32_t width, std::uint32_t height, SplitMix64& rng);

}  // namespace fastalpha

#endif  // FASTALPHA_RNG_HPP
