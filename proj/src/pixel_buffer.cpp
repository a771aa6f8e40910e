// SPDX-License-Identifier: MIT

#include "fastalpha/pixel_buffer.hpp"

#include <limits>
#include <stdexcept>

#include "fastalpha/rng.hpp"

namespace fastalpha {

PixelBuffer PixelBuffer::make(std::uint32_t width, std::uint32_t height) {
    const std::uint64_t count = std::uint64_t(width) * std::uint64_t(height);
    if (count > std::numeric_limits<std::size_t>::max() / 4) {
        throw std::length_error("PixelBuffer: " + std::to_string(width) + "x" +
                                std::to_string(height) + " pixels cannot be addressed");
    }
    PixelBuffer buf;
    buf.width = width;
    buf.height = height;
    buf.pixels.resize(static_cast<std::size_t>(count));
    return buf;
}

PixelBuffer random_buffer(std::uint32_t width, std::uint32_t height, SplitMix64& rng) {
    PixelBuffer buf = PixelBuffer::make(width, height);
    for (Rgba32& p : buf.pixels) {
        p = random_pixel(rng);
    }
    return buf;
}

}  // namespace fastalpha
