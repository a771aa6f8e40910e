// SPDX-License-Identifier: MIT

#ifndef FASTALPHA_PIXEL_BUFFER_HPP
#define FASTALPHA_PIXEL_BUFFER_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fastalpha/rgba.hpp"

namespace fastalpha {

// Row-major pixel rectangle. pixels.size() == width * height always;
// zero-dimension buffers are legal and simply hold no pixels.
struct PixelBuffer {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<Rgba32> pixels;

    // Transparent-black buffer of the given size. Throws
    // std::length_error when width*height cannot be addressed.
    static PixelBuffer make(std::uint32_t width, std::uint32_t height);

    std::size_t pixel_count() const noexcept { return pixels.size(); }

    friend bool operator==(const PixelBuffer&, const PixelBuffer&) = default;
};

}  // namespace fastalpha

#endif  // FASTALPHA_PIXEL_BUFFER_HPP
