// SPDX-License-Identifier: MIT

#include "fastalpha/swar.hpp"

#include <algorithm>
#include <stdexcept>

namespace fastalpha {
namespace {

// Alpha 0 and 255 bypass. Any kernel maps an opaque pixel to itself and
// a transparent pixel to all-zero bits, so the bypass is bit-identical.
template <typename Kernel>
Rgba32 with_shortcut(Rgba32 p, Kernel kernel) {
    const Channel a = p.alpha();
    if (a == 255) {
        return p;
    }
    if (a == 0) {
        return Rgba32{0};
    }
    return kernel(p);
}

template <typename Kernel>
void premultiply_loop(PixelBuffer& buf, const PremultOptions& opts, Kernel kernel) {
    const std::size_t n = buf.pixels.size();
    const std::size_t chunk = opts.chunk_pixels == 0 ? n : opts.chunk_pixels;
    for (std::size_t base = 0; base < n; base += chunk) {
        const std::size_t end = std::min(n, base + chunk);
        if (opts.shortcut_special_alpha) {
            for (std::size_t i = base; i < end; ++i) {
                buf.pixels[i] = with_shortcut(buf.pixels[i], kernel);
            }
        } else {
            for (std::size_t i = base; i < end; ++i) {
                buf.pixels[i] = kernel(buf.pixels[i]);
            }
        }
    }
}

}  // namespace

Rgba32 over_premul_checked(Rgba32 src, Rgba32 dst) {
    if (!is_premultiplied(src)) {
        throw std::invalid_argument("over_premul: source pixel is not premultiplied");
    }
    if (!is_premultiplied(dst)) {
        throw std::invalid_argument("over_premul: destination pixel is not premultiplied");
    }
    return over_premul(src, dst);
}

void premultiply_buffer(PixelBuffer& buf, const PremultOptions& opts) {
    switch (opts.kernel) {
        case PremultKernel::swar32:
            premultiply_loop(buf, opts, [](Rgba32 p) { return premultiply_pixel(p); });
            break;
        case PremultKernel::swar64:
            premultiply_loop(buf, opts, [](Rgba32 p) { return premultiply_pixel_w64(p); });
            break;
        case PremultKernel::scalar:
            premultiply_loop(buf, opts, [](Rgba32 p) { return premultiply_pixel_scalar(p); });
            break;
        case PremultKernel::float_ref:
            premultiply_loop(buf, opts, [](Rgba32 p) { return premultiply_pixel_float(p); });
            break;
    }
}

void over_buffer(const PixelBuffer& src, PixelBuffer& dst) {
    if (src.width != dst.width || src.height != dst.height) {
        throw std::invalid_argument("over_buffer: dimension mismatch, source is " +
                                    std::to_string(src.width) + "x" + std::to_string(src.height) +
                                    " but destination is " + std::to_string(dst.width) + "x" +
                                    std::to_string(dst.height));
    }
    for (std::size_t i = 0; i < dst.pixels.size(); ++i) {
        dst.pixels[i] = over_premul(src.pixels[i], dst.pixels[i]);
    }
}

bool is_premultiplied(const PixelBuffer& buf) noexcept {
    for (const Rgba32 p : buf.pixels) {
        if (!is_premultiplied(p)) {
            return false;
        }
    }
    return true;
}

}  // namespace fastalpha
