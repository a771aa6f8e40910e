// SPDX-License-Identifier: MIT
//
// Packed (SWAR) application of fast_mult_16 to several 8-bit components
// per machine word. Two color components share a 32-bit multiply; four
// components share a single 64-bit multiply. Every packed path is
// bit-identical to running fast_mult_16 lane by lane.

#ifndef FASTALPHA_SWAR_HPP
#define FASTALPHA_SWAR_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>

#include "fastalpha/pixel_buffer.hpp"
#include "fastalpha/rgba.hpp"
#include "fastalpha/scalar.hpp"

namespace fastalpha {

// Two 8-bit components per 32-bit word at bit offsets 0 and 16. The odd
// bytes (8-15, 24-31) must be zero going into a multiply so each product
// has a full 16-bit lane to land in.
inline constexpr std::uint32_t kLaneMask32 = 0x00ff00ffu;
inline constexpr std::uint32_t kRound32 = 0x00800080u;  // 0x80 per lane

// Four components per 64-bit word at bit offsets 0, 16, 32 and 48.
inline constexpr std::uint64_t kLaneMask64 = 0x00ff00ff00ff00ffull;
inline constexpr std::uint64_t kRound64 = 0x0080008000800080ull;

// Premultiplies the color lanes of p by its alpha lane, two lanes per
// multiply: red+blue in one 32-bit word, green+alpha in the other. The
// alpha field is forced to 255 before the multiply so that lane, times
// alpha, comes back out as alpha itself. The shifted addend is masked
// with 0x00ff00ff before the add; without the mask the low bits of the
// blue product would clobber the high bits of the red product.
constexpr Rgba32 premultiply_pixel(Rgba32 p) noexcept {
    const std::uint32_t alfa = p.bits >> 24;
    const std::uint32_t color = p.bits | 0xff000000u;

    std::uint32_t rb = color & kLaneMask32;
    rb *= alfa;
    rb += kRound32;
    rb += (rb >> 8) & kLaneMask32;
    rb &= 0xff00ff00u;

    std::uint32_t ga = (color >> 8) & kLaneMask32;
    ga *= alfa;
    ga += kRound32;
    ga += (ga >> 8) & kLaneMask32;
    ga &= 0xff00ff00u;

    return Rgba32{ga | (rb >> 8)};
}

// Spreads the four bytes of a 32-bit word so byte n sits at bit 16n.
constexpr std::uint64_t spread_bytes_w64(std::uint32_t x) noexcept {
    std::uint64_t q = x;
    q = (q | (q << 16)) & 0x0000ffff0000ffffull;
    q = (q | (q << 8)) & kLaneMask64;
    return q;
}

// Inverse of spread_bytes_w64; lane values must be below 256.
constexpr std::uint32_t pack_bytes_w64(std::uint64_t q) noexcept {
    q = (q | (q >> 8)) & 0x0000ffff0000ffffull;
    q = q | (q >> 16);
    return static_cast<std::uint32_t>(q);
}

// Same result as premultiply_pixel, but all four lanes share one 64-bit
// multiply. After the shift-add each 16-bit lane carries its result in
// bits 8-15.
constexpr Rgba32 premultiply_pixel_w64(Rgba32 p) noexcept {
    const std::uint64_t alfa = p.bits >> 24;
    std::uint64_t q = spread_bytes_w64(p.bits | 0xff000000u);
    q *= alfa;
    q += kRound64;
    q += (q >> 8) & kLaneMask64;
    return Rgba32{pack_bytes_w64((q >> 8) & kLaneMask64)};
}

// Reference: the same premultiply as four scalar multiplies.
constexpr Rgba32 premultiply_pixel_scalar(Rgba32 p) noexcept {
    const Channel a = p.alpha();
    return Rgba32::from_lanes(fast_mult_16(a, p.red()), fast_mult_16(a, p.green()),
                              fast_mult_16(a, p.blue()), a);
}

// Reference: rounded double-precision division per lane.
inline Rgba32 premultiply_pixel_float(Rgba32 p) noexcept {
    const Channel a = p.alpha();
    return Rgba32::from_lanes(exact_mult_float(a, p.red()), exact_mult_float(a, p.green()),
                              exact_mult_float(a, p.blue()), a);
}

// Multiplies all four lanes, alpha included, by a. Two multiplies per
// pixel; lane for lane this is fast_mult_16(a, lane). Useful on pixels
// already in premultiplied form, e.g. to apply a matte or fade.
constexpr Rgba32 pixel_mul(Rgba32 p, Channel a) noexcept {
    std::uint32_t lo = (p.bits & kLaneMask32) * a + kRound32;
    lo = (lo + ((lo >> 8) & kLaneMask32)) >> 8;
    lo &= kLaneMask32;

    std::uint32_t hi = ((p.bits >> 8) & kLaneMask32) * a + kRound32;
    hi = hi + ((hi >> 8) & kLaneMask32);
    hi &= 0xff00ff00u;

    return Rgba32{hi | lo};
}

// Source-over on premultiplied pixels: src + dst*(255 - src.alpha).
// With both inputs premultiplied no output lane can pass 255 (each lane
// of src is at most src.alpha and each scaled dst lane is at most
// 255 - src.alpha), so the packed add needs no saturation. Debug builds
// assert the lane bound instead of clamping; clamping would only hide a
// broken precondition.
constexpr Rgba32 over_premul(Rgba32 src, Rgba32 dst) noexcept {
    const Rgba32 scaled = pixel_mul(dst, static_cast<Channel>(255 - src.alpha()));
    assert(src.red() + scaled.red() <= 255);
    assert(src.green() + scaled.green() <= 255);
    assert(src.blue() + scaled.blue() <= 255);
    assert(src.alpha() + scaled.alpha() <= 255);
    return Rgba32{src.bits + scaled.bits};
}

// Checked form for untrusted inputs: throws std::invalid_argument when
// either pixel is not premultiplied.
Rgba32 over_premul_checked(Rgba32 src, Rgba32 dst);

enum class PremultKernel {
    swar32,     // two lanes per 32-bit multiply (default)
    swar64,     // four lanes per 64-bit multiply
    scalar,     // one lane at a time, fast_mult_16
    float_ref,  // rounded double division, the oracle
};

struct PremultOptions {
    PremultKernel kernel = PremultKernel::swar32;
    // Skip the arithmetic for alpha 0 and alpha 255. Off by default;
    // when on, the output is bit-identical to the full computation.
    bool shortcut_special_alpha = false;
    // Pixels handled per internal batch; 0 means the whole buffer.
    // Output is bit-identical for every batch size.
    std::size_t chunk_pixels = 0;
};

// Replaces every pixel with its premultiplied form, in place.
void premultiply_buffer(PixelBuffer& buf, const PremultOptions& opts = {});

// dst[i] = over_premul(src[i], dst[i]) for every pixel. Both buffers
// must hold premultiplied pixels (caller's contract; validate untrusted
// data with is_premultiplied first). Throws std::invalid_argument on a
// dimension mismatch.
void over_buffer(const PixelBuffer& src, PixelBuffer& dst);

// True iff every pixel satisfies color lane <= alpha lane.
bool is_premultiplied(const PixelBuffer& buf) noexcept;

}  // namespace fastalpha

#endif  // FASTALPHA_SWAR_HPP
