// SPDX-License-Identifier: MIT

#ifndef FASTALPHA_SCALAR_HPP
#define FASTALPHA_SCALAR_HPP

#include <cstdint>
#include <vector>

namespace fastalpha {

// One raw 8-bit component (color or alpha). Normalized meaning is
// value/255: 0 -> 0.0, 255 -> 1.0. The 0..255 range is enforced by the
// type itself, so the arithmetic below stays branch-free.
using Channel = std::uint8_t;

// round(alpha*c/255) via double-precision division. The reference every
// fast path is measured against.
constexpr Channel exact_mult_float(Channel alpha, Channel c) noexcept {
    return static_cast<Channel>((double(alpha) * double(c)) / 255.0 + 0.5);
}

// The same rounding in pure integer form: floor((alpha*c + 127)/255).
// The rounding constant is 127, not 128: a tie at exactly .5 would need
// 2*alpha*c = 255*odd, which has no integer solution, so +127 under
// integer division lands on the same value as +0.5 under real division.
constexpr Channel exact_mult_int(Channel alpha, Channel c) noexcept {
    return static_cast<Channel>((std::uint32_t(alpha) * c + 127u) / 255u);
}

// floor(2^-16 * (alpha*0x101*c + 0x8080)). alpha*0x101 is the 16-bit
// truncation of the repeating fraction alpha/255 = 0.alpha alpha... in
// base 256; 0x8080 carries a rounding bit for each retained term.
// Intermediates need 25 bits, computed in 32. Matches exact_mult_int on
// every input pair.
constexpr Channel fast_mult_24(Channel alpha, Channel c) noexcept {
    const std::uint32_t m = std::uint32_t(alpha) | (std::uint32_t(alpha) << 8);
    return static_cast<Channel>((m * c + 0x8080u) >> 16);
}

// Same value using at most 17 bits of intermediate:
//   t = alpha*c + 0x80;  result = (t + (t >> 8)) >> 8
// Narrow enough that two components fit a 32-bit word or four fit a
// 64-bit word during packed blending.
constexpr Channel fast_mult_16(Channel alpha, Channel c) noexcept {
    const std::uint32_t t = std::uint32_t(alpha) * c + 0x80u;
    return static_cast<Channel>((t + (t >> 8)) >> 8);
}

// The plausible-looking rounding constant 0x8000 instead of 0x8080.
// Close, but too small: 24 input pairs come out one below the exact
// answer. Kept as a census subject.
constexpr Channel approx_mult_8000(Channel alpha, Channel c) noexcept {
    const std::uint32_t m = std::uint32_t(alpha) | (std::uint32_t(alpha) << 8);
    return static_cast<Channel>((m * c + 0x8000u) >> 16);
}

using ChannelMult = Channel (*)(Channel, Channel);

// One disagreement between a candidate formula and its oracle.
struct MismatchRecord {
    Channel alpha;
    Channel channel;
    Channel got;   // candidate(alpha, channel)
    Channel want;  // oracle(alpha, channel)

    friend constexpr bool operator==(const MismatchRecord&, const MismatchRecord&) noexcept = default;
};

// Runs candidate against oracle over all 65,536 (alpha, channel) pairs,
// alpha ascending then channel ascending, and returns every
// disagreement in that order.
std::vector<MismatchRecord> mismatch_census(ChannelMult candidate, ChannelMult oracle);

}  // namespace fastalpha

#endif  // FASTALPHA_SCALAR_HPP
