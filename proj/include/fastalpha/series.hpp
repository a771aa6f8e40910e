// SPDX-License-Identifier: MIT

#ifndef FASTALPHA_SERIES_HPP
#define FASTALPHA_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fastalpha/scalar.hpp"

namespace fastalpha {

// Wide enough for every scaled value and tail denominator this module
// hands out.
using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

// Repunit in base 2^lane_bits with k ones:
//   (2^(lane_bits*k) - 1) / (2^lane_bits - 1) = 1 + 2^n + 2^2n + ...
// repunit(8, 2) == 0x0101, repunit(8, 4) == 0x01010101.
// Requires lane_bits >= 1, k >= 1, lane_bits*(k-1) < 128.
constexpr u128 repunit(unsigned lane_bits, unsigned k) noexcept {
    u128 v = 0;
    for (unsigned i = 0; i < k; ++i) {
        v |= u128(1) << (lane_bits * i);
    }
    return v;
}

// Truncation of y/255 after k base-256 terms, kept exact:
//   y/255 = scaled_value/2^(8k) + tail_num/tail_den
// scaled_value = y * repunit(8, k) is an exact integer because 255
// divides 256^k - 1 for every k >= 1.
struct SeriesExpansion {
    std::uint64_t y = 0;
    unsigned terms = 0;          // k
    u128 scaled_value = 0;       // y * (256^k - 1)/255
    std::uint64_t tail_num = 0;  // y
    u128 tail_den = 0;           // 255 * 2^(8k); tail is 0/den when y == 0
};

// First `count` base-256 fractional digits of c/255, produced by long
// division (the non-terminating expansion, so 255/255 is 0.ff ff ...
// rather than 1.00 00 ...). Every digit comes out equal to c.
std::vector<std::uint8_t> repeating_digits(Channel c, std::size_t count);

// Exact truncated expansion of y/255. y is not limited to 8 bits.
// Budget: 1 <= terms <= 8 and y < 2^63 keep y*256^k inside 128 bits;
// anything outside throws std::out_of_range.
SeriesExpansion series_div255(std::uint64_t y, unsigned terms);

// True iff the two-term truncation of alpha/255, evaluated exactly,
// reproduces fast_mult_24(alpha, c). Holds for every input pair: the
// k=2 truncation is precisely what the 0x8080 formula computes.
bool series_matches_fast_formula(Channel alpha, Channel c);

}  // namespace fastalpha

#endif  // FASTALPHA_SERIES_HPP
