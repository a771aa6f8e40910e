// SPDX-License-Identifier: MIT

#include "fastalpha/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fastalpha {

std::string u128_to_string(u128 v) {
    if (v == 0) {
        return "0";
    }
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::vector<std::uint8_t> repeating_digits(Channel c, std::size_t count) {
    std::vector<std::uint8_t> digits;
    digits.reserve(count);
    std::uint32_t rem = c;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint32_t num = rem * 256u;
        // Non-terminating choice: (num - 1)/255 instead of num/255, so
        // 255/255 comes out as 0.ff ff ... rather than 1.00 00 ...
        const std::uint32_t digit = rem == 0 ? 0 : (num - 1u) / 255u;
        digits.push_back(static_cast<std::uint8_t>(digit));
        rem = num - 255u * digit;
    }
    return digits;
}

SeriesExpansion series_div255(std::uint64_t y, unsigned terms) {
    if (terms < 1 || terms > 8 || y >= (std::uint64_t(1) << 63)) {
        throw std::out_of_range(
            "series_div255: need 1 <= terms <= 8 and y < 2^63 to keep y*256^k inside 128 bits");
    }
    SeriesExpansion e;
    e.y = y;
    e.terms = terms;
    e.scaled_value = u128(y) * repunit(8, terms);
    e.tail_num = y;
    e.tail_den = u128(255) << (8 * terms);
    return e;
}

bool series_matches_fast_formula(Channel alpha, Channel c) {
    const SeriesExpansion e = series_div255(alpha, 2);
    const u128 lhs = (e.scaled_value * c + 0x8080u) >> 16;
    return lhs == fast_mult_24(alpha, c);
}

}  // namespace fastalpha
