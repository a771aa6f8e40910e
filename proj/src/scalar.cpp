// SPDX-License-Identifier: MIT

#include "fastalpha/scalar.hpp"

namespace fastalpha {

std::vector<MismatchRecord> mismatch_census(ChannelMult candidate, ChannelMult oracle) {
    std::vector<MismatchRecord> mismatches;
    for (unsigned alpha = 0; alpha < 256; ++alpha) {
        for (unsigned c = 0; c < 256; ++c) {
            const Channel got = candidate(Channel(alpha), Channel(c));
            const Channel want = oracle(Channel(alpha), Channel(c));
            if (got != want) {
                mismatches.push_back({Channel(alpha), Channel(c), got, want});
            }
        }
    }
    return mismatches;
}

}  // namespace fastalpha
