// SPDX-License-Identifier: MIT

#include <algorithm>
#include <doctest.h>

#include "fastalpha/scalar.hpp"

using namespace fastalpha;

TEST_CASE("float oracle on pinned values") {
    CHECK(exact_mult_float(255, 200) == 200);
    CHECK(exact_mult_float(0, 200) == 0);
    CHECK(exact_mult_float(128, 200) == 100);  // 25600/255 = 100.39...
    CHECK(exact_mult_float(37, 85) == 12);     // 3145/255 = 12.33...
}

TEST_CASE("integer oracle on pinned values") {
    CHECK(exact_mult_int(255, 255) == 255);
    CHECK(exact_mult_int(128, 85) == 43);    // (10880+127)/255
    CHECK(exact_mult_int(253, 191) == 190);  // 48450/255, exact
}

TEST_CASE("fast_mult_24 on pinned values") {
    CHECK(fast_mult_24(255, 1) == 1);
    CHECK(fast_mult_24(128, 200) == 100);
    CHECK(fast_mult_24(253, 191) == 190);
}

TEST_CASE("fast_mult_16 on pinned values") {
    CHECK(fast_mult_16(0, 0) == 0);
    CHECK(fast_mult_16(128, 37) == 19);  // t = 4864, t + (t>>8) = 4883
    CHECK(fast_mult_16(128, 85) == 43);
}

TEST_CASE("approx_mult_8000 keeps its known weakness") {
    CHECK(approx_mult_8000(255, 255) == 255);
    CHECK(approx_mult_8000(128, 200) == 100);  // non-mismatching pair
    CHECK(approx_mult_8000(253, 191) == 189);  // one below the oracle
}

TEST_CASE("all four exact formulas agree on every input pair") {
    int mismatches = 0;
    for (unsigned a = 0; a < 256; ++a) {
        for (unsigned c = 0; c < 256; ++c) {
            const Channel want = exact_mult_float(Channel(a), Channel(c));
            if (exact_mult_int(Channel(a), Channel(c)) != want) ++mismatches;
            if (fast_mult_24(Channel(a), Channel(c)) != want) ++mismatches;
            if (fast_mult_16(Channel(a), Channel(c)) != want) ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("bounds and identity rows hold everywhere") {
    int violations = 0;
    for (unsigned a = 0; a < 256; ++a) {
        for (unsigned c = 0; c < 256; ++c) {
            const unsigned r = fast_mult_16(Channel(a), Channel(c));
            if (r > std::min(a, c)) ++violations;
        }
        if (fast_mult_16(Channel(a), 255) != a) ++violations;
        if (fast_mult_16(255, Channel(a)) != a) ++violations;
        if (fast_mult_16(0, Channel(a)) != 0) ++violations;
        if (fast_mult_16(Channel(a), 0) != 0) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("each formula is nondecreasing in either argument") {
    constexpr ChannelMult formulas[] = {exact_mult_float, exact_mult_int, fast_mult_24,
                                        fast_mult_16, approx_mult_8000};
    int violations = 0;
    for (const ChannelMult f : formulas) {
        for (unsigned a = 0; a < 256; ++a) {
            for (unsigned c = 1; c < 256; ++c) {
                if (f(Channel(a), Channel(c)) < f(Channel(a), Channel(c - 1))) ++violations;
                if (f(Channel(c), Channel(a)) < f(Channel(c - 1), Channel(a))) ++violations;
            }
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("each formula is symmetric in its arguments") {
    constexpr ChannelMult formulas[] = {exact_mult_float, exact_mult_int, fast_mult_24,
                                        fast_mult_16, approx_mult_8000};
    int violations = 0;
    for (const ChannelMult f : formulas) {
        for (unsigned a = 0; a < 256; ++a) {
            for (unsigned c = 0; c <= a; ++c) {
                if (f(Channel(a), Channel(c)) != f(Channel(c), Channel(a))) ++violations;
            }
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("census of the fast formulas is empty") {
    CHECK(mismatch_census(fast_mult_16, exact_mult_int).empty());
    CHECK(mismatch_census(fast_mult_24, exact_mult_int).empty());
    CHECK(mismatch_census(exact_mult_int, exact_mult_float).empty());
}

TEST_CASE("census of the 0x8000 constant: 24 records, each low by one") {
    const std::vector<MismatchRecord> records = mismatch_census(approx_mult_8000, exact_mult_int);
    REQUIRE(records.size() == 24);
    for (const MismatchRecord& m : records) {
        CHECK(int(m.want) - int(m.got) == 1);
        CHECK(m.got == approx_mult_8000(m.alpha, m.channel));
        CHECK(m.want == exact_mult_int(m.alpha, m.channel));
    }

    // (alpha ascending, channel ascending), strictly: the list diffs
    // cleanly across implementations.
    for (std::size_t i = 1; i < records.size(); ++i) {
        const bool increasing =
            records[i - 1].alpha < records[i].alpha ||
            (records[i - 1].alpha == records[i].alpha && records[i - 1].channel < records[i].channel);
        CHECK(increasing);
    }

    const bool has_253_191 = std::any_of(records.begin(), records.end(), [](const MismatchRecord& m) {
        return m.alpha == 253 && m.channel == 191;
    });
    CHECK(has_253_191);
}
