// SPDX-License-Identifier: MIT

#include <doctest.h>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fastalpha/io.hpp"
#include "fastalpha/rng.hpp"

using namespace fastalpha;

namespace {

std::string bytes(std::initializer_list<unsigned> values) {
    std::string s;
    s.reserve(values.size());
    for (const unsigned v : values) s.push_back(static_cast<char>(v));
    return s;
}

template <typename Reader>
IoErrc code_of(const std::string& input, Reader reader) {
    std::istringstream in(input);
    try {
        reader(in);
    } catch (const IoError& e) {
        return e.code();
    }
    FAIL("expected an IoError");
    return IoErrc::io_failure;
}

std::string write_to_string(const PixelBuffer& buf, ImageFormat format) {
    std::ostringstream out;
    write_image(out, buf, format);
    return out.str();
}

PixelBuffer read_from_string(const std::string& data) {
    std::istringstream in(data);
    return read_image(in);
}

}  // namespace

TEST_CASE("raw: empty buffer is exactly 12 bytes") {
    const std::string data = write_to_string(PixelBuffer{}, ImageFormat::raw);
    CHECK(data == "RGBA" + bytes({0, 0, 0, 0, 0, 0, 0, 0}));
    const PixelBuffer back = read_from_string(data);
    CHECK(back.width == 0);
    CHECK(back.height == 0);
    CHECK(back.pixels.empty());
}

TEST_CASE("raw: byte order maps onto the pixel lanes") {
    const std::string data =
        "RGBA" + bytes({1, 0, 0, 0, 1, 0, 0, 0}) + bytes({0xC8, 0x55, 0x25, 0x80});
    const PixelBuffer buf = read_from_string(data);
    REQUIRE(buf.pixels.size() == 1);
    CHECK(buf.pixels[0] == Rgba32{0x802555C8u});
    CHECK(write_to_string(buf, ImageFormat::raw) == data);
}

TEST_CASE("raw: distinct errors for distinct defects") {
    CHECK(code_of("RG", read_raw) == IoErrc::truncated_header);
    CHECK(code_of("RGBX" + bytes({1, 0, 0, 0, 1, 0, 0, 0}), read_raw) == IoErrc::bad_magic);
    CHECK(code_of("RGBA" + bytes({1, 0, 0}), read_raw) == IoErrc::truncated_header);
    // declared 2x1 but only one pixel present
    CHECK(code_of("RGBA" + bytes({2, 0, 0, 0, 1, 0, 0, 0}) + bytes({1, 2, 3, 4}), read_raw) ==
          IoErrc::payload_mismatch);
    // truncated mid-pixel
    CHECK(code_of("RGBA" + bytes({1, 0, 0, 0, 1, 0, 0, 0}) + bytes({1, 2}), read_raw) ==
          IoErrc::payload_mismatch);
    // 0xffffffff * 0xffffffff pixels cannot be addressed
    CHECK(code_of("RGBA" + bytes({0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff}), read_raw) ==
          IoErrc::dimension_overflow);
}

TEST_CASE("pam: minimal 1x1 file") {
    const std::string data =
        "P7\nWIDTH 1\nHEIGHT 1\nDEPTH 4\nMAXVAL 255\nTUPLTYPE RGB_ALPHA\nENDHDR\n" +
        bytes({0xC8, 0x55, 0x25, 0x80});
    ImageFormat format{};
    std::istringstream in(data);
    const PixelBuffer buf = read_image(in, &format);
    CHECK(format == ImageFormat::pam);
    REQUIRE(buf.pixels.size() == 1);
    CHECK(buf.pixels[0] == Rgba32{0x802555C8u});
    CHECK(write_to_string(buf, ImageFormat::pam) == data);
}

TEST_CASE("pam: comments and token order are tolerated") {
    const std::string data = "P7\n# made by hand\nHEIGHT 1\nWIDTH 1\nMAXVAL 255\nDEPTH 4\n"
                             "TUPLTYPE RGB_ALPHA\n# one pixel follows\nENDHDR\n" +
                             bytes({1, 2, 3, 4});
    std::istringstream in(data);
    const PixelBuffer buf = read_pam(in);
    REQUIRE(buf.pixels.size() == 1);
    CHECK(buf.pixels[0] == Rgba32::from_lanes(1, 2, 3, 4));
}

TEST_CASE("pam: distinct errors for distinct defects") {
    const std::string good_header = "P7\nWIDTH 1\nHEIGHT 1\nDEPTH 4\nMAXVAL 255\nTUPLTYPE RGB_ALPHA\n";
    CHECK(code_of("", read_pam) == IoErrc::truncated_header);
    CHECK(code_of("P6\n", read_pam) == IoErrc::bad_magic);
    CHECK(code_of("P7\nWIDTH 1\n", read_pam) == IoErrc::truncated_header);  // no ENDHDR
    CHECK(code_of("P7\nWIDTH 1\nHEIGHT 1\nDEPTH 4\nMAXVAL 255\nENDHDR\n", read_pam) ==
          IoErrc::malformed_header);  // TUPLTYPE missing
    CHECK(code_of("P7\nWIDTH x\n", read_pam) == IoErrc::malformed_header);
    CHECK(code_of("P7\nBITS 8\n", read_pam) == IoErrc::malformed_header);
    CHECK(code_of("P7\nWIDTH 1\nHEIGHT 1\nDEPTH 3\nMAXVAL 255\nTUPLTYPE RGB_ALPHA\nENDHDR\n",
                  read_pam) == IoErrc::unsupported_format);
    CHECK(code_of("P7\nWIDTH 1\nHEIGHT 1\nDEPTH 4\nMAXVAL 65535\nTUPLTYPE RGB_ALPHA\nENDHDR\n",
                  read_pam) == IoErrc::unsupported_format);
    CHECK(code_of("P7\nWIDTH 1\nHEIGHT 1\nDEPTH 4\nMAXVAL 255\nTUPLTYPE RGB\nENDHDR\n", read_pam) ==
          IoErrc::unsupported_format);
    CHECK(code_of(good_header + "ENDHDR\n" + bytes({1, 2}), read_pam) == IoErrc::payload_mismatch);
}

TEST_CASE("round-trip identity on random buffers, both formats") {
    SplitMix64 rng(21);
    for (int i = 0; i < 40; ++i) {
        const std::uint32_t w = std::uint32_t(rng.next() % 65);
        const std::uint32_t h = std::uint32_t(rng.next() % 65);
        const PixelBuffer buf = random_buffer(w, h, rng);
        for (const ImageFormat format : {ImageFormat::raw, ImageFormat::pam}) {
            const PixelBuffer back = read_from_string(write_to_string(buf, format));
            REQUIRE(back == buf);
        }
    }
}

TEST_CASE("cross-format rewrites preserve every pixel") {
    SplitMix64 rng(22);
    const PixelBuffer buf = random_buffer(33, 9, rng);
    const PixelBuffer via_raw = read_from_string(write_to_string(buf, ImageFormat::raw));
    const PixelBuffer via_pam = read_from_string(write_to_string(via_raw, ImageFormat::pam));
    const PixelBuffer again = read_from_string(write_to_string(via_pam, ImageFormat::raw));
    CHECK(via_pam == buf);
    CHECK(again == buf);
}

TEST_CASE("read_image sniffs the magic") {
    const auto sniff = [](std::istream& in) { return read_image(in); };
    CHECK(code_of("JUNK", sniff) == IoErrc::bad_magic);
    CHECK(code_of("", sniff) == IoErrc::truncated_header);
}

TEST_CASE("PixelBuffer::make rejects unaddressable dimensions") {
    CHECK_THROWS_AS(PixelBuffer::make(0xffffffffu, 0xffffffffu), std::length_error);
    const PixelBuffer zero = PixelBuffer::make(0, 7);
    CHECK(zero.pixels.empty());
}
