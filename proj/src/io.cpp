// SPDX-License-Identifier: MIT

#include "fastalpha/io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace fastalpha {
namespace {

[[noreturn]] void fail(IoErrc code, const std::string& msg) { throw IoError(code, msg); }

std::uint32_t read_u32le(const unsigned char* b) {
    return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) |
           (std::uint32_t(b[3]) << 24);
}

// width*height must fit addressable memory with 4 bytes per pixel.
std::uint64_t checked_pixel_count(std::uint32_t w, std::uint32_t h, const char* format_name) {
    const std::uint64_t count = std::uint64_t(w) * std::uint64_t(h);
    if (count > std::numeric_limits<std::size_t>::max() / 4) {
        fail(IoErrc::dimension_overflow, std::string(format_name) + ": " + std::to_string(w) + "x" +
                                             std::to_string(h) + " pixels cannot be addressed");
    }
    return count;
}

// R,G,B,A byte quadruples are exactly little-endian Rgba32 words.
void read_raster(std::istream& in, PixelBuffer& buf, std::uint64_t count, const char* what) {
    buf.pixels.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1u << 20)));
    std::array<unsigned char, 16384> chunk;
    std::uint64_t remaining = count;
    while (remaining > 0) {
        const std::size_t want_pixels =
            static_cast<std::size_t>(std::min<std::uint64_t>(remaining, chunk.size() / 4));
        in.read(reinterpret_cast<char*>(chunk.data()), std::streamsize(want_pixels * 4));
        const std::size_t got_bytes = static_cast<std::size_t>(in.gcount());
        for (std::size_t i = 0; i + 4 <= got_bytes; i += 4) {
            buf.pixels.push_back(Rgba32{read_u32le(&chunk[i])});
        }
        if (got_bytes < want_pixels * 4) {
            fail(IoErrc::payload_mismatch,
                 std::string(what) + " after " + std::to_string(buf.pixels.size()) + " of " +
                     std::to_string(count) + " pixels");
        }
        remaining -= want_pixels;
    }
}

void write_raster(std::ostream& out, const PixelBuffer& buf) {
    std::array<unsigned char, 16384> chunk;
    std::size_t fill = 0;
    for (const Rgba32 p : buf.pixels) {
        chunk[fill++] = static_cast<unsigned char>(p.bits & 0xffu);
        chunk[fill++] = static_cast<unsigned char>((p.bits >> 8) & 0xffu);
        chunk[fill++] = static_cast<unsigned char>((p.bits >> 16) & 0xffu);
        chunk[fill++] = static_cast<unsigned char>(p.bits >> 24);
        if (fill == chunk.size()) {
            out.write(reinterpret_cast<const char*>(chunk.data()), std::streamsize(fill));
            fill = 0;
        }
    }
    if (fill > 0) {
        out.write(reinterpret_cast<const char*>(chunk.data()), std::streamsize(fill));
    }
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

std::uint32_t parse_pam_dimension(std::istringstream& ls, const std::string& token) {
    long long v = -1;
    if (!(ls >> v) || v < 0) {
        fail(IoErrc::malformed_header, "pam: " + token + " needs a non-negative integer");
    }
    if (v > 0xffffffffll) {
        fail(IoErrc::dimension_overflow, "pam: " + token + " " + std::to_string(v) + " exceeds 32 bits");
    }
    return static_cast<std::uint32_t>(v);
}

void reject_trailing_tokens(std::istringstream& ls, const std::string& token) {
    std::string extra;
    if (ls >> extra && extra[0] != '#') {
        fail(IoErrc::malformed_header, "pam: unexpected \"" + extra + "\" after " + token);
    }
}

}  // namespace

PixelBuffer read_raw(std::istream& in) {
    unsigned char header[12];
    in.read(reinterpret_cast<char*>(header), 4);
    if (in.gcount() < 4) {
        fail(IoErrc::truncated_header, "raw: stream ends inside the 4-byte magic");
    }
    if (std::memcmp(header, "RGBA", 4) != 0) {
        fail(IoErrc::bad_magic, "raw: magic is not \"RGBA\"");
    }
    in.read(reinterpret_cast<char*>(header + 4), 8);
    if (in.gcount() < 8) {
        fail(IoErrc::truncated_header, "raw: stream ends inside the dimension header");
    }
    PixelBuffer buf;
    buf.width = read_u32le(header + 4);
    buf.height = read_u32le(header + 8);
    const std::uint64_t count = checked_pixel_count(buf.width, buf.height, "raw");
    read_raster(in, buf, count, "raw: payload ends");
    return buf;
}

void write_raw(std::ostream& out, const PixelBuffer& buf) {
    const unsigned char header[12] = {
        'R',
        'G',
        'B',
        'A',
        static_cast<unsigned char>(buf.width & 0xffu),
        static_cast<unsigned char>((buf.width >> 8) & 0xffu),
        static_cast<unsigned char>((buf.width >> 16) & 0xffu),
        static_cast<unsigned char>(buf.width >> 24),
        static_cast<unsigned char>(buf.height & 0xffu),
        static_cast<unsigned char>((buf.height >> 8) & 0xffu),
        static_cast<unsigned char>((buf.height >> 16) & 0xffu),
        static_cast<unsigned char>(buf.height >> 24),
    };
    out.write(reinterpret_cast<const char*>(header), sizeof header);
    write_raster(out, buf);
    if (!out) {
        fail(IoErrc::io_failure, "raw: write failed");
    }
}

PixelBuffer read_pam(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        fail(IoErrc::truncated_header, "pam: empty stream");
    }
    strip_cr(line);
    if (line != "P7") {
        fail(IoErrc::bad_magic, "pam: magic is not \"P7\"");
    }

    bool have_width = false, have_height = false, have_depth = false, have_maxval = false;
    bool saw_endhdr = false;
    std::uint32_t width = 0, height = 0, depth = 0, maxval = 0;
    std::string tupltype;

    while (std::getline(in, line)) {
        strip_cr(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string token;
        ls >> token;
        if (token == "ENDHDR") {
            saw_endhdr = true;
            break;
        } else if (token == "WIDTH") {
            width = parse_pam_dimension(ls, token);
            have_width = true;
            reject_trailing_tokens(ls, token);
        } else if (token == "HEIGHT") {
            height = parse_pam_dimension(ls, token);
            have_height = true;
            reject_trailing_tokens(ls, token);
        } else if (token == "DEPTH") {
            depth = parse_pam_dimension(ls, token);
            have_depth = true;
            reject_trailing_tokens(ls, token);
        } else if (token == "MAXVAL") {
            maxval = parse_pam_dimension(ls, token);
            have_maxval = true;
            reject_trailing_tokens(ls, token);
        } else if (token == "TUPLTYPE") {
            // The value runs to the end of the line and may hold spaces.
            std::getline(ls >> std::ws, tupltype);
            while (!tupltype.empty() && (tupltype.back() == ' ' || tupltype.back() == '\t')) {
                tupltype.pop_back();
            }
            if (tupltype.empty()) {
                fail(IoErrc::malformed_header, "pam: TUPLTYPE needs a value");
            }
        } else {
            fail(IoErrc::malformed_header, "pam: unknown header token \"" + token + "\"");
        }
    }
    if (!saw_endhdr) {
        fail(IoErrc::truncated_header, "pam: stream ends before ENDHDR");
    }
    if (!have_width || !have_height || !have_depth || !have_maxval || tupltype.empty()) {
        fail(IoErrc::malformed_header,
             "pam: header must define WIDTH, HEIGHT, DEPTH, MAXVAL and TUPLTYPE");
    }
    if (depth != 4) {
        fail(IoErrc::unsupported_format, "pam: DEPTH " + std::to_string(depth) + " (only 4 is supported)");
    }
    if (maxval != 255) {
        fail(IoErrc::unsupported_format,
             "pam: MAXVAL " + std::to_string(maxval) + " (only 255 is supported)");
    }
    if (tupltype != "RGB_ALPHA") {
        fail(IoErrc::unsupported_format, "pam: TUPLTYPE " + tupltype + " (only RGB_ALPHA is supported)");
    }

    PixelBuffer buf;
    buf.width = width;
    buf.height = height;
    const std::uint64_t count = checked_pixel_count(width, height, "pam");
    read_raster(in, buf, count, "pam: raster truncated");
    return buf;
}

void write_pam(std::ostream& out, const PixelBuffer& buf) {
    out << "P7\nWIDTH " << buf.width << "\nHEIGHT " << buf.height
        << "\nDEPTH 4\nMAXVAL 255\nTUPLTYPE RGB_ALPHA\nENDHDR\n";
    write_raster(out, buf);
    if (!out) {
        fail(IoErrc::io_failure, "pam: write failed");
    }
}

PixelBuffer read_image(std::istream& in, ImageFormat* format) {
    const int first = in.peek();
    if (first == std::char_traits<char>::eof()) {
        fail(IoErrc::truncated_header, "image: empty stream");
    }
    if (first == 'R') {
        if (format) {
            *format = ImageFormat::raw;
        }
        return read_raw(in);
    }
    if (first == 'P') {
        if (format) {
            *format = ImageFormat::pam;
        }
        return read_pam(in);
    }
    fail(IoErrc::bad_magic, "image: unrecognized magic byte");
}

void write_image(std::ostream& out, const PixelBuffer& buf, ImageFormat format) {
    if (format == ImageFormat::raw) {
        write_raw(out, buf);
    } else {
        write_pam(out, buf);
    }
}

PixelBuffer load_image(const std::string& path, ImageFormat* format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(IoErrc::io_failure, "cannot open " + path + " for reading");
    }
    return read_image(in, format);
}

void save_image(const std::string& path, const PixelBuffer& buf, ImageFormat format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(IoErrc::io_failure, "cannot open " + path + " for writing");
    }
    write_image(out, buf, format);
    out.flush();
    if (!out) {
        fail(IoErrc::io_failure, "write to " + path + " failed");
    }
}

}  // namespace fastalpha
