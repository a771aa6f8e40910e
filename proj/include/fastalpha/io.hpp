// SPDX-License-Identifier: MIT
//
// Bit-exact image file formats:
//
//   raw:  magic "RGBA", width u32 LE, height u32 LE, then
//         width*height R,G,B,A byte quadruples, row-major.
//   PAM:  "P7" header with DEPTH 4, MAXVAL 255, TUPLTYPE RGB_ALPHA,
//         then the binary raster in the same R,G,B,A tuple order.
//
// Both map byte order straight onto Rgba32 lanes, so a file round-trips
// bit-exactly through read/write.

#ifndef FASTALPHA_IO_HPP
#define FASTALPHA_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fastalpha/pixel_buffer.hpp"

namespace fastalpha {

enum class IoErrc {
    bad_magic,
    truncated_header,
    malformed_header,
    unsupported_format,
    payload_mismatch,
    dimension_overflow,
    io_failure,
};

class IoError : public std::runtime_error {
public:
    IoError(IoErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    IoErrc code() const noexcept { return code_; }

private:
    IoErrc code_;
};

enum class ImageFormat { raw, pam };

PixelBuffer read_raw(std::istream& in);
void write_raw(std::ostream& out, const PixelBuffer& buf);

PixelBuffer read_pam(std::istream& in);
void write_pam(std::ostream& out, const PixelBuffer& buf);

// Sniffs the magic ("RGBA" vs "P7") and dispatches; reports which
// format was found through `format` when non-null.
PixelBuffer read_image(std::istream& in, ImageFormat* format = nullptr);
void write_image(std::ostream& out, const PixelBuffer& buf, ImageFormat format);

// File-path convenience wrappers. Open failures throw IoError with
// code io_failure.
PixelBuffer load_image(const std::string& path, ImageFormat* format = nullptr);
void save_image(const std::string& path, const PixelBuffer& buf, ImageFormat format);

}  // namespace fastalpha

#endif  // FASTALPHA_IO_HPP
