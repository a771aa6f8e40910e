// SPDX-License-Identifier: MIT
//
// fastalpha — division-free 8-bit alpha blending toolkit.
//
//   verify       run every exhaustive equivalence suite
//   census       list where the 0x8000 rounding constant falls short
//   premultiply  premultiply an image file (raw or PAM)
//   over         composite one premultiplied image over another
//   bench        compare the throughput of the four premultiply paths
//   expand       print the repeating fraction value/255
//
// Exit codes: 0 pass, 1 verification or contract failure, 2 usage,
// format, or internal error.

#include <array>
#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fastalpha/io.hpp"
#include "fastalpha/rng.hpp"
#include "fastalpha/scalar.hpp"
#include "fastalpha/series.hpp"
#include "fastalpha/swar.hpp"

namespace {

using namespace fastalpha;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// One verification suite's outcome; pass means zero mismatches.
struct CliReport {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;

    bool pass() const { return mismatches == 0; }
};

void print_report(const CliReport& r) {
    std::printf("%-44s cases=%-10" PRIu64 " mismatches=%" PRIu64 "\n", r.name.c_str(), r.cases,
                r.mismatches);
}

CliReport scalar_suite(std::string name, ChannelMult candidate, ChannelMult oracle) {
    CliReport r{std::move(name), 0, 0};
    for (unsigned a = 0; a < 256; ++a) {
        for (unsigned c = 0; c < 256; ++c) {
            ++r.cases;
            if (candidate(Channel(a), Channel(c)) != oracle(Channel(a), Channel(c))) {
                ++r.mismatches;
            }
        }
    }
    return r;
}

// Sibling fill values for the lane sweeps: both extremes plus one fixed
// draw from the default pixel stream.
std::array<Channel, 3> sibling_fills() {
    SplitMix64 rng;
    return {Channel(0x00), Channel(0xff), Channel(rng.next() & 0xff)};
}

// Sweeps one color lane position at a time through all (alpha, value)
// pairs and demands the whole premultiplied pixel equal the scalar
// reference: any carry escaping a lane would show up here.
CliReport premultiply_lane_suite() {
    CliReport r{"premultiply_pixel lanes vs fast_mult_16", 0, 0};
    for (const Channel fill : sibling_fills()) {
        for (unsigned pos = 0; pos < 3; ++pos) {
            for (unsigned a = 0; a < 256; ++a) {
                for (unsigned c = 0; c < 256; ++c) {
                    Channel lanes[3] = {fill, fill, fill};
                    lanes[pos] = Channel(c);
                    const Rgba32 p = Rgba32::from_lanes(lanes[0], lanes[1], lanes[2], Channel(a));
                    ++r.cases;
                    if (premultiply_pixel(p) != premultiply_pixel_scalar(p)) {
                        ++r.mismatches;
                    }
                }
            }
        }
    }
    return r;
}

CliReport pixel_mul_lane_suite() {
    CliReport r{"pixel_mul lanes vs fast_mult_16", 0, 0};
    for (const Channel fill : sibling_fills()) {
        for (unsigned pos = 0; pos < 4; ++pos) {
            for (unsigned a = 0; a < 256; ++a) {
                for (unsigned c = 0; c < 256; ++c) {
                    Channel lanes[4] = {fill, fill, fill, fill};
                    lanes[pos] = Channel(c);
                    const Rgba32 p = Rgba32::from_lanes(lanes[0], lanes[1], lanes[2], lanes[3]);
                    const Rgba32 want =
                        Rgba32::from_lanes(fast_mult_16(Channel(a), lanes[0]), fast_mult_16(Channel(a), lanes[1]),
                                           fast_mult_16(Channel(a), lanes[2]), fast_mult_16(Channel(a), lanes[3]));
                    ++r.cases;
                    if (pixel_mul(p, Channel(a)) != want) {
                        ++r.mismatches;
                    }
                }
            }
        }
    }
    return r;
}

CliReport w64_suite(std::uint64_t random_count) {
    CliReport r{"premultiply_pixel_w64 vs premultiply_pixel", 0, 0};
    for (unsigned a = 0; a < 256; ++a) {
        for (unsigned c = 0; c < 256; ++c) {
            const Rgba32 p = Rgba32::from_lanes(Channel(c), Channel(c), Channel(c), Channel(a));
            ++r.cases;
            if (premultiply_pixel_w64(p) != premultiply_pixel(p)) {
                ++r.mismatches;
            }
        }
    }
    SplitMix64 rng;
    for (std::uint64_t i = 0; i < random_count; ++i) {
        const Rgba32 p = random_pixel(rng);
        ++r.cases;
        if (premultiply_pixel_w64(p) != premultiply_pixel(p)) {
            ++r.mismatches;
        }
    }
    return r;
}

int cmd_verify() {
    std::vector<CliReport> reports;
    reports.push_back(scalar_suite("fast_mult_24 vs exact_mult_float", fast_mult_24, exact_mult_float));
    reports.push_back(scalar_suite("fast_mult_16 vs exact_mult_float", fast_mult_16, exact_mult_float));
    reports.push_back(scalar_suite("exact_mult_int vs exact_mult_float", exact_mult_int, exact_mult_float));
    reports.push_back(premultiply_lane_suite());
    reports.push_back(pixel_mul_lane_suite());
    reports.push_back(w64_suite(10'000'000));

    bool all_pass = true;
    for (const CliReport& r : reports) {
        print_report(r);
        all_pass = all_pass && r.pass();
    }
    std::printf("verify: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? kExitPass : kExitFail;
}

int cmd_census() {
    const std::vector<MismatchRecord> records = mismatch_census(approx_mult_8000, exact_mult_int);
    bool all_low_by_one = true;
    for (const MismatchRecord& m : records) {
        std::printf("alpha=%u c=%u got=%u want=%u\n", m.alpha, m.channel, m.got, m.want);
        if (int(m.want) - int(m.got) != 1) {
            all_low_by_one = false;
        }
    }
    std::printf("total=%zu\n", records.size());
    if (records.size() != 24 || !all_low_by_one) {
        std::fprintf(stderr, "census: expected exactly 24 mismatches, each low by one\n");
        return kExitFail;
    }
    return kExitPass;
}

const char* format_name(ImageFormat f) { return f == ImageFormat::raw ? "raw" : "pam"; }

int cmd_premultiply(const std::string& in_path, const std::string& out_path, PremultKernel kernel) {
    try {
        ImageFormat format{};
        PixelBuffer buf = load_image(in_path, &format);
        PremultOptions opts;
        opts.kernel = kernel;
        premultiply_buffer(buf, opts);
        save_image(out_path, buf, format);
        std::printf("premultiplied %ux%u %s image -> %s\n", buf.width, buf.height,
                    format_name(format), out_path.c_str());
        return kExitPass;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}

int cmd_over(const std::string& src_path, const std::string& dst_path, const std::string& out_path) {
    try {
        ImageFormat dst_format{};
        const PixelBuffer src = load_image(src_path);
        PixelBuffer dst = load_image(dst_path, &dst_format);
        if (src.width != dst.width || src.height != dst.height) {
            std::fprintf(stderr, "error: %s is %ux%u but %s is %ux%u\n", src_path.c_str(), src.width,
                         src.height, dst_path.c_str(), dst.width, dst.height);
            return kExitFail;
        }
        if (!is_premultiplied(src)) {
            std::fprintf(stderr, "error: %s is not premultiplied\n", src_path.c_str());
            return kExitFail;
        }
        if (!is_premultiplied(dst)) {
            std::fprintf(stderr, "error: %s is not premultiplied\n", dst_path.c_str());
            return kExitFail;
        }
        over_buffer(src, dst);
        save_image(out_path, dst, dst_format);
        std::printf("composited %ux%u image -> %s\n", dst.width, dst.height, out_path.c_str());
        return kExitPass;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}

int cmd_bench(std::uint32_t pixels, std::uint32_t reps, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const PixelBuffer src = random_buffer(pixels, 1, rng);

    struct Path {
        const char* name;
        PremultKernel kernel;
    };
    constexpr std::array<Path, 4> paths{{{"swar32", PremultKernel::swar32},
                                         {"swar64", PremultKernel::swar64},
                                         {"scalar", PremultKernel::scalar},
                                         {"float", PremultKernel::float_ref}}};

    std::array<PixelBuffer, 4> results;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        PremultOptions opts;
        opts.kernel = paths[i].kernel;
        PixelBuffer work;
        std::chrono::nanoseconds spent{0};
        for (std::uint32_t rep = 0; rep < reps; ++rep) {
            work = src;
            const auto t0 = std::chrono::steady_clock::now();
            premultiply_buffer(work, opts);
            spent += std::chrono::steady_clock::now() - t0;
        }
        const double secs = std::chrono::duration<double>(spent).count();
        const double throughput = secs > 0 ? double(pixels) * reps / secs : 0.0;
        std::printf("%-7s %14.0f pixels/s  (%u pixels x %u reps in %.4f s)\n", paths[i].name,
                    throughput, pixels, reps, secs);
        results[i] = std::move(work);
    }

    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].pixels != results[0].pixels) {
            std::fprintf(stderr, "bench: %s output differs from %s\n", paths[i].name, paths[0].name);
            return kExitFail;
        }
    }
    std::printf("outputs: identical across all four paths\n");
    return kExitPass;
}

int cmd_expand(const std::string& value_str, unsigned terms) {
    unsigned long value = 0;
    std::size_t used = 0;
    try {
        value = std::stoul(value_str, &used, 0);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value_str.size() || value > 255) {
        std::fprintf(stderr, "error: value must be an integer in 0..255, got \"%s\"\n",
                     value_str.c_str());
        return kExitUsage;
    }

    const std::vector<std::uint8_t> digits = repeating_digits(Channel(value), terms);
    std::string line = "0.";
    for (const std::uint8_t d : digits) {
        char pair[3];
        std::snprintf(pair, sizeof pair, "%02x", d);
        line += pair;
    }
    const SeriesExpansion e = series_div255(value, terms);
    std::printf("%s\n", line.c_str());
    std::printf("tail = %" PRIu64 "/%s\n", e.tail_num, u128_to_string(e.tail_den).c_str());
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"division-free 8-bit alpha blending toolkit"};
    app.require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "run every exhaustive equivalence suite");

    CLI::App* census =
        app.add_subcommand("census", "list where the 0x8000 rounding constant falls short");

    std::string in_path, out_path;
    bool use_w64 = false, use_oracle = false;
    CLI::App* premultiply = app.add_subcommand("premultiply", "premultiply an image file");
    premultiply->add_option("input", in_path, "input image (raw or PAM)")->required();
    premultiply->add_option("output", out_path, "output image, same format as the input")->required();
    CLI::Option* w64_flag = premultiply->add_flag("--w64", use_w64, "use the four-lane 64-bit path");
    premultiply->add_flag("--oracle", use_oracle, "use the floating-point reference path")
        ->excludes(w64_flag);

    std::string src_path, dst_path, over_out;
    CLI::App* over =
        app.add_subcommand("over", "composite a premultiplied image over another");
    over->add_option("src", src_path, "source image (premultiplied)")->required();
    over->add_option("dst", dst_path, "destination image (premultiplied)")->required();
    over->add_option("out", over_out, "output image, same format as dst")->required();

    std::uint32_t bench_pixels = 1u << 20;
    std::uint32_t bench_reps = 5;
    std::uint64_t bench_seed = 0;
    CLI::App* bench =
        app.add_subcommand("bench", "compare the throughput of the four premultiply paths");
    bench->add_option("--pixels", bench_pixels, "pixels per buffer")
        ->check(CLI::Range(std::uint32_t(1), std::numeric_limits<std::uint32_t>::max()));
    bench->add_option("--reps", bench_reps, "repetitions per path")
        ->check(CLI::Range(std::uint32_t(1), std::numeric_limits<std::uint32_t>::max()));
    bench->add_option("--seed", bench_seed, "splitmix64 seed for the pixel stream");

    std::string expand_value;
    unsigned expand_terms = 4;
    CLI::App* expand = app.add_subcommand("expand", "print the repeating fraction value/255");
    expand->add_option("value", expand_value, "component value, 0..255 (decimal or 0x hex)")
        ->required();
    expand->add_option("--terms", expand_terms, "base-256 digits to print")
        ->check(CLI::Range(1u, 8u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify();
        }
        if (census->parsed()) {
            return cmd_census();
        }
        if (premultiply->parsed()) {
            const PremultKernel kernel = use_w64      ? PremultKernel::swar64
                                         : use_oracle ? PremultKernel::float_ref
                                                      : PremultKernel::swar32;
            return cmd_premultiply(in_path, out_path, kernel);
        }
        if (over->parsed()) {
            return cmd_over(src_path, dst_path, over_out);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_pixels, bench_reps, bench_seed);
        }
        if (expand->parsed()) {
            return cmd_expand(expand_value, expand_terms);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
