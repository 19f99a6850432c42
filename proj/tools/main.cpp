/*
 * ct4 command-line tool: transform PGM images with either census kernel,
 * compare the two transforms, print texture metrics, and benchmark
 * throughput. Links only the public C API.
 *
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ct4/ct4.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;

struct ImageHandle {
    ct4_image* ptr = nullptr;

    ImageHandle() = default;
    ImageHandle(const ImageHandle&) = delete;
    ImageHandle& operator=(const ImageHandle&) = delete;
    ~ImageHandle() { ct4_image_free(ptr); }
};

// One-line diagnostic on stderr, mapped to the documented exit codes.
int report_error(ct4_status status)
{
    std::cerr << "ct4: " << ct4_last_error_message() << "\n";
    switch (status) {
    case CT4_ERR_IO:
        return kExitIo;
    case CT4_ERR_FORMAT:
        return kExitFormat;
    default:
        return kExitUsage;
    }
}

int report_error(const std::string& message, int exit_code)
{
    std::cerr << "ct4: " << message << "\n";
    return exit_code;
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string format_checksum(uint64_t v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%016" PRIx64, v);
    return buf;
}

json metrics_to_json(const ct4_metrics& m)
{
    return json{{"rms_contrast", m.rms_contrast},
                {"mean_gradient_magnitude", m.mean_gradient_magnitude},
                {"shannon_entropy_bits", m.shannon_entropy_bits},
                {"gradient_defined", m.gradient_defined != 0}};
}

std::string metrics_to_text(const ct4_metrics& m)
{
    std::string out;
    out += "rms_contrast            " + format_double(m.rms_contrast) + "\n";
    out += "mean_gradient_magnitude " + format_double(m.mean_gradient_magnitude) + "\n";
    out += "shannon_entropy_bits    " + format_double(m.shannon_entropy_bits) + "\n";
    if (!m.gradient_defined) {
        out += "note: gradient undefined for images smaller than 2x2; reported as 0\n";
    }
    return out;
}

std::string comparison_to_text(const ct4_metrics triple[3])
{
    const char* names[3] = {"input", "ct3", "ct4x4"};
    std::string out = "metric                  ";
    for (const char* n : names) {
        char cell[32];
        std::snprintf(cell, sizeof(cell), "%14s", n);
        out += cell;
    }
    out += "\n";
    auto row = [&](const char* label, auto get) {
        char cell[64];
        std::snprintf(cell, sizeof(cell), "%-24s", label);
        out += cell;
        for (int i = 0; i < 3; i++) {
            std::snprintf(cell, sizeof(cell), "%14.6f", get(triple[i]));
            out += cell;
        }
        out += "\n";
    };
    row("rms_contrast", [](const ct4_metrics& m) { return m.rms_contrast; });
    row("mean_gradient_magnitude",
        [](const ct4_metrics& m) { return m.mean_gradient_magnitude; });
    row("shannon_entropy_bits", [](const ct4_metrics& m) { return m.shannon_entropy_bits; });
    return out;
}

struct TransformOptions {
    std::string kernel;
    std::string input;
    std::string output;
    std::string pad = "replicate";
    int threads = 1;
};

int run_transform(const TransformOptions& opt)
{
    ImageHandle in;
    if (ct4_status s = ct4_image_read_pgm(opt.input.c_str(), &in.ptr); s != CT4_OK) {
        return report_error(s);
    }
    ct4_kernel kernel = opt.kernel == "3x3" ? CT4_KERNEL_3X3 : CT4_KERNEL_4X4;
    ImageHandle result;
    if (ct4_status s =
            ct4_image_transform(in.ptr, kernel, CT4_PAD_REPLICATE, opt.threads, &result.ptr);
        s != CT4_OK) {
        return report_error(s);
    }
    if (ct4_status s = ct4_image_write_pgm(result.ptr, opt.output.c_str(), CT4_PGM_BINARY_P5);
        s != CT4_OK) {
        return report_error(s);
    }
    return 0;
}

struct CompareOptions {
    std::string input;
    std::string out_dir;
    std::string format = "text";
};

int run_compare(const CompareOptions& opt)
{
    ImageHandle in;
    if (ct4_status s = ct4_image_read_pgm(opt.input.c_str(), &in.ptr); s != CT4_OK) {
        return report_error(s);
    }

    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec) {
        return report_error("cannot create directory " + opt.out_dir + ": " + ec.message(),
                            kExitIo);
    }

    const std::filesystem::path dir(opt.out_dir);
    ImageHandle ct3_out, ct4_out;
    if (ct4_status s =
            ct4_image_transform(in.ptr, CT4_KERNEL_3X3, CT4_PAD_REPLICATE, 1, &ct3_out.ptr);
        s != CT4_OK) {
        return report_error(s);
    }
    if (ct4_status s =
            ct4_image_transform(in.ptr, CT4_KERNEL_4X4, CT4_PAD_REPLICATE, 1, &ct4_out.ptr);
        s != CT4_OK) {
        return report_error(s);
    }
    if (ct4_status s =
            ct4_image_write_pgm(ct3_out.ptr, (dir / "ct3.pgm").c_str(), CT4_PGM_BINARY_P5);
        s != CT4_OK) {
        return report_error(s);
    }
    if (ct4_status s =
            ct4_image_write_pgm(ct4_out.ptr, (dir / "ct4x4.pgm").c_str(), CT4_PGM_BINARY_P5);
        s != CT4_OK) {
        return report_error(s);
    }

    ct4_metrics triple[3];
    if (ct4_status s = ct4_image_compare(in.ptr, triple); s != CT4_OK) {
        return report_error(s);
    }

    std::string report;
    std::filesystem::path report_path;
    if (opt.format == "json") {
        report_path = dir / "report.json";
        json doc{{"input", metrics_to_json(triple[0])},
                 {"ct3", metrics_to_json(triple[1])},
                 {"ct4x4", metrics_to_json(triple[2])}};
        report = doc.dump(2) + "\n";
    } else {
        report_path = dir / "report.txt";
        report = comparison_to_text(triple);
    }
    std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
    out << report;
    out.flush();
    if (!out) {
        return report_error("cannot write " + report_path.string(), kExitIo);
    }
    std::cout << report;
    return 0;
}

struct MetricsOptions {
    std::string input;
    std::string format = "text";
};

int run_metrics(const MetricsOptions& opt)
{
    ImageHandle in;
    if (ct4_status s = ct4_image_read_pgm(opt.input.c_str(), &in.ptr); s != CT4_OK) {
        return report_error(s);
    }
    ct4_metrics m;
    if (ct4_status s = ct4_image_metrics(in.ptr, &m); s != CT4_OK) {
        return report_error(s);
    }
    if (opt.format == "json") {
        std::cout << metrics_to_json(m).dump(2) << "\n";
    } else {
        std::cout << metrics_to_text(m);
    }
    return 0;
}

struct BenchOptions {
    std::string size;
    long long iters = 0;
    uint64_t seed = 1;
    std::string format = "text";
};

// Wall-clock one kernel over `iters` runs; returns seconds.
double time_kernel(const ct4_image* img, ct4_kernel kernel, long long iters, ct4_status* status)
{
    auto begin = std::chrono::steady_clock::now();
    for (long long i = 0; i < iters; i++) {
        ct4_image* out = nullptr;
        *status = ct4_image_transform(img, kernel, CT4_PAD_REPLICATE, 1, &out);
        ct4_image_free(out);
        if (*status != CT4_OK) {
            return 0.0;
        }
    }
    auto end = std::chrono::steady_clock::now();
    double seconds = std::chrono::duration<double>(end - begin).count();
    return seconds > 1e-9 ? seconds : 1e-9;
}

int run_bench(const BenchOptions& opt)
{
    unsigned width = 0, height = 0;
    if (std::sscanf(opt.size.c_str(), "%ux%u", &width, &height) != 2 || width == 0 ||
        height == 0) {
        return report_error("--size expects <W>x<H> with positive dimensions, got \"" +
                                opt.size + "\"",
                            kExitUsage);
    }
    if (opt.iters <= 0) {
        return report_error("--iters must be positive", kExitUsage);
    }

    ImageHandle img;
    if (ct4_status s = ct4_image_random(width, height, opt.seed, &img.ptr); s != CT4_OK) {
        return report_error(s);
    }
    uint64_t checksum = ct4_image_checksum(img.ptr);

    ct4_status status = CT4_OK;
    double ct3_seconds = time_kernel(img.ptr, CT4_KERNEL_3X3, opt.iters, &status);
    if (status != CT4_OK) {
        return report_error(status);
    }
    double ct4_seconds = time_kernel(img.ptr, CT4_KERNEL_4X4, opt.iters, &status);
    if (status != CT4_OK) {
        return report_error(status);
    }

    double megapixels = static_cast<double>(width) * height * opt.iters / 1e6;
    double ct3_mpps = megapixels / ct3_seconds;
    double ct4_mpps = megapixels / ct4_seconds;
    double ratio = ct4_mpps / ct3_mpps;

    if (opt.format == "json") {
        json doc{{"width", width},
                 {"height", height},
                 {"iters", opt.iters},
                 {"seed", opt.seed},
                 {"input_checksum", format_checksum(checksum)},
                 {"ct3", {{"seconds", ct3_seconds}, {"megapixels_per_second", ct3_mpps}}},
                 {"ct4x4", {{"seconds", ct4_seconds}, {"megapixels_per_second", ct4_mpps}}},
                 {"ratio_ct4x4_vs_ct3", ratio}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "size                      " << width << "x" << height << "\n"
                  << "iters                     " << opt.iters << "\n"
                  << "seed                      " << opt.seed << "\n"
                  << "input_checksum            " << format_checksum(checksum) << "\n"
                  << "ct3_seconds               " << format_double(ct3_seconds) << "\n"
                  << "ct3_megapixels_per_sec    " << format_double(ct3_mpps) << "\n"
                  << "ct4x4_seconds             " << format_double(ct4_seconds) << "\n"
                  << "ct4x4_megapixels_per_sec  " << format_double(ct4_mpps) << "\n"
                  << "ratio_ct4x4_vs_ct3        " << format_double(ratio) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"census transform toolkit (3x3 and tiled 4x4 kernels)"};
    app.set_version_flag("--version", ct4_version());
    app.require_subcommand(1);

    TransformOptions transform_opt;
    CLI::App* transform = app.add_subcommand("transform", "census-transform a PGM image");
    transform->add_option("--kernel", transform_opt.kernel, "census kernel")
        ->required()
        ->check(CLI::IsMember({"3x3", "4x4"}));
    transform->add_option("--input", transform_opt.input, "input PGM (P2 or P5)")->required();
    transform->add_option("--output", transform_opt.output, "output PGM (written as P5)")
        ->required();
    transform->add_option("--pad", transform_opt.pad, "border handling")
        ->check(CLI::IsMember({"replicate"}));
    transform
        ->add_option("--threads", transform_opt.threads,
                     "worker threads; output is bit-identical for any value")
        ->check(CLI::PositiveNumber);

    CompareOptions compare_opt;
    CLI::App* compare =
        app.add_subcommand("compare", "run both kernels and report metrics side by side");
    compare->add_option("--input", compare_opt.input, "input PGM")->required();
    compare->add_option("--out-dir", compare_opt.out_dir,
                        "directory for ct3.pgm, ct4x4.pgm and report.{txt|json}")
        ->required();
    compare->add_option("--format", compare_opt.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    MetricsOptions metrics_opt;
    CLI::App* metrics = app.add_subcommand("metrics", "print texture metrics for a PGM image");
    metrics->add_option("--input", metrics_opt.input, "input PGM")->required();
    metrics->add_option("--format", metrics_opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    BenchOptions bench_opt;
    CLI::App* bench =
        app.add_subcommand("bench", "measure transform throughput on a seeded random image");
    bench->add_option("--size", bench_opt.size, "image size as <W>x<H>")->required();
    bench->add_option("--iters", bench_opt.iters, "iterations per kernel")->required();
    bench->add_option("--seed", bench_opt.seed, "64-bit LCG seed");
    bench->add_option("--format", bench_opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ct4: " << e.what() << "\n";
        return kExitUsage;
    }

    if (transform->parsed()) {
        return run_transform(transform_opt);
    }
    if (compare->parsed()) {
        return run_compare(compare_opt);
    }
    if (metrics->parsed()) {
        return run_metrics(metrics_opt);
    }
    return run_bench(bench_opt);
}
