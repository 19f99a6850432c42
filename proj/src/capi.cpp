/*
 * extern-C shell around the C++ core. Exceptions are mapped to status
 * codes at this boundary and their messages stored per thread.
 *
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "ct4/ct4.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "census.hpp"
#include "image.hpp"
#include "metrics.hpp"
#include "pgm.hpp"
#include "synth.hpp"

struct ct4_image {
    ct4::GrayImage img;
};

namespace {

thread_local std::string g_last_error;

ct4_status fail(ct4_status status, const std::string& message)
{
    g_last_error = message;
    return status;
}

template <typename Fn>
ct4_status guarded(Fn&& fn)
{
    try {
        return fn();
    } catch (const ct4::PgmError& e) {
        return fail(CT4_ERR_FORMAT, e.what());
    } catch (const ct4::IoError& e) {
        return fail(CT4_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CT4_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CT4_ERR_NOMEM, "out of memory");
    } catch (const std::length_error&) {
        return fail(CT4_ERR_NOMEM, "allocation too large");
    } catch (const std::exception& e) {
        return fail(CT4_ERR_INTERNAL, e.what());
    }
}

ct4_status require(bool condition, const char* message)
{
    return condition ? CT4_OK : fail(CT4_ERR_INVALID_ARGUMENT, message);
}

ct4_metrics to_c(const ct4::Metrics& m)
{
    return ct4_metrics{m.rms_contrast, m.mean_gradient_magnitude, m.shannon_entropy_bits,
                       m.gradient_defined ? 1 : 0};
}

}  // namespace

extern "C" {

ct4_status ct4_image_create(uint32_t width, uint32_t height, const uint8_t* pixels,
                            ct4_image** out)
{
    if (ct4_status s = require(out != nullptr, "out pointer is NULL"); s != CT4_OK) return s;
    return guarded([&] {
        if (pixels == nullptr) {
            *out = new ct4_image{ct4::GrayImage(width, height)};
        } else {
            std::vector<uint8_t> data(pixels, pixels + static_cast<uint64_t>(width) * height);
            *out = new ct4_image{ct4::GrayImage(width, height, std::move(data))};
        }
        return CT4_OK;
    });
}

ct4_status ct4_image_clone(const ct4_image* img, ct4_image** out)
{
    if (ct4_status s = require(img != nullptr && out != nullptr, "NULL argument"); s != CT4_OK)
        return s;
    return guarded([&] {
        *out = new ct4_image{img->img};
        return CT4_OK;
    });
}

void ct4_image_free(ct4_image* img)
{
    delete img;
}

uint32_t ct4_image_width(const ct4_image* img)
{
    return img ? img->img.width() : 0;
}

uint32_t ct4_image_height(const ct4_image* img)
{
    return img ? img->img.height() : 0;
}

const uint8_t* ct4_image_pixels(const ct4_image* img)
{
    return img ? img->img.pixels().data() : nullptr;
}

ct4_status ct4_image_read_pgm(const char* path, ct4_image** out)
{
    if (ct4_status s = require(path != nullptr && out != nullptr, "NULL argument"); s != CT4_OK)
        return s;
    return guarded([&] {
        *out = new ct4_image{ct4::read_pgm_file(path)};
        return CT4_OK;
    });
}

ct4_status ct4_image_read_pgm_mem(const uint8_t* bytes, size_t len, ct4_image** out)
{
    if (ct4_status s = require(bytes != nullptr && out != nullptr, "NULL argument"); s != CT4_OK)
        return s;
    return guarded([&] {
        *out = new ct4_image{ct4::read_pgm(std::span<const uint8_t>(bytes, len))};
        return CT4_OK;
    });
}

ct4_status ct4_image_write_pgm(const ct4_image* img, const char* path, ct4_pgm_format format)
{
    if (ct4_status s = require(img != nullptr && path != nullptr, "NULL argument"); s != CT4_OK)
        return s;
    if (ct4_status s = require(format == CT4_PGM_BINARY_P5 || format == CT4_PGM_ASCII_P2,
                               "unknown PGM format");
        s != CT4_OK)
        return s;
    return guarded([&] {
        ct4::write_pgm_file(img->img, path,
                            format == CT4_PGM_BINARY_P5 ? ct4::PgmFormat::BinaryP5
                                                        : ct4::PgmFormat::AsciiP2);
        return CT4_OK;
    });
}

ct4_status ct4_image_write_pgm_mem(const ct4_image* img, ct4_pgm_format format, uint8_t** bytes,
                                   size_t* len)
{
    if (ct4_status s =
            require(img != nullptr && bytes != nullptr && len != nullptr, "NULL argument");
        s != CT4_OK)
        return s;
    if (ct4_status s = require(format == CT4_PGM_BINARY_P5 || format == CT4_PGM_ASCII_P2,
                               "unknown PGM format");
        s != CT4_OK)
        return s;
    return guarded([&] {
        std::vector<uint8_t> data =
            ct4::write_pgm(img->img, format == CT4_PGM_BINARY_P5 ? ct4::PgmFormat::BinaryP5
                                                                 : ct4::PgmFormat::AsciiP2);
        uint8_t* buffer = static_cast<uint8_t*>(std::malloc(data.size()));
        if (buffer == nullptr) {
            return fail(CT4_ERR_NOMEM, "out of memory");
        }
        std::memcpy(buffer, data.data(), data.size());
        *bytes = buffer;
        *len = data.size();
        return CT4_OK;
    });
}

void ct4_buffer_free(uint8_t* bytes)
{
    std::free(bytes);
}

ct4_status ct4_image_transform(const ct4_image* src, ct4_kernel kernel, ct4_pad pad, int threads,
                               ct4_image** out)
{
    if (ct4_status s = require(src != nullptr && out != nullptr, "NULL argument"); s != CT4_OK)
        return s;
    if (ct4_status s = require(kernel == CT4_KERNEL_3X3 || kernel == CT4_KERNEL_4X4,
                               "unknown kernel (use CT4_KERNEL_3X3 or CT4_KERNEL_4X4)");
        s != CT4_OK)
        return s;
    if (ct4_status s = require(pad == CT4_PAD_REPLICATE, "unknown pad mode"); s != CT4_OK)
        return s;
    return guarded([&] {
        ct4::TransformKind kind = kernel == CT4_KERNEL_3X3 ? ct4::TransformKind::Ct3
                                                           : ct4::TransformKind::Ct4x4;
        *out = new ct4_image{
            ct4::transform(src->img, kind, ct4::PadMode::Replicate, threads)};
        return CT4_OK;
    });
}

ct4_status ct4_image_metrics(const ct4_image* img, ct4_metrics* out)
{
    if (ct4_status s = require(img != nullptr && out != nullptr, "NULL argument"); s != CT4_OK)
        return s;
    return guarded([&] {
        *out = to_c(ct4::compute_metrics(img->img));
        return CT4_OK;
    });
}

ct4_status ct4_image_compare(const ct4_image* img, ct4_metrics out[3])
{
    if (ct4_status s = require(img != nullptr && out != nullptr, "NULL argument"); s != CT4_OK)
        return s;
    return guarded([&] {
        ct4::TransformComparison cmp = ct4::compare_transforms(img->img);
        out[0] = to_c(cmp.input);
        out[1] = to_c(cmp.ct3);
        out[2] = to_c(cmp.ct4x4);
        return CT4_OK;
    });
}

int ct4_hamming_distance(uint8_t a, uint8_t b)
{
    return ct4::hamming_distance(a, b);
}

ct4_status ct4_image_random(uint32_t width, uint32_t height, uint64_t seed, ct4_image** out)
{
    if (ct4_status s = require(out != nullptr, "out pointer is NULL"); s != CT4_OK) return s;
    return guarded([&] {
        *out = new ct4_image{ct4::random_image(width, height, seed)};
        return CT4_OK;
    });
}

uint64_t ct4_image_checksum(const ct4_image* img)
{
    return img ? ct4::pixel_checksum(img->img) : 0;
}

const char* ct4_last_error_message(void)
{
    return g_last_error.c_str();
}

const char* ct4_status_name(ct4_status status)
{
    switch (status) {
    case CT4_OK:
        return "ok";
    case CT4_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case CT4_ERR_IO:
        return "i/o error";
    case CT4_ERR_FORMAT:
        return "format error";
    case CT4_ERR_NOMEM:
        return "out of memory";
    case CT4_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* ct4_version(void)
{
    return "0.1.0";
}

}  // extern "C"
