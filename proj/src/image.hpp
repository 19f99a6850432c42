/*
 * 8-bit grayscale image container, padding, and 4x4 tiling.
 *
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef CT4_IMAGE_HPP
#define CT4_IMAGE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace ct4 {

// Row-major width x height grid of 8-bit intensities. Dimensions are
// strictly positive; zero-sized images are rejected at construction.
class GrayImage {
public:
    GrayImage(uint32_t width, uint32_t height);  // zero-filled
    GrayImage(uint32_t width, uint32_t height, std::vector<uint8_t> pixels);

    uint32_t width() const { return m_width; }
    uint32_t height() const { return m_height; }
    size_t pixel_count() const { return m_pixels.size(); }

    std::span<const uint8_t> pixels() const { return m_pixels; }
    std::span<uint8_t> pixels() { return m_pixels; }

    uint8_t at(uint32_t x, uint32_t y) const
    {
        return m_pixels[static_cast<size_t>(y) * m_width + x];
    }
    uint8_t& at(uint32_t x, uint32_t y)
    {
        return m_pixels[static_cast<size_t>(y) * m_width + x];
    }

    // Clamped read: out-of-range coordinates replicate the nearest edge
    // pixel (the only border rule the library defines).
    uint8_t at_clamped(int64_t x, int64_t y) const;

    bool operator==(const GrayImage&) const = default;

private:
    uint32_t m_width;
    uint32_t m_height;
    std::vector<uint8_t> m_pixels;
};

// One 4x4 tile of intensities, row-major. Position (r,c) with
// r,c in {0,1,2,3} maps to values[r*4 + c].
struct Block4 {
    std::array<uint8_t, 16> values{};

    uint8_t at(int r, int c) const { return values[static_cast<size_t>(r) * 4 + c]; }
    uint8_t& at(int r, int c) { return values[static_cast<size_t>(r) * 4 + c]; }

    bool operator==(const Block4&) const = default;
};

enum class PadMode {
    Replicate,
};

struct PaddedImage {
    GrayImage image;
    uint32_t original_width;
    uint32_t original_height;
};

// Round both dimensions up to the nearest multiple and fill the new
// pixels by replicating the nearest edge pixel. The original dimensions
// ride along so the result can be cropped back after processing.
PaddedImage pad_to_multiple(const GrayImage& img, uint32_t multiple, PadMode mode);

// Split an image whose dimensions are multiples of 4 into non-overlapping
// 4x4 tiles in raster order (left-to-right, top-to-bottom).
std::vector<Block4> tile_blocks(const GrayImage& img);

// Exact inverse of tile_blocks.
GrayImage assemble_blocks(std::span<const Block4> blocks, uint32_t width, uint32_t height);

// Top-left crop.
GrayImage crop(const GrayImage& img, uint32_t width, uint32_t height);

}  // namespace ct4

#endif
