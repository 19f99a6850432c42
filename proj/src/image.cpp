/*
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "image.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace ct4 {

namespace {

size_t checked_pixel_count(uint32_t width, uint32_t height)
{
    if (width == 0 || height == 0) {
        throw std::invalid_argument("image dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
    uint64_t count = static_cast<uint64_t>(width) * height;
    if (count > std::numeric_limits<size_t>::max()) {
        throw std::invalid_argument("image dimensions overflow");
    }
    return static_cast<size_t>(count);
}

}  // namespace

GrayImage::GrayImage(uint32_t width, uint32_t height)
    : m_width(width), m_height(height), m_pixels(checked_pixel_count(width, height), 0)
{
}

GrayImage::GrayImage(uint32_t width, uint32_t height, std::vector<uint8_t> pixels)
    : m_width(width), m_height(height), m_pixels(std::move(pixels))
{
    size_t expected = checked_pixel_count(width, height);
    if (m_pixels.size() != expected) {
        throw std::invalid_argument("pixel count " + std::to_string(m_pixels.size()) +
                                    " does not match " + std::to_string(width) + "x" +
                                    std::to_string(height));
    }
}

uint8_t GrayImage::at_clamped(int64_t x, int64_t y) const
{
    if (x < 0) x = 0;
    if (x >= m_width) x = m_width - 1;
    if (y < 0) y = 0;
    if (y >= m_height) y = m_height - 1;
    return at(static_cast<uint32_t>(x), static_cast<uint32_t>(y));
}

PaddedImage pad_to_multiple(const GrayImage& img, uint32_t multiple, PadMode mode)
{
    if (multiple == 0) {
        throw std::invalid_argument("pad multiple must be positive");
    }
    (void)mode;  // only Replicate exists

    auto round_up = [multiple](uint32_t v) {
        uint64_t r = (static_cast<uint64_t>(v) + multiple - 1) / multiple *
                     static_cast<uint64_t>(multiple);
        if (r > std::numeric_limits<uint32_t>::max()) {
            throw std::invalid_argument("padded dimension overflows");
        }
        return static_cast<uint32_t>(r);
    };
    uint32_t pw = round_up(img.width());
    uint32_t ph = round_up(img.height());
    if (pw == img.width() && ph == img.height()) {
        return {img, img.width(), img.height()};
    }

    GrayImage out(pw, ph);
    for (uint32_t y = 0; y < ph; y++) {
        uint32_t sy = y < img.height() ? y : img.height() - 1;
        for (uint32_t x = 0; x < pw; x++) {
            uint32_t sx = x < img.width() ? x : img.width() - 1;
            out.at(x, y) = img.at(sx, sy);
        }
    }
    return {std::move(out), img.width(), img.height()};
}

std::vector<Block4> tile_blocks(const GrayImage& img)
{
    if (img.width() % 4 != 0 || img.height() % 4 != 0) {
        throw std::invalid_argument("tile_blocks requires dimensions that are multiples of 4, got " +
                                    std::to_string(img.width()) + "x" + std::to_string(img.height()));
    }
    uint32_t tiles_x = img.width() / 4;
    uint32_t tiles_y = img.height() / 4;
    std::vector<Block4> blocks(static_cast<size_t>(tiles_x) * tiles_y);
    for (uint32_t ty = 0; ty < tiles_y; ty++) {
        for (uint32_t tx = 0; tx < tiles_x; tx++) {
            Block4& b = blocks[static_cast<size_t>(ty) * tiles_x + tx];
            for (int r = 0; r < 4; r++) {
                for (int c = 0; c < 4; c++) {
                    b.at(r, c) = img.at(tx * 4 + c, ty * 4 + r);
                }
            }
        }
    }
    return blocks;
}

GrayImage assemble_blocks(std::span<const Block4> blocks, uint32_t width, uint32_t height)
{
    if (width % 4 != 0 || height % 4 != 0) {
        throw std::invalid_argument("assemble_blocks requires dimensions that are multiples of 4");
    }
    uint32_t tiles_x = width / 4;
    uint32_t tiles_y = height / 4;
    size_t expected = static_cast<size_t>(tiles_x) * tiles_y;
    if (blocks.size() != expected) {
        throw std::invalid_argument("assemble_blocks: got " + std::to_string(blocks.size()) +
                                    " blocks, need " + std::to_string(expected) + " for " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
    GrayImage out(width, height);
    for (uint32_t ty = 0; ty < tiles_y; ty++) {
        for (uint32_t tx = 0; tx < tiles_x; tx++) {
            const Block4& b = blocks[static_cast<size_t>(ty) * tiles_x + tx];
            for (int r = 0; r < 4; r++) {
                for (int c = 0; c < 4; c++) {
                    out.at(tx * 4 + c, ty * 4 + r) = b.at(r, c);
                }
            }
        }
    }
    return out;
}

GrayImage crop(const GrayImage& img, uint32_t width, uint32_t height)
{
    if (width > img.width() || height > img.height()) {
        throw std::invalid_argument("crop " + std::to_string(width) + "x" + std::to_string(height) +
                                    " exceeds image " + std::to_string(img.width()) + "x" +
                                    std::to_string(img.height()));
    }
    if (width == img.width() && height == img.height()) {
        return img;
    }
    GrayImage out(width, height);
    for (uint32_t y = 0; y < height; y++) {
        for (uint32_t x = 0; x < width; x++) {
            out.at(x, y) = img.at(x, y);
        }
    }
    return out;
}

}  // namespace ct4
