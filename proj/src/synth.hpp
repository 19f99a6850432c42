/*
 * Seeded synthetic images and pixel checksums for reproducible benchmarks.
 *
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef CT4_SYNTH_HPP
#define CT4_SYNTH_HPP

#include <cstdint>

#include "image.hpp"

namespace ct4 {

// Pseudo-random image from a 64-bit LCG (Knuth MMIX parameters:
// x <- x * 6364136223846793005 + 1442695040888963407 mod 2^64, seeded
// with `seed`). Pixel i is the top byte of the i+1-th state, in raster
// order, so identical seeds and sizes give identical images everywhere.
GrayImage random_image(uint32_t width, uint32_t height, uint64_t seed);

// FNV-1a 64 over the row-major pixel bytes.
uint64_t pixel_checksum(const GrayImage& img);

}  // namespace ct4

#endif
