/*
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "synth.hpp"

namespace ct4 {

GrayImage random_image(uint32_t width, uint32_t height, uint64_t seed)
{
    GrayImage img(width, height);
    uint64_t state = seed;
    for (uint8_t& p : img.pixels()) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        p = static_cast<uint8_t>(state >> 56);
    }
    return img;
}

uint64_t pixel_checksum(const GrayImage& img)
{
    uint64_t hash = 14695981039346656037ull;
    for (uint8_t p : img.pixels()) {
        hash ^= p;
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace ct4
