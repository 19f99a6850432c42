/*
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "metrics.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

#include "census.hpp"

namespace ct4 {

Metrics compute_metrics(const GrayImage& img)
{
    Metrics m;
    size_t n = img.pixel_count();

    // Integer accumulation keeps the sums exact; sum of squares tops out
    // at 255^2 * n.
    uint64_t sum = 0;
    uint64_t sum_sq = 0;
    uint64_t hist[256] = {0};
    for (uint8_t p : img.pixels()) {
        sum += p;
        sum_sq += static_cast<uint64_t>(p) * p;
        hist[p]++;
    }
    double mean = static_cast<double>(sum) / static_cast<double>(n);
    double variance = static_cast<double>(sum_sq) / static_cast<double>(n) - mean * mean;
    m.rms_contrast = variance > 0.0 ? std::sqrt(variance) : 0.0;

    double entropy = 0.0;
    for (uint64_t count : hist) {
        if (count > 0) {
            double p = static_cast<double>(count) / static_cast<double>(n);
            entropy -= p * std::log2(p);
        }
    }
    m.shannon_entropy_bits = entropy < 0.0 ? 0.0 : entropy;

    uint32_t w = img.width();
    uint32_t h = img.height();
    if (w >= 2 && h >= 2) {
        uint64_t grad_sum = 0;
        for (uint32_t y = 0; y + 1 < h; y++) {
            for (uint32_t x = 0; x + 1 < w; x++) {
                int v = img.at(x, y);
                grad_sum += static_cast<uint64_t>(std::abs(img.at(x + 1, y) - v)) +
                            static_cast<uint64_t>(std::abs(img.at(x, y + 1) - v));
            }
        }
        uint64_t cells = static_cast<uint64_t>(w - 1) * (h - 1);
        m.mean_gradient_magnitude = static_cast<double>(grad_sum) / static_cast<double>(cells);
    } else {
        m.gradient_defined = false;
        m.mean_gradient_magnitude = 0.0;
    }
    return m;
}

int hamming_distance(uint8_t a, uint8_t b)
{
    return std::popcount(static_cast<uint8_t>(a ^ b));
}

TransformComparison compare_transforms(const GrayImage& img)
{
    TransformComparison cmp;
    cmp.input = compute_metrics(img);
    cmp.ct3 = compute_metrics(transform_3x3(img, PadMode::Replicate));
    cmp.ct4x4 = compute_metrics(transform_4x4(img, PadMode::Replicate));
    return cmp;
}

}  // namespace ct4
