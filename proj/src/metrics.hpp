/*
 * Numeric texture metrics and census-code utilities.
 *
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef CT4_METRICS_HPP
#define CT4_METRICS_HPP

#include <cstdint>

#include "image.hpp"

namespace ct4 {

// Per-image statistics. These are proxies for visual crispness/contrast,
// chosen for being standard and reproducible:
//   rms_contrast            population standard deviation of intensities
//   mean_gradient_magnitude mean of |dx|+|dy| forward differences; the
//                           last row and column carry no forward
//                           difference and are excluded
//   shannon_entropy_bits    base-2 entropy of the 256-bin histogram
struct Metrics {
    double rms_contrast = 0.0;
    double mean_gradient_magnitude = 0.0;
    double shannon_entropy_bits = 0.0;
    // False when the image is smaller than 2x2 in either dimension; the
    // gradient term is then reported as 0.
    bool gradient_defined = true;
};

Metrics compute_metrics(const GrayImage& img);

// Number of differing bits between two census codes, in [0,8].
int hamming_distance(uint8_t a, uint8_t b);

// Metrics for the input image and for both transform outputs, all under
// replicate padding. The comparison is reported, not judged.
struct TransformComparison {
    Metrics input;
    Metrics ct3;
    Metrics ct4x4;
};

TransformComparison compare_transforms(const GrayImage& img);

}  // namespace ct4

#endif
