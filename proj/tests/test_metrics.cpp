#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "census.hpp"
#include "golden.hpp"
#include "image.hpp"
#include "metrics.hpp"
#include "oracle.hpp"
#include "synth.hpp"

using ct4::GrayImage;
using ct4::Metrics;

namespace {

oracle::Image to_oracle(const GrayImage& img)
{
    return oracle::Image{static_cast<int>(img.width()), static_cast<int>(img.height()),
                         {img.pixels().begin(), img.pixels().end()}};
}

constexpr double kTol = 1e-9;

}  // namespace

TEST_CASE("hamming_distance counts differing bits")
{
    CHECK(ct4::hamming_distance(14, 14) == 0);
    CHECK(ct4::hamming_distance(0, 255) == 8);
    // 00001110 vs 01000011 differ in four bits
    CHECK(ct4::hamming_distance(14, 67) == 4);
}

TEST_CASE("hamming_distance is a metric, exhaustively")
{
    long pair_violations = 0;
    for (int a = 0; a < 256; a++) {
        if (ct4::hamming_distance(a, a) != 0) pair_violations++;
        for (int b = 0; b < 256; b++) {
            int d = ct4::hamming_distance(a, b);
            if (d < 0 || d > 8) pair_violations++;
            if (d != ct4::hamming_distance(b, a)) pair_violations++;
            if (d == 0 && a != b) pair_violations++;
        }
    }
    CHECK(pair_violations == 0);

    long triangle_violations = 0;
    for (int a = 0; a < 256; a++) {
        for (int b = 0; b < 256; b++) {
            int dab = ct4::hamming_distance(a, b);
            for (int c = 0; c < 256; c++) {
                if (dab > ct4::hamming_distance(a, c) + ct4::hamming_distance(c, b)) {
                    triangle_violations++;
                }
            }
        }
    }
    CHECK(triangle_violations == 0);
}

TEST_CASE("constant image metrics are all zero")
{
    GrayImage img(10, 7);
    std::fill(img.pixels().begin(), img.pixels().end(), static_cast<uint8_t>(123));
    Metrics m = ct4::compute_metrics(img);
    CHECK(m.rms_contrast == 0.0);
    CHECK(m.mean_gradient_magnitude == 0.0);
    CHECK(m.shannon_entropy_bits == 0.0);
    CHECK(m.gradient_defined);
}

TEST_CASE("two-point half/half image hits the closed-form values")
{
    // half the pixels 0, half 255
    std::vector<uint8_t> pixels(64, 0);
    std::fill(pixels.begin() + 32, pixels.end(), 255);
    GrayImage img(8, 8, pixels);
    Metrics m = ct4::compute_metrics(img);
    CHECK(m.rms_contrast == doctest::Approx(127.5).epsilon(1e-12));
    CHECK(m.shannon_entropy_bits == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gradient is flagged undefined below 2x2")
{
    Metrics wide = ct4::compute_metrics(GrayImage(5, 1, {1, 200, 3, 4, 90}));
    CHECK_FALSE(wide.gradient_defined);
    CHECK(wide.mean_gradient_magnitude == 0.0);
    CHECK(wide.rms_contrast > 0.0);

    Metrics tall = ct4::compute_metrics(GrayImage(1, 3, {9, 9, 9}));
    CHECK_FALSE(tall.gradient_defined);
}

TEST_CASE("golden block metrics match the frozen oracle values")
{
    GrayImage input(4, 4, std::vector<uint8_t>(golden::kInput.begin(), golden::kInput.end()));
    GrayImage output(4, 4, std::vector<uint8_t>(golden::kOutput.begin(), golden::kOutput.end()));

    Metrics in = ct4::compute_metrics(input);
    CHECK(in.rms_contrast == doctest::Approx(golden::kInputRmsContrast).epsilon(kTol));
    CHECK(in.mean_gradient_magnitude == doctest::Approx(golden::kInputMeanGradient).epsilon(kTol));
    CHECK(in.shannon_entropy_bits == doctest::Approx(golden::kInputEntropyBits).epsilon(kTol));

    Metrics out = ct4::compute_metrics(output);
    CHECK(out.rms_contrast == doctest::Approx(golden::kOutputRmsContrast).epsilon(kTol));
    CHECK(out.mean_gradient_magnitude ==
          doctest::Approx(golden::kOutputMeanGradient).epsilon(kTol));
    CHECK(out.shannon_entropy_bits == doctest::Approx(golden::kOutputEntropyBits).epsilon(kTol));

    // the transform raises the rms contrast of this block
    CHECK(out.rms_contrast > in.rms_contrast);
}

TEST_CASE("compute_metrics agrees with the oracle on random images")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<uint32_t> dim(1, 40);
    for (int trial = 0; trial < 40; trial++) {
        GrayImage img = ct4::random_image(dim(rng), dim(rng), rng());
        Metrics m = ct4::compute_metrics(img);
        oracle::Stats s = oracle::stats(to_oracle(img));
        CHECK(m.rms_contrast == doctest::Approx(s.rms_contrast).epsilon(kTol));
        CHECK(m.mean_gradient_magnitude ==
              doctest::Approx(s.mean_gradient_magnitude).epsilon(kTol));
        CHECK(m.shannon_entropy_bits == doctest::Approx(s.shannon_entropy_bits).epsilon(kTol));
        CHECK(m.gradient_defined == s.gradient_defined);
    }
}

TEST_CASE("rms and entropy are permutation-invariant, the gradient is not")
{
    std::mt19937_64 rng(23);
    GrayImage img = ct4::random_image(16, 16, 5);
    std::vector<uint8_t> shuffled(img.pixels().begin(), img.pixels().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    GrayImage perm(16, 16, shuffled);

    Metrics a = ct4::compute_metrics(img);
    Metrics b = ct4::compute_metrics(perm);
    CHECK(a.rms_contrast == doctest::Approx(b.rms_contrast).epsilon(kTol));
    CHECK(a.shannon_entropy_bits == doctest::Approx(b.shannon_entropy_bits).epsilon(kTol));
    CHECK(a.mean_gradient_magnitude != b.mean_gradient_magnitude);
}

TEST_CASE("compare_transforms reports the triple deterministically")
{
    GrayImage img = ct4::random_image(23, 17, 2718);
    ct4::TransformComparison first = ct4::compare_transforms(img);
    ct4::TransformComparison second = ct4::compare_transforms(img);
    CHECK(first.input.rms_contrast == second.input.rms_contrast);
    CHECK(first.ct3.shannon_entropy_bits == second.ct3.shannon_entropy_bits);
    CHECK(first.ct4x4.mean_gradient_magnitude == second.ct4x4.mean_gradient_magnitude);

    // the per-output reports equal compute_metrics of the actual outputs
    Metrics ct3 =
        ct4::compute_metrics(ct4::transform_3x3(img, ct4::PadMode::Replicate));
    CHECK(first.ct3.rms_contrast == ct3.rms_contrast);
    CHECK(first.ct3.mean_gradient_magnitude == ct3.mean_gradient_magnitude);
}

TEST_CASE("compare_transforms on a constant image")
{
    GrayImage img(9, 9);
    std::fill(img.pixels().begin(), img.pixels().end(), static_cast<uint8_t>(50));
    ct4::TransformComparison cmp = ct4::compare_transforms(img);
    CHECK(cmp.input.rms_contrast == 0.0);
    CHECK(cmp.input.shannon_entropy_bits == 0.0);
    // both outputs are constant 255 -> zero entropy as well
    CHECK(cmp.ct3.shannon_entropy_bits == 0.0);
    CHECK(cmp.ct4x4.shannon_entropy_bits == 0.0);
    CHECK(cmp.ct3.rms_contrast == 0.0);
    CHECK(cmp.ct4x4.rms_contrast == 0.0);
}

TEST_CASE("golden block comparison embeds the frozen output metrics")
{
    GrayImage img(4, 4, std::vector<uint8_t>(golden::kInput.begin(), golden::kInput.end()));
    ct4::TransformComparison cmp = ct4::compare_transforms(img);
    CHECK(cmp.ct4x4.rms_contrast == doctest::Approx(golden::kOutputRmsContrast).epsilon(kTol));
    CHECK(cmp.ct4x4.shannon_entropy_bits ==
          doctest::Approx(golden::kOutputEntropyBits).epsilon(kTol));
}
