/*
 * ct4 — census transform library C API.
 *
 * Grayscale 8-bit images behind an opaque handle, with the classic 3x3
 * census transform, a 4x4 block census transform built from four
 * overlapping 3x3 groups, PGM I/O, and texture metrics.
 *
 * All functions returning ct4_status report CT4_OK on success. On
 * failure, ct4_last_error_message() returns a human-readable detail for
 * the calling thread.
 *
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef CT4_H
#define CT4_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CT4_API __declspec(dllexport)
#else
#define CT4_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque image handle: width x height grid of 8-bit intensities,
 * row-major. Create with ct4_image_create / ct4_image_read_pgm* /
 * ct4_image_random; release with ct4_image_free. */
typedef struct ct4_image ct4_image;

typedef enum ct4_status {
    CT4_OK = 0,
    CT4_ERR_INVALID_ARGUMENT = 1, /* bad parameter or precondition */
    CT4_ERR_IO = 2,               /* file open/read/write failure */
    CT4_ERR_FORMAT = 3,           /* malformed PGM stream */
    CT4_ERR_NOMEM = 4,
    CT4_ERR_INTERNAL = 5,
} ct4_status;

typedef enum ct4_kernel {
    CT4_KERNEL_3X3 = 3, /* per-pixel census over the 3x3 neighborhood */
    CT4_KERNEL_4X4 = 4, /* tiled 4x4 block census, overlapping 3x3 groups */
} ct4_kernel;

typedef enum ct4_pad {
    CT4_PAD_REPLICATE = 0, /* borders replicate the nearest edge pixel */
} ct4_pad;

typedef enum ct4_pgm_format {
    CT4_PGM_BINARY_P5 = 0,
    CT4_PGM_ASCII_P2 = 1,
} ct4_pgm_format;

typedef struct ct4_metrics {
    double rms_contrast;            /* population std dev of intensities */
    double mean_gradient_magnitude; /* mean |dx|+|dy| forward differences */
    double shannon_entropy_bits;    /* base-2, 256-bin histogram, in [0,8] */
    int gradient_defined;           /* 0 when the image is smaller than 2x2 */
} ct4_metrics;

/* ---- lifetime -------------------------------------------------------- */

/* Width and height must be positive. `pixels` holds width*height bytes in
 * row-major order, or NULL for a zero-filled image. */
CT4_API ct4_status ct4_image_create(uint32_t width, uint32_t height, const uint8_t* pixels,
                                    ct4_image** out);
CT4_API ct4_status ct4_image_clone(const ct4_image* img, ct4_image** out);
CT4_API void ct4_image_free(ct4_image* img);

CT4_API uint32_t ct4_image_width(const ct4_image* img);
CT4_API uint32_t ct4_image_height(const ct4_image* img);
/* Borrowed pointer to width*height row-major bytes, valid until the image
 * is freed. */
CT4_API const uint8_t* ct4_image_pixels(const ct4_image* img);

/* ---- PGM I/O ---------------------------------------------------------- */

/* P2 or P5, maxval 255 only, header comments accepted. */
CT4_API ct4_status ct4_image_read_pgm(const char* path, ct4_image** out);
CT4_API ct4_status ct4_image_read_pgm_mem(const uint8_t* bytes, size_t len, ct4_image** out);

/* Writers are byte-deterministic: header "P5\n<w> <h>\n255\n" plus raw
 * payload, or the P2 equivalent with one image row per line. */
CT4_API ct4_status ct4_image_write_pgm(const ct4_image* img, const char* path,
                                       ct4_pgm_format format);
/* On success *bytes is malloc'd; release with ct4_buffer_free. */
CT4_API ct4_status ct4_image_write_pgm_mem(const ct4_image* img, ct4_pgm_format format,
                                           uint8_t** bytes, size_t* len);
CT4_API void ct4_buffer_free(uint8_t* bytes);

/* ---- transforms ------------------------------------------------------- */

/* Census-transform `src` into a new image of identical dimensions.
 * threads >= 1; any thread count produces bit-identical output. */
CT4_API ct4_status ct4_image_transform(const ct4_image* src, ct4_kernel kernel, ct4_pad pad,
                                       int threads, ct4_image** out);

/* ---- analysis --------------------------------------------------------- */

CT4_API ct4_status ct4_image_metrics(const ct4_image* img, ct4_metrics* out);

/* Metrics for the input and for both transform outputs: out[0] input,
 * out[1] 3x3 output, out[2] 4x4 output. */
CT4_API ct4_status ct4_image_compare(const ct4_image* img, ct4_metrics out[3]);

/* Differing bits between two census codes, in [0,8]. */
CT4_API int ct4_hamming_distance(uint8_t a, uint8_t b);

/* ---- benchmark support ------------------------------------------------ */

/* Deterministic pseudo-random image: 64-bit LCG (MMIX parameters,
 * x <- x*6364136223846793005 + 1442695040888963407), pixel = top byte of
 * each successive state starting from `seed`. */
CT4_API ct4_status ct4_image_random(uint32_t width, uint32_t height, uint64_t seed,
                                    ct4_image** out);

/* FNV-1a 64 over the row-major pixel bytes; 0 for NULL. */
CT4_API uint64_t ct4_image_checksum(const ct4_image* img);

/* ---- diagnostics ------------------------------------------------------ */

/* Detail for the last failing call on this thread; empty string if none. */
CT4_API const char* ct4_last_error_message(void);
CT4_API const char* ct4_status_name(ct4_status status);
CT4_API const char* ct4_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CT4_H */
