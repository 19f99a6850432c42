/*
 * Bit-exact PGM (P2/P5) reading and writing, maxval 255 only.
 *
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef CT4_PGM_HPP
#define CT4_PGM_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "image.hpp"

namespace ct4 {

enum class PgmFormat {
    AsciiP2,
    BinaryP5,
};

// Malformed PGM stream. The message names the offending header field or
// byte offset.
class PgmError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Failed file-system access (open/read/write).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse a P2 or P5 stream. Header comments (# to end of line) are
// accepted; maxval must be exactly 255.
GrayImage read_pgm(std::span<const uint8_t> bytes);

// Canonical, byte-deterministic encoding: header "P5\n<w> <h>\n255\n"
// followed by the raw payload, or the P2 equivalent with one image row
// per line.
std::vector<uint8_t> write_pgm(const GrayImage& img, PgmFormat format);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const GrayImage& img, const std::filesystem::path& path, PgmFormat format);

}  // namespace ct4

#endif
