/*
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "pgm.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <string>

namespace ct4 {

namespace {

constexpr uint64_t kMaxDimension = 0xFFFFFFFFull;

bool is_pgm_space(uint8_t b)
{
    return b == ' ' || b == '\t' || b == '\r' || b == '\n' || b == '\v' || b == '\f';
}

// Byte cursor over the stream; tracks the absolute offset for error
// messages.
struct Cursor {
    std::span<const uint8_t> bytes;
    size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    uint8_t peek() const { return bytes[pos]; }

    // Whitespace and #-comments separate header tokens.
    void skip_space_and_comments()
    {
        while (!eof()) {
            if (is_pgm_space(peek())) {
                pos++;
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') {
                    pos++;
                }
            } else {
                break;
            }
        }
    }

    uint64_t parse_uint(const std::string& field)
    {
        skip_space_and_comments();
        if (eof() || peek() < '0' || peek() > '9') {
            throw PgmError("missing or invalid " + field + " at offset " + std::to_string(pos));
        }
        uint64_t value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > 1000000000000000ull) {
                throw PgmError(field + " out of range at offset " + std::to_string(pos));
            }
            pos++;
        }
        return value;
    }
};

}  // namespace

GrayImage read_pgm(std::span<const uint8_t> bytes)
{
    Cursor cur{bytes};

    if (bytes.size() < 2) {
        throw PgmError("bad magic: stream shorter than 2 bytes");
    }
    char m0 = static_cast<char>(bytes[0]);
    char m1 = static_cast<char>(bytes[1]);
    if (m0 != 'P' || (m1 != '2' && m1 != '5')) {
        throw PgmError(std::string("bad magic \"") + m0 + m1 + "\": expected \"P2\" or \"P5\"");
    }
    bool binary = m1 == '5';
    cur.pos = 2;
    if (!cur.eof() && !is_pgm_space(cur.peek()) && cur.peek() != '#') {
        throw PgmError("expected whitespace after magic at offset 2");
    }

    uint64_t width = cur.parse_uint("width");
    uint64_t height = cur.parse_uint("height");
    if (width == 0 || height == 0) {
        throw PgmError("width and height must be positive, got " + std::to_string(width) + "x" +
                       std::to_string(height));
    }
    if (width > kMaxDimension || height > kMaxDimension) {
        throw PgmError("width or height out of range");
    }
    uint64_t maxval = cur.parse_uint("maxval");
    if (maxval != 255) {
        throw PgmError("unsupported maxval " + std::to_string(maxval) + ": must be 255");
    }

    size_t count = static_cast<size_t>(width * height);
    // Cheap plausibility bound before reserving: even single-digit P2
    // pixels take one byte each.
    if (bytes.size() - cur.pos < count) {
        throw PgmError("truncated pixel data: need at least " + std::to_string(count) +
                       " bytes after header, found " + std::to_string(bytes.size() - cur.pos));
    }
    std::vector<uint8_t> pixels;
    pixels.reserve(count);

    if (binary) {
        // Exactly one whitespace byte separates the header from the payload.
        if (cur.eof() || !is_pgm_space(cur.peek())) {
            throw PgmError("expected whitespace after maxval at offset " + std::to_string(cur.pos));
        }
        cur.pos++;
        size_t available = bytes.size() - cur.pos;
        if (available < count) {
            throw PgmError("truncated pixel data: need " + std::to_string(count) + " bytes, found " +
                           std::to_string(available) + " at offset " + std::to_string(cur.pos));
        }
        pixels.assign(bytes.begin() + cur.pos, bytes.begin() + cur.pos + count);
    } else {
        for (size_t i = 0; i < count; i++) {
            cur.skip_space_and_comments();
            if (cur.eof()) {
                throw PgmError("truncated pixel data: expected " + std::to_string(count) +
                               " values, got " + std::to_string(i) + " at offset " +
                               std::to_string(cur.pos));
            }
            size_t value_offset = cur.pos;
            uint64_t value = cur.parse_uint("pixel value");
            if (value > 255) {
                throw PgmError("pixel value " + std::to_string(value) +
                               " exceeds maxval 255 at offset " + std::to_string(value_offset));
            }
            pixels.push_back(static_cast<uint8_t>(value));
        }
    }

    return GrayImage(static_cast<uint32_t>(width), static_cast<uint32_t>(height),
                     std::move(pixels));
}

std::vector<uint8_t> write_pgm(const GrayImage& img, PgmFormat format)
{
    std::string header = format == PgmFormat::BinaryP5 ? "P5" : "P2";
    header += '\n';
    header += std::to_string(img.width());
    header += ' ';
    header += std::to_string(img.height());
    header += "\n255\n";

    std::vector<uint8_t> out(header.begin(), header.end());
    if (format == PgmFormat::BinaryP5) {
        out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    } else {
        std::string body;
        for (uint32_t y = 0; y < img.height(); y++) {
            for (uint32_t x = 0; x < img.width(); x++) {
                if (x > 0) {
                    body += ' ';
                }
                body += std::to_string(img.at(x, y));
            }
            body += '\n';
        }
        out.insert(out.end(), body.begin(), body.end());
    }
    return out;
}

GrayImage read_pgm_file(const std::filesystem::path& path)
{
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) {
        throw IoError("cannot read " + path.string() + ": is a directory");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + ": " + std::strerror(errno));
    }
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read failed for " + path.string());
    }
    return read_pgm(bytes);
}

void write_pgm_file(const GrayImage& img, const std::filesystem::path& path, PgmFormat format)
{
    std::vector<uint8_t> bytes = write_pgm(img, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing: " + std::strerror(errno));
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace ct4
