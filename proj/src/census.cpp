/*
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "census.hpp"

#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ct4 {

namespace {

constexpr bool in_block_range(BlockPos pos)
{
    return pos.row >= 0 && pos.row < 4 && pos.col >= 0 && pos.col < 4;
}

constexpr std::array<BlockPos, 8> neighbor_positions_for(BlockPos pos)
{
    int r0 = (pos.row % 2 == 0) ? 0 : 1;
    int c0 = (pos.col % 2 == 0) ? 0 : 1;
    std::array<BlockPos, 8> out{};
    int i = 0;
    for (int r = r0; r < r0 + 3; r++) {
        for (int c = c0; c < c0 + 3; c++) {
            if (r == pos.row && c == pos.col) {
                continue;
            }
            out[i++] = BlockPos{r, c};
        }
    }
    return out;
}

// Flat block indices of each position's eight group neighbors, built once
// from the parity rule.
constexpr std::array<std::array<uint8_t, 8>, 16> build_neighbor_table()
{
    std::array<std::array<uint8_t, 8>, 16> table{};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            auto positions = neighbor_positions_for(BlockPos{r, c});
            for (int i = 0; i < 8; i++) {
                table[r * 4 + c][i] =
                    static_cast<uint8_t>(positions[i].row * 4 + positions[i].col);
            }
        }
    }
    return table;
}

constexpr auto kNeighborIndex = build_neighbor_table();

inline uint8_t census8(uint8_t ref, const uint8_t* neighbors)
{
    unsigned code = 0;
    for (int i = 0; i < 8; i++) {
        code = (code << 1) | (ref > neighbors[i] ? 0u : 1u);
    }
    return static_cast<uint8_t>(code);
}

// Run fn(begin, end) over [0, total) split into up to `threads` contiguous
// bands. Bands are disjoint, so the output is identical to a single pass.
template <typename Fn>
void parallel_bands(uint32_t total, int threads, Fn fn)
{
    if (threads < 1) {
        throw std::invalid_argument("thread count must be >= 1, got " + std::to_string(threads));
    }
    uint32_t bands = static_cast<uint32_t>(threads);
    if (bands > total) {
        bands = total;
    }
    if (bands <= 1) {
        fn(0u, total);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(bands);
    uint32_t chunk = total / bands;
    uint32_t rem = total % bands;
    uint32_t begin = 0;
    for (uint32_t b = 0; b < bands; b++) {
        uint32_t end = begin + chunk + (b < rem ? 1 : 0);
        workers.emplace_back([=]() { fn(begin, end); });
        begin = end;
    }
    for (auto& w : workers) {
        w.join();
    }
}

}  // namespace

GroupSelector group_for(BlockPos pos)
{
    if (!in_block_range(pos)) {
        throw std::invalid_argument("block position (" + std::to_string(pos.row) + "," +
                                    std::to_string(pos.col) + ") out of range");
    }
    return GroupSelector{
        pos.row % 2 == 0 ? RowBand::Top : RowBand::Bottom,
        pos.col % 2 == 0 ? ColBand::Left : ColBand::Right,
    };
}

std::array<BlockPos, 8> group_neighbor_positions(BlockPos pos)
{
    if (!in_block_range(pos)) {
        throw std::invalid_argument("block position (" + std::to_string(pos.row) + "," +
                                    std::to_string(pos.col) + ") out of range");
    }
    return neighbor_positions_for(pos);
}

CensusCode census_bits(uint8_t ref, std::span<const uint8_t> neighbors)
{
    if (neighbors.size() != 8) {
        throw std::invalid_argument("census_bits requires exactly 8 neighbors, got " +
                                    std::to_string(neighbors.size()));
    }
    return census8(ref, neighbors.data());
}

Block4 transform_block_4x4(const Block4& block)
{
    Block4 out;
    for (int p = 0; p < 16; p++) {
        const auto& idx = kNeighborIndex[p];
        uint8_t neighbors[8];
        for (int i = 0; i < 8; i++) {
            neighbors[i] = block.values[idx[i]];
        }
        out.values[p] = census8(block.values[p], neighbors);
    }
    return out;
}

GrayImage transform_3x3(const GrayImage& img, PadMode pad, int threads)
{
    (void)pad;  // Replicate is the only mode; neighbors are read clamped
    uint32_t w = img.width();
    uint32_t h = img.height();
    GrayImage out(w, h);

    auto rows = [&](uint32_t y_begin, uint32_t y_end) {
        for (uint32_t y = y_begin; y < y_end; y++) {
            bool y_interior = y > 0 && y + 1 < h;
            for (uint32_t x = 0; x < w; x++) {
                uint8_t ref = img.at(x, y);
                uint8_t nb[8];
                if (y_interior && x > 0 && x + 1 < w) {
                    const uint8_t* up = &img.pixels()[static_cast<size_t>(y - 1) * w + x - 1];
                    const uint8_t* mid = up + w;
                    const uint8_t* dn = mid + w;
                    nb[0] = up[0];
                    nb[1] = up[1];
                    nb[2] = up[2];
                    nb[3] = mid[0];
                    nb[4] = mid[2];
                    nb[5] = dn[0];
                    nb[6] = dn[1];
                    nb[7] = dn[2];
                } else {
                    int i = 0;
                    for (int dy = -1; dy <= 1; dy++) {
                        for (int dx = -1; dx <= 1; dx++) {
                            if (dx == 0 && dy == 0) {
                                continue;
                            }
                            nb[i++] = img.at_clamped(static_cast<int64_t>(x) + dx,
                                                     static_cast<int64_t>(y) + dy);
                        }
                    }
                }
                out.at(x, y) = census8(ref, nb);
            }
        }
    };
    parallel_bands(h, threads, rows);
    return out;
}

GrayImage transform_4x4(const GrayImage& img, PadMode pad, int threads)
{
    PaddedImage padded = pad_to_multiple(img, 4, pad);
    std::vector<Block4> blocks = tile_blocks(padded.image);

    auto range = [&](uint32_t begin, uint32_t end) {
        for (uint32_t i = begin; i < end; i++) {
            blocks[i] = transform_block_4x4(blocks[i]);
        }
    };
    parallel_bands(static_cast<uint32_t>(blocks.size()), threads, range);

    GrayImage assembled =
        assemble_blocks(blocks, padded.image.width(), padded.image.height());
    return crop(assembled, padded.original_width, padded.original_height);
}

GrayImage transform(const GrayImage& img, TransformKind kind, PadMode pad, int threads)
{
    switch (kind) {
    case TransformKind::Ct3:
        return transform_3x3(img, pad, threads);
    case TransformKind::Ct4x4:
        return transform_4x4(img, pad, threads);
    }
    throw std::invalid_argument("unknown transform kind");
}

}  // namespace ct4
