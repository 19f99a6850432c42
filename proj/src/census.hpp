/*
 * Census transforms: the classic per-pixel 3x3 operator and the 4x4
 * block operator built from four overlapping 3x3 groups.
 *
 * Copyright 2026 The ct4 Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef CT4_CENSUS_HPP
#define CT4_CENSUS_HPP

#include <array>
#include <cstdint>
#include <span>

#include "image.hpp"

namespace ct4 {

// An 8-bit comparison string read back as a grayscale integer.
using CensusCode = uint8_t;

enum class TransformKind {
    Ct3,    // per-pixel 3x3 census
    Ct4x4,  // tiled 4x4 block census
};

// A 4x4 block holds four overlapping 3x3 groups; each block position is
// assigned exactly one of them by row/column parity:
//   even row -> Top band (rows 0..2),  odd row -> Bottom band (rows 1..3)
//   even col -> Left band (cols 0..2), odd col -> Right band (cols 1..3)
enum class RowBand { Top, Bottom };
enum class ColBand { Left, Right };

struct GroupSelector {
    RowBand row_band;
    ColBand col_band;

    bool operator==(const GroupSelector&) const = default;
};

struct BlockPos {
    int row;
    int col;

    bool operator==(const BlockPos&) const = default;
};

GroupSelector group_for(BlockPos pos);

// The eight members of the position's assigned 3x3 group, excluding the
// position itself, in raster order of the group.
std::array<BlockPos, 8> group_neighbor_positions(BlockPos pos);

// Compare the reference value against exactly eight neighbors: bit = 0
// where ref is strictly greater, 1 otherwise (ties give 1). The first
// neighbor lands in the most significant bit. Throws std::invalid_argument
// unless neighbors.size() == 8.
CensusCode census_bits(uint8_t ref, std::span<const uint8_t> neighbors);

// Encode all 16 positions of one block against their assigned groups.
// Every output is computed from the same input block.
Block4 transform_block_4x4(const Block4& block);

// Whole-image operators. Output dimensions always equal input dimensions;
// the 4x4 path replicate-pads to a multiple of 4, transforms each
// non-overlapping tile, and crops back. `threads` >= 1 splits the work
// into bands; the result is bit-identical regardless of thread count.
GrayImage transform_3x3(const GrayImage& img, PadMode pad, int threads = 1);
GrayImage transform_4x4(const GrayImage& img, PadMode pad, int threads = 1);

GrayImage transform(const GrayImage& img, TransformKind kind, PadMode pad, int threads = 1);

}  // namespace ct4

#endif
