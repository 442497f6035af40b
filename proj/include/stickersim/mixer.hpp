#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stickersim/album.hpp"

namespace stickersim {

// How the printed sheets are ordered before they enter the packing machine.
//
//   Cyclic       1,2,...,q,1,2,...          (no mixing at all)
//   UniformIid   independent uniform draws from [1, q]
//   BlockShuffle fresh uniform permutation of [1, q] per aligned block of q
//   LocalSwap    Cyclic, then swap_count random transpositions between
//                positions at distance <= window
//   TwoSidedFeed front/back interleave of 1..block, repeated per block
//                (sheets dropped alternately from both ends of a feeder)
struct MixingStrategy {
    enum class Kind { Cyclic, UniformIid, BlockShuffle, LocalSwap, TwoSidedFeed };

    Kind kind = Kind::Cyclic;
    std::uint64_t seed = 0;
    long long swap_count = 0;  // LocalSwap
    long long window = 1;      // LocalSwap, max transposition distance
    int block = 0;             // TwoSidedFeed, 0 means "use q"

    static MixingStrategy cyclic();
    static MixingStrategy uniform_iid(std::uint64_t seed);
    static MixingStrategy block_shuffle(std::uint64_t seed);
    static MixingStrategy local_swap(long long swap_count, long long window, std::uint64_t seed);
    static MixingStrategy two_sided_feed(int block);

    // CLI form: cyclic | iid | block | swap:COUNT:WINDOW | twosided:BLOCK
    static MixingStrategy parse(std::string_view text, std::uint64_t seed);

    std::string describe() const;
};

struct QuadrotteSequence {
    MixingStrategy strategy;
    std::vector<int> sheets;  // values in [1, q]

    auto begin() const { return sheets.begin(); }
    auto end() const { return sheets.end(); }
    std::size_t size() const { return sheets.size(); }
};

// Deterministic for a given (strategy, seed, length).
QuadrotteSequence generate_sequence(const AlbumConfig& cfg, const MixingStrategy& strategy,
                                    long long length);

}  // namespace stickersim
