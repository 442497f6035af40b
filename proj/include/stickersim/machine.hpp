#pragma once

#include <array>
#include <vector>

#include "stickersim/album.hpp"
#include "stickersim/mixer.hpp"

namespace stickersim {

// Whether a belt stack collects sheet rows top-down (n-1, n-2, ..., 0 across
// consecutive ticks) or bottom-up. Both satisfy the no-duplicates theorem;
// RowDescending is the default reading of the machine drawings.
enum class Orientation { RowDescending, RowAscending };

// The 4 x n magazine/belt packing machine. Each tick one full sheet is
// dropped: magazine (row i, column j) releases that sheet's (i, j) sticker
// onto the stack currently underneath, then the belts advance one position.
// A stack therefore collects one sticker per row of its column, from n
// consecutive sheets, and is emitted as a packet once it holds n cards.
class Fifimatic {
public:
    Fifimatic(const AlbumConfig& cfg, Orientation orientation = Orientation::RowDescending);

    // Feed one sheet (1-based index in [1, q]); returns the packets completed
    // by this tick: none during the first n-1 warm-up ticks, 4 afterwards.
    std::vector<Packet> step(int sheet);

    long long tick() const { return tick_; }
    const AlbumConfig& config() const { return cfg_; }

private:
    struct Stack {
        long long birth;  // tick that started the stack
        std::vector<StickerId> cards;
    };

    AlbumConfig cfg_;
    Orientation orientation_;
    long long tick_ = 0;
    std::array<std::vector<Stack>, 4> belts_;
};

// Runs a machine over a freshly generated sheet sequence until packet_count
// packets exist. Packets come out in (tick, belt) order and carry provenance;
// incomplete stacks at the end of the stream are discarded.
std::vector<Packet> produce(const AlbumConfig& cfg, const MixingStrategy& strategy,
                            long long packet_count,
                            Orientation orientation = Orientation::RowDescending);

// RoundRobin: consecutive display_packets packets in (tick, belt) order, so
// each display interleaves all four belts. SingleBelt: each display is a
// contiguous run of one belt's packets; per-belt remainders are dropped.
enum class PackingPolicy { RoundRobin, SingleBelt };

std::vector<Display> pack_displays(const std::vector<Packet>& packets, const AlbumConfig& cfg,
                                   PackingPolicy policy = PackingPolicy::RoundRobin);

// Stickers that can physically land on top of x within the same stack: every
// sticker at (any sheet, successor row of x's row, x's column). Exactly q
// candidates; the other B-q stickers have probability zero.
std::vector<StickerId> next_card_candidates(const AlbumConfig& cfg, StickerId x,
                                            Orientation orientation = Orientation::RowDescending);

// Orientation-independent superset: everything that can ever share a packet
// with x, i.e. all stickers in x's column with a different row. q*(n-1) ids.
std::vector<StickerId> packet_mate_candidates(const AlbumConfig& cfg, StickerId x);

}  // namespace stickersim
