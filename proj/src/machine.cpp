#include "stickersim/machine.hpp"

#include <algorithm>
#include <stdexcept>

namespace stickersim {

Fifimatic::Fifimatic(const AlbumConfig& cfg, Orientation orientation)
    : cfg_(cfg), orientation_(orientation) {
    cfg_.validate();
}

std::vector<Packet> Fifimatic::step(int sheet) {
    if (sheet < 1 || sheet > cfg_.sheet_count())
        throw std::domain_error("sheet index " + std::to_string(sheet) + " outside [1, " +
                                std::to_string(cfg_.sheet_count()) + "]");
    const int n = cfg_.quadrotte_rows;
    std::vector<Packet> done;
    for (int belt = 0; belt < AlbumConfig::quadrotte_columns; ++belt) {
        auto& stacks = belts_[static_cast<std::size_t>(belt)];
        stacks.push_back(Stack{tick_, {}});
        for (auto it = stacks.begin(); it != stacks.end();) {
            const int age = static_cast<int>(tick_ - it->birth);
            const int row = orientation_ == Orientation::RowDescending ? n - 1 - age : age;
            it->cards.push_back(
                position_to_sticker(cfg_, QuadrottePosition{sheet, row, belt}));
            if (static_cast<int>(it->cards.size()) == n) {
                done.push_back(Packet{std::move(it->cards), PacketOrigin::Machine, belt, it->birth});
                it = stacks.erase(it);
            } else {
                ++it;
            }
        }
    }
    ++tick_;
    // emission order (tick, belt); stacks complete oldest-first per belt
    std::sort(done.begin(), done.end(), [](const Packet& a, const Packet& b) {
        return a.tick != b.tick ? a.tick < b.tick : a.belt < b.belt;
    });
    return done;
}

std::vector<Packet> produce(const AlbumConfig& cfg, const MixingStrategy& strategy,
                            long long packet_count, Orientation orientation) {
    if (packet_count < 1) throw std::domain_error("packet_count must be positive");
    // one stack per belt completes per tick once warm; the last n-1 fed
    // sheets only serve stacks that are discarded as incomplete
    const long long cohorts = (packet_count + 3) / 4;
    const long long length = cohorts + cfg.quadrotte_rows - 1;
    const QuadrotteSequence seq = generate_sequence(cfg, strategy, length);

    std::vector<Packet> packets;
    packets.reserve(static_cast<std::size_t>(packet_count));
    Fifimatic machine(cfg, orientation);
    for (int sheet : seq) {
        for (Packet& p : machine.step(sheet)) {
            if (std::ssize(packets) < packet_count) packets.push_back(std::move(p));
        }
        if (std::ssize(packets) >= packet_count) break;
    }
    return packets;
}

std::vector<Display> pack_displays(const std::vector<Packet>& packets, const AlbumConfig& cfg,
                                   PackingPolicy policy) {
    const int per_display = cfg.display_packets;
    if (std::ssize(packets) < per_display)
        throw std::domain_error("need at least " + std::to_string(per_display) +
                                " packets per display, got " + std::to_string(packets.size()));

    std::vector<Packet> ordered = packets;
    if (policy == PackingPolicy::RoundRobin) {
        std::stable_sort(ordered.begin(), ordered.end(), [](const Packet& a, const Packet& b) {
            return a.tick != b.tick ? a.tick < b.tick : a.belt < b.belt;
        });
    } else {
        std::stable_sort(ordered.begin(), ordered.end(), [](const Packet& a, const Packet& b) {
            return a.belt != b.belt ? a.belt < b.belt : a.tick < b.tick;
        });
    }

    std::vector<Display> displays;
    std::size_t i = 0;
    while (i + static_cast<std::size_t>(per_display) <= ordered.size()) {
        if (policy == PackingPolicy::SingleBelt) {
            // a display never spans two belts; skip the remainder of a belt
            const int belt = ordered[i].belt;
            std::size_t run = i;
            while (run < ordered.size() && ordered[run].belt == belt) ++run;
            if (run - i < static_cast<std::size_t>(per_display)) {
                i = run;
                continue;
            }
        }
        Display d;
        d.packets.assign(ordered.begin() + static_cast<std::ptrdiff_t>(i),
                         ordered.begin() + static_cast<std::ptrdiff_t>(i + per_display));
        displays.push_back(std::move(d));
        i += static_cast<std::size_t>(per_display);
    }
    return displays;
}

std::vector<StickerId> next_card_candidates(const AlbumConfig& cfg, StickerId x,
                                            Orientation orientation) {
    const QuadrottePosition pos = sticker_to_position(cfg, x);
    const int n = cfg.quadrotte_rows;
    const int successor_row = orientation == Orientation::RowDescending
                                  ? (pos.row + n - 1) % n
                                  : (pos.row + 1) % n;
    std::vector<StickerId> out;
    out.reserve(static_cast<std::size_t>(cfg.sheet_count()));
    for (int k = 1; k <= cfg.sheet_count(); ++k)
        out.push_back(position_to_sticker(cfg, QuadrottePosition{k, successor_row, pos.column}));
    return out;
}

std::vector<StickerId> packet_mate_candidates(const AlbumConfig& cfg, StickerId x) {
    const QuadrottePosition pos = sticker_to_position(cfg, x);
    std::vector<StickerId> out;
    out.reserve(static_cast<std::size_t>(cfg.sheet_count() * (cfg.quadrotte_rows - 1)));
    for (int k = 1; k <= cfg.sheet_count(); ++k)
        for (int row = 0; row < cfg.quadrotte_rows; ++row) {
            if (row == pos.row) continue;
            out.push_back(position_to_sticker(cfg, QuadrottePosition{k, row, pos.column}));
        }
    return out;
}

}  // namespace stickersim
