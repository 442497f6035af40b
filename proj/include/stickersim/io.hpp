#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stickersim/album.hpp"

namespace stickersim {

// packets.csv: header "tick,belt,sticker_1,...,sticker_P"; one row per packet.
void write_packets_csv(const std::string& path, const std::vector<Packet>& packets,
                       const AlbumConfig& cfg);
std::vector<Packet> read_packets_csv(const std::string& path, const AlbumConfig& cfg);

// displays.csv: header "display_serial,position,sticker_id"; one row per
// sticker. Displays come back in order of first appearance, stickers sorted
// by position and grouped into packets of cfg.packet_size (last one may be
// short). Ids are validated against [1, B]; errors name the offending line.
void write_displays_csv(const std::string& path, const std::vector<Display>& displays);
std::vector<Display> ingest_displays(const std::string& path, const AlbumConfig& cfg);
std::vector<Display> parse_displays_csv(std::istream& in, const AlbumConfig& cfg,
                                        const std::string& source_name);

}  // namespace stickersim
