#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stickersim {

using StickerId = int;  // 1-based album number in [1, total_stickers]

// Position of a sticker on its printing sheet: sheet k in [1, q],
// row i in [0, rows-1], column j in [0, 3]. The sheets ("quadrotte")
// always have four columns; one column per conveyor belt.
struct QuadrottePosition {
    int sheet;
    int row;
    int column;

    bool operator==(const QuadrottePosition&) const = default;
};

// Parameter bundle for one sticker series and its retail display size.
struct AlbumConfig {
    int total_stickers;   // B
    int packet_size;      // P, stickers per sealed packet
    int quadrotte_rows;   // n, rows per sheet (sheet holds 4n stickers)
    int buyback_limit;    // K, stickers purchasable directly from the vendor
    int display_packets;  // packets per retail display

    static constexpr int quadrotte_columns = 4;

    int sheet_size() const { return quadrotte_columns * quadrotte_rows; }
    int sheet_count() const { return total_stickers / sheet_size(); }  // q
    int display_cards() const { return display_packets * packet_size; }
    int collect_target() const { return total_stickers - buyback_limit; }

    // Validates and returns the config; throws std::domain_error on bad values.
    static AlbumConfig create(int total_stickers, int packet_size, int quadrotte_rows,
                              int buyback_limit, int display_packets);

    // "wm2014", "bundesliga2014" or "amici".
    static AlbumConfig preset(std::string_view name);
    static std::vector<std::string> preset_names();

    // JSON file with keys total_stickers, packet_size, quadrotte_rows,
    // buyback_limit, display_packets.
    static AlbumConfig from_json_file(const std::string& path);

    void validate() const;

    bool operator==(const AlbumConfig&) const = default;
};

// Fixed layout convention: x-1 = (k-1)*4n + i*4 + j (row-major within sheet),
// a bijection between [1, B] and sheet positions. Consecutive album numbers
// share a sheet, which is what makes long runs of consecutive numbers in the
// packed output possible.
QuadrottePosition sticker_to_position(const AlbumConfig& cfg, StickerId x);
StickerId position_to_sticker(const AlbumConfig& cfg, const QuadrottePosition& p);

enum class PacketOrigin { Classical, Machine };

struct Packet {
    std::vector<StickerId> stickers;
    PacketOrigin origin = PacketOrigin::Classical;
    int belt = -1;        // machine packets: belt 0..3
    long long tick = -1;  // machine packets: tick at which the stack was started
};

struct Display {
    std::vector<Packet> packets;
    std::string serial;  // opaque tag, used for ingested real-world data

    // All stickers in packet order.
    std::vector<StickerId> stickers() const;
    std::size_t card_count() const;
};

}  // namespace stickersim
