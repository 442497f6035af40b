#include "stickersim/album.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace stickersim {

void AlbumConfig::validate() const {
    if (total_stickers <= 0) throw std::domain_error("total_stickers must be positive");
    if (packet_size <= 0) throw std::domain_error("packet_size must be positive");
    if (quadrotte_rows <= 0) throw std::domain_error("quadrotte_rows must be positive");
    if (buyback_limit < 0) throw std::domain_error("buyback_limit must be non-negative");
    if (buyback_limit >= total_stickers)
        throw std::domain_error("buyback_limit must be smaller than total_stickers");
    if (display_packets <= 0) throw std::domain_error("display_packets must be positive");
    if (total_stickers % sheet_size() != 0)
        throw std::domain_error("total_stickers must be divisible by 4*quadrotte_rows (got " +
                                std::to_string(total_stickers) + " / " +
                                std::to_string(sheet_size()) + ")");
}

AlbumConfig AlbumConfig::create(int total_stickers, int packet_size, int quadrotte_rows,
                                int buyback_limit, int display_packets) {
    AlbumConfig cfg{total_stickers, packet_size, quadrotte_rows, buyback_limit, display_packets};
    cfg.validate();
    return cfg;
}

AlbumConfig AlbumConfig::preset(std::string_view name) {
    if (name == "wm2014") return create(640, 5, 5, 50, 100);
    if (name == "bundesliga2014") return create(300, 5, 5, 50, 50);
    if (name == "amici") return create(576, 6, 6, 0, 50);
    throw std::domain_error("unknown preset '" + std::string(name) +
                            "' (expected wm2014, bundesliga2014 or amici)");
}

std::vector<std::string> AlbumConfig::preset_names() {
    return {"wm2014", "bundesliga2014", "amici"};
}

AlbumConfig AlbumConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": invalid JSON: " + e.what());
    }
    for (const char* key :
         {"total_stickers", "packet_size", "quadrotte_rows", "buyback_limit", "display_packets"}) {
        if (!j.contains(key))
            throw std::runtime_error(path + ": missing key '" + key + "'");
    }
    return create(j["total_stickers"].get<int>(), j["packet_size"].get<int>(),
                  j["quadrotte_rows"].get<int>(), j["buyback_limit"].get<int>(),
                  j["display_packets"].get<int>());
}

QuadrottePosition sticker_to_position(const AlbumConfig& cfg, StickerId x) {
    if (x < 1 || x > cfg.total_stickers)
        throw std::domain_error("sticker id " + std::to_string(x) + " outside [1, " +
                                std::to_string(cfg.total_stickers) + "]");
    const int idx = x - 1;
    const int per_sheet = cfg.sheet_size();
    return QuadrottePosition{
        .sheet = idx / per_sheet + 1,
        .row = (idx % per_sheet) / AlbumConfig::quadrotte_columns,
        .column = idx % AlbumConfig::quadrotte_columns,
    };
}

StickerId position_to_sticker(const AlbumConfig& cfg, const QuadrottePosition& p) {
    if (p.sheet < 1 || p.sheet > cfg.sheet_count())
        throw std::domain_error("sheet index " + std::to_string(p.sheet) + " outside [1, " +
                                std::to_string(cfg.sheet_count()) + "]");
    if (p.row < 0 || p.row >= cfg.quadrotte_rows)
        throw std::domain_error("row index " + std::to_string(p.row) + " outside [0, " +
                                std::to_string(cfg.quadrotte_rows - 1) + "]");
    if (p.column < 0 || p.column >= AlbumConfig::quadrotte_columns)
        throw std::domain_error("column index " + std::to_string(p.column) + " outside [0, 3]");
    return (p.sheet - 1) * cfg.sheet_size() + p.row * AlbumConfig::quadrotte_columns + p.column + 1;
}

std::vector<StickerId> Display::stickers() const {
    std::vector<StickerId> all;
    all.reserve(card_count());
    for (const Packet& p : packets) all.insert(all.end(), p.stickers.begin(), p.stickers.end());
    return all;
}

std::size_t Display::card_count() const {
    std::size_t n = 0;
    for (const Packet& p : packets) n += p.stickers.size();
    return n;
}

}  // namespace stickersim
