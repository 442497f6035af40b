#include "stickersim/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace stickersim {

namespace {

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

long long parse_int_field(std::string_view text, const std::string& source, std::size_t line_no,
                          const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::runtime_error(source + ":" + std::to_string(line_no) + ": bad " + what + " '" +
                                 std::string(text) + "'");
    return value;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

void write_packets_csv(const std::string& path, const std::vector<Packet>& packets,
                       const AlbumConfig& cfg) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "tick,belt";
    for (int i = 1; i <= cfg.packet_size; ++i) out << ",sticker_" << i;
    out << "\n";
    for (const Packet& p : packets) {
        out << p.tick << "," << p.belt;
        for (StickerId x : p.stickers) out << "," << x;
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<Packet> read_packets_csv(const std::string& path, const AlbumConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::size_t line_no = 0;
    std::vector<Packet> packets;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        if (line_no == 1 && line.starts_with("tick,")) continue;
        const auto fields = split_csv_line(line);
        if (std::ssize(fields) != 2 + cfg.packet_size)
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected " +
                                     std::to_string(2 + cfg.packet_size) + " fields, got " +
                                     std::to_string(fields.size()));
        Packet p;
        p.tick = parse_int_field(fields[0], path, line_no, "tick");
        p.belt = static_cast<int>(parse_int_field(fields[1], path, line_no, "belt"));
        p.origin = p.belt >= 0 ? PacketOrigin::Machine : PacketOrigin::Classical;
        for (int i = 0; i < cfg.packet_size; ++i) {
            const auto id = parse_int_field(fields[static_cast<std::size_t>(2 + i)], path, line_no,
                                            "sticker id");
            if (id < 1 || id > cfg.total_stickers)
                throw std::runtime_error(path + ":" + std::to_string(line_no) + ": sticker id " +
                                         std::to_string(id) + " outside [1, " +
                                         std::to_string(cfg.total_stickers) + "]");
            p.stickers.push_back(static_cast<StickerId>(id));
        }
        packets.push_back(std::move(p));
    }
    return packets;
}

void write_displays_csv(const std::string& path, const std::vector<Display>& displays) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "display_serial,position,sticker_id\n";
    for (std::size_t d = 0; d < displays.size(); ++d) {
        const std::string serial =
            displays[d].serial.empty() ? std::to_string(d + 1) : displays[d].serial;
        long long pos = 0;
        for (StickerId x : displays[d].stickers()) out << serial << "," << ++pos << "," << x << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<Display> parse_displays_csv(std::istream& in, const AlbumConfig& cfg,
                                        const std::string& source_name) {
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    // serial -> (position, sticker) pairs, display order preserved
    std::vector<std::pair<std::string, std::vector<std::pair<long long, StickerId>>>> groups;

    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != "display_serial,position,sticker_id")
                throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                                         ": expected header display_serial,position,sticker_id");
            saw_header = true;
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                                     ": expected 3 fields, got " + std::to_string(fields.size()));
        const std::string serial(fields[0]);
        const long long pos = parse_int_field(fields[1], source_name, line_no, "position");
        const long long id = parse_int_field(fields[2], source_name, line_no, "sticker_id");
        if (id < 1 || id > cfg.total_stickers)
            throw std::runtime_error(source_name + ":" + std::to_string(line_no) + ": sticker_id " +
                                     std::to_string(id) + " outside [1, " +
                                     std::to_string(cfg.total_stickers) + "]");
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == serial; });
        if (it == groups.end()) {
            groups.emplace_back(serial, std::vector<std::pair<long long, StickerId>>{});
            it = groups.end() - 1;
        }
        it->second.emplace_back(pos, static_cast<StickerId>(id));
    }

    std::vector<Display> displays;
    displays.reserve(groups.size());
    for (auto& [serial, entries] : groups) {
        std::stable_sort(entries.begin(), entries.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Display d;
        d.serial = serial;
        Packet current;
        for (const auto& [pos, id] : entries) {
            current.stickers.push_back(id);
            if (std::ssize(current.stickers) == cfg.packet_size) {
                d.packets.push_back(std::move(current));
                current = Packet{};
            }
        }
        if (!current.stickers.empty()) d.packets.push_back(std::move(current));
        displays.push_back(std::move(d));
    }
    return displays;
}

std::vector<Display> ingest_displays(const std::string& path, const AlbumConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_displays_csv(in, cfg, path);
}

}  // namespace stickersim
