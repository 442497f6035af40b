#include "stickersim/classical.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace stickersim {

std::vector<StickerId> draw_iid_cards(int total_stickers, int count, Rng& rng) {
    if (total_stickers < 1) throw std::domain_error("need at least one sticker");
    if (count < 0) throw std::domain_error("count must be non-negative");
    std::vector<StickerId> cards(static_cast<std::size_t>(count));
    for (auto& c : cards)
        c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(total_stickers)));
    return cards;
}

std::vector<StickerId> draw_distinct_cards(int total_stickers, int count, Rng& rng) {
    if (count < 0 || count > total_stickers)
        throw std::domain_error("cannot draw " + std::to_string(count) + " distinct of " +
                                std::to_string(total_stickers));
    std::vector<StickerId> pool(static_cast<std::size_t>(total_stickers));
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < count; ++i) {
        const auto j =
            static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(total_stickers - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(count));
    return pool;
}

Packet draw_packet_classical(const AlbumConfig& cfg, Rng& rng) {
    if (cfg.packet_size > cfg.total_stickers)
        throw std::domain_error("packet_size exceeds total_stickers");
    Packet p;
    p.origin = PacketOrigin::Classical;
    p.stickers.resize(static_cast<std::size_t>(cfg.packet_size));
    // sequential rejection: uniform over subsets, order uniform too
    for (int i = 0; i < cfg.packet_size; ++i) {
        int x;
        bool repeat;
        do {
            x = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.total_stickers)));
            repeat = false;
            for (int j = 0; j < i; ++j)
                if (p.stickers[static_cast<std::size_t>(j)] == x) {
                    repeat = true;
                    break;
                }
        } while (repeat);
        p.stickers[static_cast<std::size_t>(i)] = x;
    }
    return p;
}

CollectionRun simulate_until_target(const AlbumConfig& cfg, int target, Rng& rng) {
    if (target < 0 || target > cfg.total_stickers)
        throw std::domain_error("target must lie in [0, total_stickers]");
    CollectionRun run;
    if (target == 0) return run;

    std::vector<char> owned(static_cast<std::size_t>(cfg.total_stickers) + 1, 0);
    int distinct = 0;
    long long packet_index = 0;
    while (distinct < target) {
        const Packet p = draw_packet_classical(cfg, rng);
        ++packet_index;
        for (StickerId x : p.stickers) {
            run.cards_bought.push_back(x);
            if (!owned[static_cast<std::size_t>(x)]) {
                owned[static_cast<std::size_t>(x)] = 1;
                ++distinct;
                if (distinct == target && run.completion_card_count == 0)
                    run.completion_card_count = std::ssize(run.cards_bought);
            }
        }
        run.distinct_curve.emplace_back(packet_index, distinct);
    }
    return run;
}

long long cards_to_target(const AlbumConfig& cfg, int target, Rng& rng) {
    if (target < 0 || target > cfg.total_stickers)
        throw std::domain_error("target must lie in [0, total_stickers]");
    if (target == 0) return 0;
    const int B = cfg.total_stickers;
    const int P = cfg.packet_size;
    if (P > B) throw std::domain_error("packet_size exceeds total_stickers");

    std::vector<char> owned(static_cast<std::size_t>(B) + 1, 0);
    std::vector<int> packet(static_cast<std::size_t>(P));
    int distinct = 0;
    long long cards = 0;
    for (;;) {
        for (int i = 0; i < P; ++i) {
            int x;
            bool repeat;
            do {
                x = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(B)));
                repeat = false;
                for (int j = 0; j < i; ++j)
                    if (packet[static_cast<std::size_t>(j)] == x) {
                        repeat = true;
                        break;
                    }
            } while (repeat);
            packet[static_cast<std::size_t>(i)] = x;
            ++cards;
            if (!owned[static_cast<std::size_t>(x)]) {
                owned[static_cast<std::size_t>(x)] = 1;
                if (++distinct == target) return cards;
            }
        }
    }
}

double expected_cards_to_target(int total_stickers, int target) {
    if (target < 0 || target > total_stickers)
        throw std::domain_error("target must lie in [0, total_stickers]");
    double sum = 0.0;
    for (int k = 0; k < target; ++k)
        sum += static_cast<double>(total_stickers) / static_cast<double>(total_stickers - k);
    return sum;
}

double std_cards_to_target(int total_stickers, int target) {
    if (target < 0 || target > total_stickers)
        throw std::domain_error("target must lie in [0, total_stickers]");
    double var = 0.0;
    for (int k = 0; k < target; ++k) {
        const double p = static_cast<double>(total_stickers - k) / total_stickers;
        var += (1.0 - p) / (p * p);
    }
    return std::sqrt(var);
}

double expected_duplicates_in_display(int total_stickers, int display_cards) {
    if (display_cards < 0) throw std::domain_error("display_cards must be non-negative");
    if (total_stickers < 1) throw std::domain_error("need at least one sticker");
    const double b = total_stickers;
    return display_cards - b * (1.0 - std::pow(1.0 - 1.0 / b, display_cards));
}

namespace {

double log10_binomial(int n, int k) {
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
           std::log(10.0);
}

}  // namespace

double log10_prob_zero_duplicates(int total_stickers, int packet_size, int packet_count) {
    if (total_stickers < 1 || packet_size < 1 || packet_count < 0)
        throw std::domain_error("bad zero-duplicate probability arguments");
    if (static_cast<long long>(packet_size) * packet_count > total_stickers)
        return -std::numeric_limits<double>::infinity();
    const double denom = log10_binomial(total_stickers, packet_size);
    double sum = 0.0;
    for (int j = 0; j < packet_count; ++j)
        sum += log10_binomial(total_stickers - j * packet_size, packet_size) - denom;
    return sum;
}

BigInt classical_packet_count(int total_stickers, int packet_size) {
    if (total_stickers < 0 || packet_size < 0)
        throw std::domain_error("counts must be non-negative");
    if (packet_size > total_stickers) return 0;
    BigInt c = 1;
    for (int i = 1; i <= packet_size; ++i) {
        c *= total_stickers - packet_size + i;
        c /= i;  // exact: C(m, i) is integral
    }
    return c;
}

BigInt fifimatic_packet_count(int total_stickers, int quadrotte_rows) {
    if (quadrotte_rows < 1) throw std::domain_error("quadrotte_rows must be positive");
    const int sheet = 4 * quadrotte_rows;
    if (total_stickers < 1 || total_stickers % sheet != 0)
        throw std::domain_error("total_stickers must be divisible by 4*quadrotte_rows");
    const BigInt q = total_stickers / sheet;
    return 4 * boost::multiprecision::pow(q, static_cast<unsigned>(quadrotte_rows));
}

}  // namespace stickersim
