#include "stickersim/mixer.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "stickersim/rng.hpp"

namespace stickersim {

MixingStrategy MixingStrategy::cyclic() { return {.kind = Kind::Cyclic}; }

MixingStrategy MixingStrategy::uniform_iid(std::uint64_t seed) {
    return {.kind = Kind::UniformIid, .seed = seed};
}

MixingStrategy MixingStrategy::block_shuffle(std::uint64_t seed) {
    return {.kind = Kind::BlockShuffle, .seed = seed};
}

MixingStrategy MixingStrategy::local_swap(long long swap_count, long long window,
                                          std::uint64_t seed) {
    return {.kind = Kind::LocalSwap, .seed = seed, .swap_count = swap_count, .window = window};
}

MixingStrategy MixingStrategy::two_sided_feed(int block) {
    return {.kind = Kind::TwoSidedFeed, .block = block};
}

namespace {

long long parse_number(std::string_view text, std::string_view what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw std::domain_error("bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

}  // namespace

MixingStrategy MixingStrategy::parse(std::string_view text, std::uint64_t seed) {
    if (text == "cyclic") return cyclic();
    if (text == "iid") return uniform_iid(seed);
    if (text == "block") return block_shuffle(seed);
    if (text.starts_with("swap:")) {
        const auto rest = text.substr(5);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw std::domain_error("expected swap:COUNT:WINDOW, got '" + std::string(text) + "'");
        return local_swap(parse_number(rest.substr(0, colon), "swap count"),
                          parse_number(rest.substr(colon + 1), "swap window"), seed);
    }
    if (text.starts_with("twosided:")) {
        return two_sided_feed(static_cast<int>(parse_number(text.substr(9), "feed block")));
    }
    throw std::domain_error("unknown mixing strategy '" + std::string(text) +
                            "' (cyclic | iid | block | swap:COUNT:WINDOW | twosided:BLOCK)");
}

std::string MixingStrategy::describe() const {
    switch (kind) {
        case Kind::Cyclic: return "cyclic";
        case Kind::UniformIid: return "iid";
        case Kind::BlockShuffle: return "block";
        case Kind::LocalSwap:
            return "swap:" + std::to_string(swap_count) + ":" + std::to_string(window);
        case Kind::TwoSidedFeed: return "twosided:" + std::to_string(block);
    }
    return "?";
}

QuadrotteSequence generate_sequence(const AlbumConfig& cfg, const MixingStrategy& strategy,
                                    long long length) {
    if (length < 1) throw std::domain_error("sequence length must be positive");
    const int q = cfg.sheet_count();
    std::vector<int> sheets;
    sheets.reserve(static_cast<std::size_t>(length));

    switch (strategy.kind) {
        case MixingStrategy::Kind::Cyclic: {
            for (long long t = 0; t < length; ++t) sheets.push_back(static_cast<int>(t % q) + 1);
            break;
        }
        case MixingStrategy::Kind::UniformIid: {
            Rng rng(strategy.seed);
            for (long long t = 0; t < length; ++t)
                sheets.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(q))) + 1);
            break;
        }
        case MixingStrategy::Kind::BlockShuffle: {
            Rng rng(strategy.seed);
            std::vector<int> block(static_cast<std::size_t>(q));
            while (std::ssize(sheets) < length) {
                for (int i = 0; i < q; ++i) block[static_cast<std::size_t>(i)] = i + 1;
                // Fisher-Yates
                for (int i = q - 1; i > 0; --i) {
                    const auto j = rng.below(static_cast<std::uint64_t>(i + 1));
                    std::swap(block[static_cast<std::size_t>(i)], block[j]);
                }
                for (int v : block) {
                    if (std::ssize(sheets) == length) break;
                    sheets.push_back(v);
                }
            }
            break;
        }
        case MixingStrategy::Kind::LocalSwap: {
            if (strategy.window < 1) throw std::domain_error("swap window must be positive");
            if (strategy.window >= length)
                throw std::domain_error("swap window must be smaller than the sequence length");
            if (strategy.swap_count < 0) throw std::domain_error("swap count must be non-negative");
            for (long long t = 0; t < length; ++t) sheets.push_back(static_cast<int>(t % q) + 1);
            Rng rng(strategy.seed);
            for (long long s = 0; s < strategy.swap_count; ++s) {
                const long long a =
                    static_cast<long long>(rng.below(static_cast<std::uint64_t>(length)));
                const long long lo = std::max<long long>(0, a - strategy.window);
                const long long hi = std::min<long long>(length - 1, a + strategy.window);
                // uniform neighbor b != a within [lo, hi]
                long long b =
                    lo + static_cast<long long>(rng.below(static_cast<std::uint64_t>(hi - lo)));
                if (b >= a) ++b;
                std::swap(sheets[static_cast<std::size_t>(a)], sheets[static_cast<std::size_t>(b)]);
            }
            break;
        }
        case MixingStrategy::Kind::TwoSidedFeed: {
            const int block = strategy.block == 0 ? q : strategy.block;
            if (block < 1) throw std::domain_error("feed block must be positive");
            if (block > q)
                throw std::domain_error("feed block must not exceed the sheet count q");
            // interleave from both ends: 1, block, 2, block-1, ...
            std::vector<int> pattern;
            pattern.reserve(static_cast<std::size_t>(block));
            int front = 1, back = block;
            while (front <= back) {
                pattern.push_back(front++);
                if (front <= back) pattern.push_back(back--);
            }
            while (std::ssize(sheets) < length)
                for (int v : pattern) {
                    if (std::ssize(sheets) == length) break;
                    sheets.push_back(v);
                }
            break;
        }
    }
    return QuadrotteSequence{strategy, std::move(sheets)};
}

}  // namespace stickersim
