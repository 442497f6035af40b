#include "stickersim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace stickersim {

DuplicateSummary count_duplicates(std::span<const StickerId> stickers) {
    DuplicateSummary s;
    s.total = std::ssize(stickers);
    std::unordered_map<StickerId, long long> mult;
    mult.reserve(stickers.size());
    for (StickerId x : stickers) ++mult[x];
    s.distinct = std::ssize(mult);
    s.duplicates = s.total - s.distinct;
    for (const auto& [id, m] : mult) ++s.per_multiplicity[m];
    return s;
}

long long duplicate_count(std::span<const StickerId> stickers) {
    return count_duplicates(stickers).duplicates;
}

long long longest_consecutive_run(std::span<const StickerId> stream, RunDirection direction) {
    if (stream.empty()) return 0;
    long long best = 1, current = 1;
    for (std::size_t i = 1; i < stream.size(); ++i) {
        const int delta = stream[i] - stream[i - 1];
        const bool step = direction == RunDirection::Ascending ? delta == 1 : std::abs(delta) == 1;
        current = step ? current + 1 : 1;
        best = std::max(best, current);
    }
    return best;
}

double empirical_quantile(std::vector<double> values, double p) {
    if (values.empty()) throw std::domain_error("quantile of empty sample");
    if (p < 0.0 || p > 1.0) throw std::domain_error("quantile level outside [0, 1]");
    std::sort(values.begin(), values.end());
    const double h = p * (static_cast<double>(values.size()) - 1.0);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

MonteCarloInterval monte_carlo_interval(const std::function<double(Rng&)>& statistic,
                                        long long replicates, double level, std::uint64_t seed,
                                        std::string statistic_name) {
    if (replicates < 1) throw std::domain_error("need at least one replicate");
    if (level <= 0.0 || level >= 1.0) throw std::domain_error("level must lie in (0, 1)");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(replicates));
    for (long long r = 0; r < replicates; ++r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        values.push_back(statistic(rng));
    }
    const double tail = (1.0 - level) / 2.0;
    MonteCarloInterval out;
    out.lower = empirical_quantile(values, tail);
    out.upper = empirical_quantile(std::move(values), 1.0 - tail);
    out.level = level;
    out.replicates = replicates;
    out.statistic_name = std::move(statistic_name);
    return out;
}

std::vector<std::vector<long long>> pairwise_duplicate_matrix(
    const std::vector<Display>& displays) {
    if (displays.size() < 2) throw std::domain_error("need at least two displays");
    const std::size_t n = displays.size();
    std::vector<std::vector<StickerId>> cards(n);
    for (std::size_t i = 0; i < n; ++i) cards[i] = displays[i].stickers();

    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        m[a][a] = duplicate_count(cards[a]);
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<StickerId> pooled = cards[a];
            pooled.insert(pooled.end(), cards[b].begin(), cards[b].end());
            m[a][b] = m[b][a] = duplicate_count(pooled);
        }
    }
    return m;
}

long long significance_count(const std::vector<std::vector<long long>>& matrix,
                             const MonteCarloInterval& interval, IntervalBoundary boundary) {
    long long count = 0;
    for (std::size_t a = 0; a < matrix.size(); ++a)
        for (std::size_t b = a + 1; b < matrix.size(); ++b) {
            const auto v = static_cast<double>(matrix[a][b]);
            const bool outside = boundary == IntervalBoundary::Closed
                                     ? (v < interval.lower || v > interval.upper)
                                     : (v <= interval.lower || v >= interval.upper);
            if (outside) ++count;
        }
    return count;
}

double sample_skewness(std::span<const double> values) {
    const auto n = static_cast<double>(values.size());
    if (values.size() < 3) throw std::domain_error("skewness needs at least three values");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double m2 = 0.0, m3 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    if (m2 == 0.0) throw std::domain_error("skewness undefined for constant sample");
    const double g1 = m3 / std::pow(m2, 1.5);
    return g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0);
}

std::vector<double> moving_average(std::span<const double> values, int window) {
    if (window < 1) throw std::domain_error("window must be positive");
    std::vector<double> out;
    if (std::ssize(values) < window) return out;
    out.reserve(values.size() - static_cast<std::size_t>(window) + 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum += values[i];
        if (std::ssize(out) == 0 && i + 1 == static_cast<std::size_t>(window)) {
            out.push_back(sum / window);
        } else if (i + 1 > static_cast<std::size_t>(window)) {
            sum -= values[i - static_cast<std::size_t>(window)];
            out.push_back(sum / window);
        }
    }
    return out;
}

}  // namespace stickersim
