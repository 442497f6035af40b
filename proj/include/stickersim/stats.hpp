#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "stickersim/album.hpp"
#include "stickersim/rng.hpp"

namespace stickersim {

// Duplicates are excess copies: total minus distinct.
struct DuplicateSummary {
    long long total = 0;
    long long distinct = 0;
    long long duplicates = 0;
    std::map<long long, long long> per_multiplicity;  // multiplicity -> #ids
};

DuplicateSummary count_duplicates(std::span<const StickerId> stickers);
long long duplicate_count(std::span<const StickerId> stickers);

enum class RunDirection {
    Ascending,   // every step is exactly +1
    EitherStep,  // every step is +1 or -1
};

// Length (in cards) of the longest segment of adjacent stream positions whose
// album numbers change by one per step. Empty stream -> 0, single card -> 1.
long long longest_consecutive_run(std::span<const StickerId> stream,
                                  RunDirection direction = RunDirection::Ascending);

struct MonteCarloInterval {
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.95;
    long long replicates = 0;
    std::string statistic_name;

    bool contains(double v) const { return v >= lower && v <= upper; }
};

// Empirical central interval of `statistic` over `replicates` independent
// model draws. Replicate r uses Rng(derive_seed(seed, r)); quantiles by
// linear interpolation of order statistics.
MonteCarloInterval monte_carlo_interval(const std::function<double(Rng&)>& statistic,
                                        long long replicates, double level, std::uint64_t seed,
                                        std::string statistic_name = "");

// Interpolated empirical quantile (same convention as monte_carlo_interval).
double empirical_quantile(std::vector<double> values, double p);

// Symmetric matrix of pooled duplicate counts: entry (a, b), a != b, is
// count_duplicates over the concatenation of both displays' stickers.
// Diagonal holds each display's own internal duplicates.
std::vector<std::vector<long long>> pairwise_duplicate_matrix(const std::vector<Display>& displays);

enum class IntervalBoundary {
    Closed,  // values equal to an endpoint count as inside
    Open,    // endpoint values count as significant
};

// Number of upper-triangle entries (a < b) outside the interval.
long long significance_count(const std::vector<std::vector<long long>>& matrix,
                             const MonteCarloInterval& interval,
                             IntervalBoundary boundary = IntervalBoundary::Closed);

// Adjusted Fisher-Pearson standardized third moment,
// g1 * sqrt(n(n-1))/(n-2). Throws for n < 3 or zero variance.
double sample_skewness(std::span<const double> values);

// Trailing mean once the window is filled; result has size
// max(0, n - window + 1).
std::vector<double> moving_average(std::span<const double> values, int window);

}  // namespace stickersim
