#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "stickersim/album.hpp"
#include "stickersim/rng.hpp"

namespace stickersim {

using BigInt = boost::multiprecision::cpp_int;

// `count` independent uniform draws from [1, B]; repeats allowed.
std::vector<StickerId> draw_iid_cards(int total_stickers, int count, Rng& rng);

// Uniform random `count`-subset of [1, B] in uniform random order
// (partial Fisher-Yates; sampling without replacement).
std::vector<StickerId> draw_distinct_cards(int total_stickers, int count, Rng& rng);

// The baseline packet model: P pairwise-distinct stickers, uniform over all
// C(B, P) subsets, order randomized.
Packet draw_packet_classical(const AlbumConfig& cfg, Rng& rng);

// One collection experiment: buy packets until `target` distinct stickers.
struct CollectionRun {
    std::vector<StickerId> cards_bought;
    // (packet index starting at 1, distinct stickers owned after that packet)
    std::vector<std::pair<long long, int>> distinct_curve;
    // Card position at which the target was crossed, counted card by card
    // inside packets (not rounded up to the packet boundary).
    long long completion_card_count = 0;
};

CollectionRun simulate_until_target(const AlbumConfig& cfg, int target, Rng& rng);

// Same stopping rule without recording the cards or the curve.
long long cards_to_target(const AlbumConfig& cfg, int target, Rng& rng);

// Expected cards to reach `target` distinct under the single-card model:
// sum_{k=0}^{target-1} B/(B-k).
double expected_cards_to_target(int total_stickers, int target);

// Standard deviation of the same quantity: sqrt(sum (1-p_k)/p_k^2),
// p_k = (B-k)/B (sum of independent geometric waits).
double std_cards_to_target(int total_stickers, int target);

// Expected duplicates among D uniform card draws: D - B*(1 - (1-1/B)^D).
// Duplicates means total minus distinct.
double expected_duplicates_in_display(int total_stickers, int display_cards);

// log10 of the probability that m packets of size P (each internally
// distinct, uniform over subsets) are pairwise disjoint:
// sum_j log10 C(B-jP, P) - log10 C(B, P). Computed with log-gamma; returns
// -infinity when m*P > B.
double log10_prob_zero_duplicates(int total_stickers, int packet_size, int packet_count);

// Exact C(B, P).
BigInt classical_packet_count(int total_stickers, int packet_size);

// Exact 4*(B/4n)^n, the number of distinct packets the machine can emit.
// Requires 4n | B.
BigInt fifimatic_packet_count(int total_stickers, int quadrotte_rows);

}  // namespace stickersim
