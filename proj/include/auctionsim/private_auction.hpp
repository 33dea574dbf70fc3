#pragma once

#include <cmath>

#include "auctionsim/model.hpp"
#include "auctionsim/rng.hpp"

namespace auctionsim {

// Random halving of the bidders plus the designation of which half sets
// prices (the pricing benchmark set) and which half buys (the target set).
struct PartitionState {
  std::vector<bool> in_first;  // per bidder: first group or second group
  bool first_is_pricing = true;

  std::vector<std::size_t> pricing_set() const;
  std::vector<std::size_t> target_set() const;
  bool is_pricing(std::size_t bidder) const { return in_first[bidder] == first_is_pricing; }
};

// Membership coin per bidder in index order, then one designation coin.
PartitionState draw_partition(std::size_t n, RandomSource& rng);

struct PricedSlot {
  std::size_t slot = 0;
  double unit_price = 0.0;
  bool available = true;
};

// Branch probabilities of the combined auction. The single-slot branch fires
// with probability sqrt(3)/(12+sqrt(3)).
struct CombinedParams {
  double p_single = 0.0;
  double p_large = 0.0;
  double epsilon = 0.0;

  static CombinedParams standard(double epsilon) {
    const double root3 = std::sqrt(3.0);
    return CombinedParams{root3 / (12.0 + root3), 12.0 / (12.0 + root3), epsilon};
  }
};

// Single-slot auction on rounded bids: the highest rounded bid wins, ties to
// the smallest index. The winner pays her threshold, the smallest rounded bid
// that still wins against the others: the rivals' best rounded bid when her
// index precedes theirs (so she would keep a tie, and in an actual tie this
// is her own rounded bid), one rounding step above it otherwise. Payments
// scale by `alpha1`, the CTR of the slot being sold. All-zero reports sell
// nothing.
Outcome run_single_slot(const BidProfile& reports, double epsilon, double alpha1 = 1.0);

// The most profitable offer for a bidder with the given true value and
// allowance, or nullopt when every offer has negative or -inf utility.
// A bidder indifferent at utility 0 buys; ties go to the lowest slot index.
std::optional<std::size_t> select_best_slot(const Bidder& bidder,
                                            const std::vector<PricedSlot>& offers,
                                            const CtrProfile& ctrs);

// Per-run record of the large-market auction: the partition, the per-slot
// reference prices taken from the pricing set (before halving) and the
// resulting outcome.
struct LargeMarketTrace {
  PartitionState partition;
  std::vector<double> slot_reference_prices;  // j-th highest pricing-set bid, 0 when short
  Outcome outcome;
};

// Random-sampling large-market auction: prices each slot j at half the j-th
// highest bid of the pricing set and lets target-set bidders, in ascending
// index order, pick their best remaining slot.
Outcome run_large_market(const AuctionInstance& instance, RandomSource& rng);
LargeMarketTrace run_large_market_traced(const AuctionInstance& instance, RandomSource& rng);
LargeMarketTrace run_large_market_with(const AuctionInstance& instance,
                                       const PartitionState& partition);

struct CombinedResult {
  Outcome outcome;
  bool ran_single_slot = false;
};

// One uniform draw selects the branch; the large-market branch continues on
// the same random stream.
CombinedResult run_combined(const AuctionInstance& instance, const CombinedParams& params,
                            RandomSource& rng);

}  // namespace auctionsim
