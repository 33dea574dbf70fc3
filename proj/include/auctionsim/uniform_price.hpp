#pragma once

#include "auctionsim/model.hpp"
#include "auctionsim/private_auction.hpp"
#include "auctionsim/rng.hpp"

namespace auctionsim {

struct UniformPriceParams {
  double beta = 0.0;  // in (0, 1]
};

// Best threshold fraction for a market of k slots where no bidder-slot pair
// contributes more than a 1/rho fraction of the optimum:
// 1 - sqrt(1 - rho/(3k)). Domain error when rho <= 0 or rho > 3k.
double optimal_beta(double rho, std::size_t k);

// Minimal t with ctrs[0] + ... + ctrs[t-1] >= beta * (total CTR mass).
// Returns a 1-based count. Throws when the CTR mass is zero.
std::size_t threshold_index(const CtrProfile& ctrs, double beta);

// Per-run record: the partition, the prefix length t, the market price (the
// t-th highest pricing-set bid) and the t-th highest bid of each group.
struct UniformPriceTrace {
  PartitionState partition;
  std::size_t threshold = 0;
  double market_price = 0.0;
  double first_group_price = 0.0;
  double second_group_price = 0.0;
  Outcome outcome;
};

// Uniform-price large-market auction: one market price for every slot, set by
// the pricing half; target-set bidders buy in ascending index order.
Outcome run_uniform_price(const AuctionInstance& instance, const UniformPriceParams& params,
                          RandomSource& rng);
UniformPriceTrace run_uniform_price_traced(const AuctionInstance& instance,
                                           const UniformPriceParams& params, RandomSource& rng);
UniformPriceTrace run_uniform_price_with(const AuctionInstance& instance,
                                         const UniformPriceParams& params,
                                         const PartitionState& partition);

}  // namespace auctionsim
