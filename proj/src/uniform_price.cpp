#include "auctionsim/uniform_price.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace auctionsim {

double optimal_beta(double rho, std::size_t k) {
  if (k == 0) throw std::domain_error("no slots");
  if (!(rho > 0.0)) throw std::domain_error("rho must be positive");
  const double ratio = rho / (3.0 * static_cast<double>(k));
  if (ratio > 1.0) throw std::domain_error("rho exceeds 3k; pick beta explicitly");
  return 1.0 - std::sqrt(1.0 - ratio);
}

std::size_t threshold_index(const CtrProfile& ctrs, double beta) {
  if (!(beta > 0.0) || beta > 1.0) throw std::invalid_argument("beta must be in (0, 1]");
  double total = 0.0;
  for (double ctr : ctrs) total += ctr;
  if (!(total > 0.0)) throw std::invalid_argument("CTR mass is zero");
  double prefix = 0.0;
  for (std::size_t t = 0; t < ctrs.size(); ++t) {
    prefix += ctrs[t];
    if (approx_geq(prefix, beta * total)) return t + 1;
  }
  return ctrs.size();
}

namespace {

// t-th highest value of the reports restricted to `members`; 0 when short.
double nth_highest(const AuctionInstance& instance, const std::vector<std::size_t>& members,
                   std::size_t t) {
  std::vector<double> bids;
  bids.reserve(members.size());
  for (std::size_t i : members) bids.push_back(instance.reports[i]);
  if (bids.size() < t) return 0.0;
  std::nth_element(bids.begin(), bids.begin() + (t - 1), bids.end(), std::greater<>());
  return bids[t - 1];
}

}  // namespace

UniformPriceTrace run_uniform_price_with(const AuctionInstance& instance,
                                         const UniformPriceParams& params,
                                         const PartitionState& partition) {
  require_valid(instance);
  const std::size_t n = instance.num_bidders();
  const std::size_t k = instance.num_slots();

  UniformPriceTrace trace;
  trace.partition = partition;
  trace.outcome = Outcome::empty(n);
  trace.threshold = threshold_index(instance.ctrs, params.beta);

  std::vector<std::size_t> first_group;
  std::vector<std::size_t> second_group;
  for (std::size_t i = 0; i < n; ++i) {
    (partition.in_first[i] ? first_group : second_group).push_back(i);
  }
  trace.first_group_price = nth_highest(instance, first_group, trace.threshold);
  trace.second_group_price = nth_highest(instance, second_group, trace.threshold);
  trace.market_price =
      partition.first_is_pricing ? trace.first_group_price : trace.second_group_price;

  std::vector<PricedSlot> offers;
  offers.reserve(k);
  for (std::size_t j = 0; j < k; ++j) offers.push_back({j, trace.market_price, true});

  for (std::size_t i : partition.target_set()) {
    const std::optional<std::size_t> choice =
        select_best_slot(instance.bidders[i], offers, instance.ctrs);
    if (!choice.has_value()) continue;
    offers[*choice].available = false;
    trace.outcome.assignment[i] = *choice;
    trace.outcome.payments[i] = trace.market_price * instance.ctrs[*choice];
  }
  return trace;
}

UniformPriceTrace run_uniform_price_traced(const AuctionInstance& instance,
                                           const UniformPriceParams& params, RandomSource& rng) {
  require_valid(instance);
  return run_uniform_price_with(instance, params, draw_partition(instance.num_bidders(), rng));
}

Outcome run_uniform_price(const AuctionInstance& instance, const UniformPriceParams& params,
                          RandomSource& rng) {
  return run_uniform_price_traced(instance, params, rng).outcome;
}

}  // namespace auctionsim
