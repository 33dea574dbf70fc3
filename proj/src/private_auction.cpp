#include "auctionsim/private_auction.hpp"

#include <algorithm>
#include <stdexcept>

namespace auctionsim {

std::vector<std::size_t> PartitionState::pricing_set() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in_first.size(); ++i) {
    if (is_pricing(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> PartitionState::target_set() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in_first.size(); ++i) {
    if (!is_pricing(i)) out.push_back(i);
  }
  return out;
}

PartitionState draw_partition(std::size_t n, RandomSource& rng) {
  PartitionState partition;
  partition.in_first.resize(n);
  for (std::size_t i = 0; i < n; ++i) partition.in_first[i] = rng.coin();
  partition.first_is_pricing = rng.coin();
  return partition;
}

Outcome run_single_slot(const BidProfile& reports, double epsilon, double alpha1) {
  if (reports.empty()) throw std::invalid_argument("single-slot auction needs a bidder");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  const std::size_t n = reports.size();
  Outcome outcome = Outcome::empty(n);

  std::vector<RoundedBid> rounded;
  rounded.reserve(n);
  for (double bid : reports) rounded.push_back(round_bid(bid, epsilon));

  Exponent top = kExponentNegInf;
  for (const RoundedBid& bid : rounded) top = std::max(top, bid.exponent);
  if (top == kExponentNegInf) return outcome;  // all reports zero: no sale

  std::size_t winner = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (rounded[i].exponent == top) {
      winner = i;
      break;
    }
  }

  // Threshold payment: the smallest rounded bid that still wins against the
  // other reports. With rivals' best rounded exponent e held by first_rival,
  // a lower-indexed winner keeps the slot on a tie at e and pays (1+eps)^e;
  // a higher-indexed one must clear the tie and pays (1+eps)^{e+1}. Either
  // way the charge is independent of the winner's own report.
  Exponent rival_best = kExponentNegInf;
  std::size_t first_rival = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == winner) continue;
    if (rounded[i].exponent > rival_best) {
      rival_best = rounded[i].exponent;
      first_rival = i;
    }
  }

  outcome.assignment[winner] = 0;
  if (rival_best == kExponentNegInf) {
    outcome.payments[winner] = 0.0;
  } else if (winner < first_rival) {
    outcome.payments[winner] = power_of(1.0 + epsilon, rival_best) * alpha1;
  } else {
    outcome.payments[winner] = power_of(1.0 + epsilon, rival_best + 1) * alpha1;
  }
  return outcome;
}

std::optional<std::size_t> select_best_slot(const Bidder& bidder,
                                            const std::vector<PricedSlot>& offers,
                                            const CtrProfile& ctrs) {
  std::optional<std::size_t> best;
  double best_utility = kNegativeInfinity;
  for (const PricedSlot& offer : offers) {
    if (!offer.available) continue;
    const double ctr = ctrs[offer.slot];
    const double utility =
        allowance_utility(bidder.value, bidder.allowance, ctr, offer.unit_price * ctr);
    // ties toward the lowest slot index
    if (utility > best_utility || (utility == best_utility && best && offer.slot < *best)) {
      best_utility = utility;
      best = offer.slot;
    }
  }
  if (!best.has_value() || !approx_geq(best_utility, 0.0)) return std::nullopt;
  return best;
}

LargeMarketTrace run_large_market_with(const AuctionInstance& instance,
                                       const PartitionState& partition) {
  require_valid(instance);
  const std::size_t n = instance.num_bidders();
  const std::size_t k = instance.num_slots();

  LargeMarketTrace trace;
  trace.partition = partition;
  trace.outcome = Outcome::empty(n);

  std::vector<double> pricing_bids;
  for (std::size_t i : partition.pricing_set()) pricing_bids.push_back(instance.reports[i]);
  std::sort(pricing_bids.begin(), pricing_bids.end(), std::greater<>());

  trace.slot_reference_prices.assign(k, 0.0);
  for (std::size_t j = 0; j < k && j < pricing_bids.size(); ++j) {
    trace.slot_reference_prices[j] = pricing_bids[j];
  }

  std::vector<PricedSlot> offers;
  offers.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    offers.push_back({j, 0.5 * trace.slot_reference_prices[j], true});
  }

  for (std::size_t i : partition.target_set()) {
    const std::optional<std::size_t> choice =
        select_best_slot(instance.bidders[i], offers, instance.ctrs);
    if (!choice.has_value()) continue;
    offers[*choice].available = false;
    trace.outcome.assignment[i] = *choice;
    trace.outcome.payments[i] = offers[*choice].unit_price * instance.ctrs[*choice];
  }
  return trace;
}

LargeMarketTrace run_large_market_traced(const AuctionInstance& instance, RandomSource& rng) {
  require_valid(instance);
  return run_large_market_with(instance, draw_partition(instance.num_bidders(), rng));
}

Outcome run_large_market(const AuctionInstance& instance, RandomSource& rng) {
  return run_large_market_traced(instance, rng).outcome;
}

CombinedResult run_combined(const AuctionInstance& instance, const CombinedParams& params,
                            RandomSource& rng) {
  require_valid(instance);
  if (!(params.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double draw = rng.uniform01();
  if (draw < params.p_single) {
    const double alpha1 = instance.num_slots() > 0 ? instance.ctrs.front() : 0.0;
    return CombinedResult{run_single_slot(instance.reports, params.epsilon, alpha1), true};
  }
  return CombinedResult{run_large_market(instance, rng), false};
}

}  // namespace auctionsim
