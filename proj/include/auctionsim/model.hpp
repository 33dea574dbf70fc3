#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "auctionsim/numeric.hpp"

namespace auctionsim {

// One advertiser: a private per-click value and an allowance. The allowance
// is the payment threshold below which the bidder acts as a pure value
// maximizer; kUnboundedAllowance marks an unconstrained value maximizer.
struct Bidder {
  double value = 0.0;
  double allowance = 0.0;
};

using BidProfile = std::vector<double>;  // one reported bid per bidder, >= 0
using CtrProfile = std::vector<double>;  // slot click-through rates, non-increasing

struct AuctionInstance {
  std::vector<Bidder> bidders;
  BidProfile reports;
  CtrProfile ctrs;

  std::size_t num_bidders() const { return bidders.size(); }
  std::size_t num_slots() const { return ctrs.size(); }
};

// Slot assignment (nullopt = dummy slot) and payment per bidder. Real slots
// are assigned to at most one bidder; unassigned bidders pay 0.
struct Outcome {
  std::vector<std::optional<std::size_t>> assignment;
  std::vector<double> payments;

  static Outcome empty(std::size_t n) {
    return Outcome{std::vector<std::optional<std::size_t>>(n), std::vector<double>(n, 0.0)};
  }
};

// Bid rounded down to an integer power of (1+eps). A zero bid maps to the
// -inf exponent sentinel with rounded value 0 and never outranks a positive
// bid.
struct RoundedBid {
  Exponent exponent = kExponentNegInf;
  double rounded = 0.0;

  bool is_zero() const { return exponent == kExponentNegInf; }
};

struct WelfareReport {
  double optimal_welfare = 0.0;
  std::vector<std::optional<std::size_t>> optimal_assignment;
  double achieved_welfare = 0.0;
  double max_single_contribution = 0.0;  // max_i value_i * ctr_1
  double rho_observed = 0.0;             // optimal_welfare / max_single_contribution
};

// Utility of obtaining a slot with click rate `ctr` at price `payment`:
//   value*ctr - max(0, payment - allowance)   if payment <= value*ctr,
//   -infinity                                 otherwise.
// Total on all inputs; allowance may be kUnboundedAllowance.
double allowance_utility(double value, double allowance, double ctr, double payment);

// Sum of true value times assigned-slot CTR, accumulated in bidder order.
// Throws std::invalid_argument on dimension mismatch or a doubly-sold slot.
double social_welfare(const AuctionInstance& instance, const Outcome& outcome);

// Assortative optimum: the i-th highest true value takes slot i, value ties
// broken toward the lower bidder index. Fills everything except
// achieved_welfare.
WelfareReport optimal_welfare(const AuctionInstance& instance);

// optimal_welfare plus the achieved welfare of a concrete outcome.
WelfareReport assess_outcome(const AuctionInstance& instance, const Outcome& outcome);

RoundedBid round_bid(double bid, double epsilon);

// Machine-readable invariant violations; empty means the instance is valid.
std::vector<std::string> validate_instance(const AuctionInstance& instance);

// Throws std::invalid_argument listing all violations.
void require_valid(const AuctionInstance& instance);

// Utility of `bidder` under `outcome` evaluated at her true value/allowance.
double realized_utility(const AuctionInstance& instance, const Outcome& outcome,
                        std::size_t bidder);

// Bidders ordered by rounded bid descending, ties by ascending index.
// Zero bids are excluded: they never rank.
std::vector<std::size_t> rank_by_rounded_bid(const std::vector<RoundedBid>& rounded);

}  // namespace auctionsim
