#pragma once

// Seeded instance factories shared by the unit and acceptance suites.

#include <algorithm>
#include <cstddef>

#include "auctionsim/model.hpp"
#include "auctionsim/rng.hpp"

namespace auctionsim::testing {

struct InstanceShape {
  std::size_t n_min = 2;
  std::size_t n_max = 8;
  std::size_t k_min = 1;
  std::size_t k_max = 4;
  double value_lo = 0.5;
  double value_hi = 4.0;
  double tie_probability = 0.25;  // chance a bidder copies an earlier value exactly
};

// Values drawn uniformly with occasional exact ties, truthful reports,
// allowances mixed over {0, U[0, 2*value*ctr_1], unbounded}, CTRs sorted
// descending from U[0.05, 1].
inline AuctionInstance random_instance(RandomSource& rng, const InstanceShape& shape = {}) {
  AuctionInstance instance;
  const std::size_t n =
      shape.n_min + static_cast<std::size_t>(rng.index(shape.n_max - shape.n_min + 1));
  const std::size_t k_cap = std::min(shape.k_max, n);
  const std::size_t k =
      shape.k_min + static_cast<std::size_t>(rng.index(k_cap - shape.k_min + 1));

  for (std::size_t j = 0; j < k; ++j) instance.ctrs.push_back(rng.uniform(0.05, 1.0));
  std::sort(instance.ctrs.begin(), instance.ctrs.end(), std::greater<>());
  const double top_ctr = instance.ctrs.front();

  for (std::size_t i = 0; i < n; ++i) {
    Bidder bidder;
    if (i > 0 && rng.uniform01() < shape.tie_probability) {
      bidder.value = instance.bidders[rng.index(i)].value;
    } else {
      bidder.value = rng.uniform(shape.value_lo, shape.value_hi);
    }
    const std::uint64_t kind = rng.index(3);
    if (kind == 0) {
      bidder.allowance = 0.0;
    } else if (kind == 1) {
      bidder.allowance = rng.uniform(0.0, 2.0 * bidder.value * top_ctr);
    } else {
      bidder.allowance = kUnboundedAllowance;
    }
    instance.bidders.push_back(bidder);
    instance.reports.push_back(bidder.value);
  }
  return instance;
}

// Two bidders with value 1 and allowance 1/2 competing for one slot: the
// scenario where plain second price rewards an overbid.
inline AuctionInstance second_price_tie_scenario() {
  AuctionInstance instance;
  instance.bidders = {{1.0, 0.5}, {1.0, 0.5}};
  instance.reports = {1.0, 1.0};
  instance.ctrs = {1.0};
  return instance;
}

// Two slots against rival bids 1 and 0.5: a bidder with value 0.9 and
// allowance 0.5 sits in the window where a threshold-payment mechanism that
// ignores allowances must violate strict unit-price growth.
inline AuctionInstance unit_price_trap_scenario() {
  AuctionInstance instance;
  instance.bidders = {{1.0, 0.0}, {0.5, 0.0}, {0.9, 0.5}};
  instance.reports = {1.0, 0.5, 0.9};
  instance.ctrs = {1.0, 0.4};
  return instance;
}

// A single-slot instance with a deliberate group of bidders sharing the top
// value exactly.
inline AuctionInstance tied_single_slot_instance(RandomSource& rng) {
  AuctionInstance instance;
  instance.ctrs = {rng.uniform(0.2, 1.0)};
  const std::size_t n = 3 + static_cast<std::size_t>(rng.index(4));
  const std::size_t tied = 2 + static_cast<std::size_t>(rng.index(n - 1));
  const double top = rng.uniform(1.0, 3.0);
  for (std::size_t i = 0; i < n; ++i) {
    Bidder bidder;
    bidder.value = i < tied ? top : rng.uniform(0.2, top);
    const std::uint64_t kind = rng.index(3);
    if (kind == 0) {
      bidder.allowance = 0.0;
    } else if (kind == 1) {
      bidder.allowance = rng.uniform(0.0, 2.0 * bidder.value);
    } else {
      bidder.allowance = kUnboundedAllowance;
    }
    instance.bidders.push_back(bidder);
    instance.reports.push_back(bidder.value);
  }
  return instance;
}

}  // namespace auctionsim::testing
