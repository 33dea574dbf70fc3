#pragma once

// Independent oracles used only by tests: exhaustive search and term-by-term
// evaluation kept deliberately separate from the library's own algorithms.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "auctionsim/model.hpp"
#include "auctionsim/public_auction.hpp"

namespace auctionsim::testing {

// Maximum welfare over every injective assignment of slots to bidders,
// accumulating in slot order (matching social_welfare exactly).
inline double brute_force_optimal_welfare(const AuctionInstance& instance) {
  const std::size_t n = instance.num_bidders();
  const std::size_t k = instance.num_slots();
  const std::size_t filled = std::min(k, n);
  std::vector<std::size_t> bidder_of(filled, 0);
  std::vector<bool> used(n, false);
  double best = 0.0;

  const auto recurse = [&](auto&& self, std::size_t slot) -> void {
    if (slot == filled) {
      double sum = 0.0;
      for (std::size_t j = 0; j < filled; ++j) {
        sum += instance.bidders[bidder_of[j]].value * instance.ctrs[j];
      }
      best = std::max(best, sum);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      bidder_of[slot] = i;
      self(self, slot + 1);
      used[i] = false;
    }
  };
  recurse(recurse, 0);
  return best;
}

// Exact probability over all 2^l equiprobable subsets that the subset sum
// lands strictly inside (total/3, 2*total/3).
inline double enumerate_sum_window_probability(const std::vector<double>& numbers) {
  const std::size_t l = numbers.size();
  double total = 0.0;
  for (double x : numbers) total += x;
  const double lower = total / 3.0;
  const double upper = 2.0 * total / 3.0;
  std::size_t hits = 0;
  const std::size_t subsets = std::size_t{1} << l;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    double sum = 0.0;
    for (std::size_t i = 0; i < l; ++i) {
      if (mask & (std::size_t{1} << i)) sum += numbers[i];
    }
    if (sum > lower && sum < upper) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(subsets);
}

// Maximum of sum-of-minima over all matchings between a and b (any subset of
// pairs, each element used at most once).
inline double brute_force_max_min_matching(const std::vector<double>& a,
                                           const std::vector<double>& b) {
  const std::vector<double>& small = a.size() <= b.size() ? a : b;
  const std::vector<double>& large = a.size() <= b.size() ? b : a;
  double best = 0.0;
  const auto recurse = [&](auto&& self, std::size_t i, std::size_t used_mask,
                           double sum) -> void {
    best = std::max(best, sum);
    if (i == small.size()) return;
    self(self, i + 1, used_mask, sum);  // leave small[i] unmatched
    for (std::size_t j = 0; j < large.size(); ++j) {
      if (used_mask & (std::size_t{1} << j)) continue;
      self(self, i + 1, used_mask | (std::size_t{1} << j),
           sum + std::min(small[i], large[j]));
    }
  };
  recurse(recurse, 0, 0, 0.0);
  return best;
}

// Exact probability over all 2^l partitions that the descending rank matching
// between the two sides exceeds (total/3)(1 - 1/rho).
inline double enumerate_matching_probability(const std::vector<double>& numbers, double rho) {
  const std::size_t l = numbers.size();
  double total = 0.0;
  for (double x : numbers) total += x;
  const double bound = total / 3.0 * (1.0 - 1.0 / rho);
  std::size_t hits = 0;
  const std::size_t partitions = std::size_t{1} << l;
  std::vector<double> side_a;
  std::vector<double> side_b;
  for (std::size_t mask = 0; mask < partitions; ++mask) {
    side_a.clear();
    side_b.clear();
    for (std::size_t i = 0; i < l; ++i) {
      ((mask >> i) & 1U ? side_a : side_b).push_back(numbers[i]);
    }
    const std::size_t pairs = std::min(side_a.size(), side_b.size());
    double sum = 0.0;
    for (std::size_t t = 0; t < pairs; ++t) sum += std::min(side_a[t], side_b[t]);
    if (sum > bound) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(partitions);
}

// Term-by-term evaluation of the threshold payment, scanning every integer
// exponent instead of walking segments.
inline double naive_public_payment(const AllocationCurve& curve, Exponent t, Exponent z_m,
                                   double allowance, const PublicParams& params) {
  const double base = 1.0 + params.epsilon;
  if (t <= z_m) return power_of(base, t) * curve.ctr_at(t);

  const Exponent scan_from =
      z_m == kExponentNegInf ? std::min(curve.segments.front().hi, t) : z_m;
  Exponent first_jump = t + 1;
  for (Exponent z = scan_from + 1; z <= t; ++z) {
    if (curve.ctr_at(z) > curve.ctr_at(z - 1)) {
      first_jump = z;
      break;
    }
  }
  if (first_jump > t) {
    return z_m == kExponentNegInf ? 0.0 : power_of(base, z_m) * curve.ctr_at(z_m);
  }
  double payment = std::min(allowance, power_of(base, first_jump) * curve.ctr_at(first_jump - 1));
  for (Exponent z = first_jump; z <= t; ++z) {
    payment += power_of(base, z) * (curve.ctr_at(z) - curve.ctr_at(z - 1));
  }
  return payment;
}

}  // namespace auctionsim::testing
