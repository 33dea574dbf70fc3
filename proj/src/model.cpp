#include "auctionsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace auctionsim {

double allowance_utility(double value, double allowance, double ctr, double payment) {
  const double obtained = value * ctr;
  if (!approx_leq(payment, obtained)) return kNegativeInfinity;
  const double overdraft = std::max(0.0, payment - allowance);
  return obtained - overdraft;
}

double social_welfare(const AuctionInstance& instance, const Outcome& outcome) {
  const std::size_t n = instance.num_bidders();
  const std::size_t k = instance.num_slots();
  if (outcome.assignment.size() != n || outcome.payments.size() != n) {
    throw std::invalid_argument("outcome dimensions do not match instance");
  }
  // Accumulate in slot order: equal-welfare assignments then produce
  // bit-identical sums, which the exact oracle-agreement checks rely on.
  std::vector<double> contribution(k, 0.0);
  std::vector<bool> taken(k, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!outcome.assignment[i].has_value()) continue;
    const std::size_t slot = *outcome.assignment[i];
    if (slot >= k) throw std::invalid_argument("assignment references a slot out of range");
    if (taken[slot]) throw std::invalid_argument("slot assigned to more than one bidder");
    taken[slot] = true;
    contribution[slot] = instance.bidders[i].value * instance.ctrs[slot];
  }
  double welfare = 0.0;
  for (double c : contribution) welfare += c;
  return welfare;
}

WelfareReport optimal_welfare(const AuctionInstance& instance) {
  const std::size_t n = instance.num_bidders();
  const std::size_t k = instance.num_slots();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.bidders[a].value > instance.bidders[b].value;
  });

  Outcome best = Outcome::empty(n);
  for (std::size_t slot = 0; slot < k && slot < n; ++slot) {
    best.assignment[order[slot]] = slot;
  }

  WelfareReport report;
  report.optimal_assignment = best.assignment;
  report.optimal_welfare = social_welfare(instance, best);
  double max_contribution = 0.0;
  const double top_ctr = k > 0 ? instance.ctrs.front() : 0.0;
  for (const Bidder& bidder : instance.bidders) {
    max_contribution = std::max(max_contribution, bidder.value * top_ctr);
  }
  report.max_single_contribution = max_contribution;
  report.rho_observed = max_contribution > 0.0 ? report.optimal_welfare / max_contribution : 0.0;
  return report;
}

WelfareReport assess_outcome(const AuctionInstance& instance, const Outcome& outcome) {
  WelfareReport report = optimal_welfare(instance);
  report.achieved_welfare = social_welfare(instance, outcome);
  return report;
}

RoundedBid round_bid(double bid, double epsilon) {
  if (bid < 0.0) throw std::invalid_argument("bid must be nonnegative");
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  if (bid == 0.0) return RoundedBid{};
  const double base = 1.0 + epsilon;
  const Exponent t = floor_exponent(bid, base);
  return RoundedBid{t, power_of(base, t)};
}

std::vector<std::string> validate_instance(const AuctionInstance& instance) {
  std::vector<std::string> violations;
  const std::size_t n = instance.num_bidders();
  const std::size_t k = instance.num_slots();
  if (n == 0) violations.push_back("no bidders");
  if (n < k) violations.push_back("n < k");
  if (instance.reports.size() != n) violations.push_back("reports length != bidder count");
  for (std::size_t i = 0; i < n; ++i) {
    const Bidder& bidder = instance.bidders[i];
    if (!(bidder.value > 0.0) || !std::isfinite(bidder.value)) {
      violations.push_back("bidder " + std::to_string(i + 1) + ": value not positive");
    }
    if (std::isnan(bidder.allowance) || bidder.allowance < 0.0) {
      violations.push_back("bidder " + std::to_string(i + 1) + ": allowance negative");
    }
  }
  for (std::size_t i = 0; i < instance.reports.size(); ++i) {
    if (!(instance.reports[i] >= 0.0) || !std::isfinite(instance.reports[i])) {
      violations.push_back("bid " + std::to_string(i + 1) + ": not a nonnegative real");
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    const double ctr = instance.ctrs[j];
    if (!(ctr >= 0.0) || !(ctr <= 1.0) || std::isnan(ctr)) {
      violations.push_back("ctr " + std::to_string(j + 1) + ": outside [0,1]");
    }
    if (j > 0 && instance.ctrs[j] > instance.ctrs[j - 1]) {
      violations.push_back("ctrs not non-increasing");
      break;
    }
  }
  return violations;
}

void require_valid(const AuctionInstance& instance) {
  const std::vector<std::string> violations = validate_instance(instance);
  if (violations.empty()) return;
  std::ostringstream message;
  message << "invalid instance:";
  for (const std::string& violation : violations) message << " [" << violation << "]";
  throw std::invalid_argument(message.str());
}

double realized_utility(const AuctionInstance& instance, const Outcome& outcome,
                        std::size_t bidder) {
  const double ctr =
      outcome.assignment[bidder].has_value() ? instance.ctrs[*outcome.assignment[bidder]] : 0.0;
  return allowance_utility(instance.bidders[bidder].value, instance.bidders[bidder].allowance,
                           ctr, outcome.payments[bidder]);
}

std::vector<std::size_t> rank_by_rounded_bid(const std::vector<RoundedBid>& rounded) {
  std::vector<std::size_t> ranked;
  ranked.reserve(rounded.size());
  for (std::size_t i = 0; i < rounded.size(); ++i) {
    if (!rounded[i].is_zero()) ranked.push_back(i);
  }
  std::sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    if (rounded[a].exponent != rounded[b].exponent) {
      return rounded[a].exponent > rounded[b].exponent;
    }
    return a < b;
  });
  return ranked;
}

}  // namespace auctionsim
