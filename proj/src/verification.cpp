#include "auctionsim/verification.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace auctionsim {

DeviationGrid DeviationGrid::build(const AuctionInstance& instance, std::size_t bidder,
                                   double epsilon, double relative_delta,
                                   std::size_t fill_points) {
  std::set<double> candidates;
  const auto add = [&](double bid) {
    if (bid > 0.0 && std::isfinite(bid)) candidates.insert(bid);
  };

  add(instance.bidders[bidder].value);
  double max_positive = instance.bidders[bidder].value;
  double min_positive = instance.bidders[bidder].value;
  for (double report : instance.reports) {
    add(report);
    if (report > 0.0) {
      max_positive = std::max(max_positive, report);
      min_positive = std::min(min_positive, report);
    }
  }

  // Rounding breakpoints across the active exponent range, nudged both ways.
  const double base = 1.0 + epsilon;
  const Exponent lo = floor_exponent(min_positive, base) - 1;
  const Exponent hi = floor_exponent(max_positive, base) + 2;
  for (Exponent z = lo; z <= hi; ++z) {
    const double breakpoint = power_of(base, z);
    add(breakpoint);
    add(breakpoint * (1.0 - relative_delta));
    add(breakpoint * (1.0 + relative_delta));
  }

  const double span = max_positive * (1.0 + epsilon);
  for (std::size_t p = 1; p <= fill_points; ++p) {
    add(span * static_cast<double>(p) / static_cast<double>(fill_points));
  }

  DeviationGrid grid;
  grid.candidates.assign(candidates.begin(), candidates.end());
  return grid;
}

DeviationReport deviation_search(const Mechanism& mechanism, const AuctionInstance& instance,
                                 std::size_t bidder, const DeviationGrid& grid) {
  DeviationReport report;
  report.bidder = bidder;

  AuctionInstance probe = instance;
  probe.reports[bidder] = instance.bidders[bidder].value;
  report.truthful_utility = realized_utility(probe, mechanism(probe), bidder);

  report.best_bid = probe.reports[bidder];
  report.best_utility = report.truthful_utility;
  for (double candidate : grid.candidates) {
    probe.reports[bidder] = candidate;
    double utility;
    try {
      utility = realized_utility(probe, mechanism(probe), bidder);
    } catch (const std::exception& failure) {
      std::ostringstream message;
      message << "mechanism failed at candidate bid " << candidate << ": " << failure.what();
      throw std::runtime_error(message.str());
    }
    if (utility > report.best_utility) {
      report.best_utility = utility;
      report.best_bid = candidate;
    }
  }

  if (report.best_utility == kNegativeInfinity &&
      report.truthful_utility == kNegativeInfinity) {
    report.gain = 0.0;
  } else {
    report.gain = report.best_utility - report.truthful_utility;
  }
  report.certified = report.gain <= kTol && approx_geq(report.truthful_utility, 0.0);
  return report;
}

Outcome run_plain_second_price(const BidProfile& reports, double alpha1) {
  if (reports.empty()) throw std::invalid_argument("second-price auction needs a bidder");
  const std::size_t n = reports.size();
  std::size_t winner = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (reports[i] > reports[winner]) winner = i;
  }
  double second = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != winner) second = std::max(second, reports[i]);
  }
  Outcome outcome = Outcome::empty(n);
  outcome.assignment[winner] = 0;
  outcome.payments[winner] = second * alpha1;
  return outcome;
}

namespace {

struct SweepPoint {
  double bid = 0.0;
  double ctr = 0.0;
  double payment = 0.0;
};

std::vector<SweepPoint> evaluate_sweep(const Mechanism& mechanism,
                                       const AuctionInstance& instance, std::size_t bidder,
                                       const std::vector<double>& sweep) {
  std::vector<SweepPoint> points;
  points.reserve(sweep.size());
  AuctionInstance probe = instance;
  for (double bid : sweep) {
    probe.reports[bidder] = bid;
    const Outcome outcome = mechanism(probe);
    SweepPoint point;
    point.bid = bid;
    point.ctr = outcome.assignment[bidder].has_value() ? probe.ctrs[*outcome.assignment[bidder]]
                                                       : 0.0;
    point.payment = outcome.payments[bidder];
    points.push_back(point);
  }
  return points;
}

}  // namespace

SweepVerdict check_allocation_monotonicity(const Mechanism& mechanism,
                                           const AuctionInstance& instance, std::size_t bidder,
                                           const std::vector<double>& sweep) {
  std::vector<double> ordered = sweep;
  std::sort(ordered.begin(), ordered.end());
  const std::vector<SweepPoint> points = evaluate_sweep(mechanism, instance, bidder, ordered);

  SweepVerdict verdict;
  for (std::size_t s = 1; s < points.size(); ++s) {
    if (points[s].ctr < points[s - 1].ctr - kTol) {
      verdict.pass = false;
      verdict.witness_low = points[s - 1].bid;
      verdict.witness_high = points[s].bid;
      std::ostringstream detail;
      detail << "ctr dropped from " << points[s - 1].ctr << " to " << points[s].ctr
             << " as the bid rose from " << points[s - 1].bid << " to " << points[s].bid;
      verdict.detail = detail.str();
      return verdict;
    }
  }
  return verdict;
}

SweepVerdict check_unit_price_monotonicity(const Mechanism& mechanism,
                                           const AuctionInstance& instance, std::size_t bidder,
                                           const std::vector<double>& sweep) {
  std::vector<double> ordered = sweep;
  std::sort(ordered.begin(), ordered.end());
  const std::vector<SweepPoint> points = evaluate_sweep(mechanism, instance, bidder, ordered);
  const double allowance = instance.bidders[bidder].allowance;

  SweepVerdict verdict;
  if (allowance == kUnboundedAllowance || allowance <= 0.0) return verdict;  // never triggers
  for (std::size_t s = 0; s < points.size(); ++s) {
    const SweepPoint& low = points[s];
    if (!(low.ctr > 0.0)) continue;
    if (!(allowance / low.bid > low.ctr)) continue;
    for (std::size_t r = s + 1; r < points.size(); ++r) {
      const SweepPoint& high = points[r];
      if (!(high.ctr > allowance / low.bid)) continue;
      const double unit_price = high.payment / high.ctr;
      if (!(unit_price > low.bid)) {
        verdict.pass = false;
        verdict.witness_low = low.bid;
        verdict.witness_high = high.bid;
        std::ostringstream detail;
        detail << "unit price " << unit_price << " at bid " << high.bid
               << " does not exceed the lower value " << low.bid;
        verdict.detail = detail.str();
        return verdict;
      }
    }
  }
  return verdict;
}

double rank_matching_min_sum(const std::vector<double>& a, const std::vector<double>& b) {
  assert(std::is_sorted(a.begin(), a.end(), std::greater<>()));
  assert(std::is_sorted(b.begin(), b.end(), std::greater<>()));
  const std::size_t pairs = std::min(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t t = 0; t < pairs; ++t) sum += std::min(a[t], b[t]);
  return sum;
}

namespace {

double checked_total(const std::vector<double>& numbers, double dominance_divisor,
                     bool require_dominance, const char* precondition_name) {
  if (numbers.empty()) throw std::invalid_argument("empty number list");
  double total = 0.0;
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (!(numbers[i] > 0.0)) throw std::invalid_argument("numbers must be positive");
    if (i > 0 && numbers[i] > numbers[i - 1]) {
      throw std::invalid_argument("numbers must be sorted descending");
    }
    total += numbers[i];
  }
  if (require_dominance && !(numbers.front() < total / dominance_divisor)) {
    std::ostringstream message;
    message << precondition_name << " violated: largest element " << numbers.front()
            << " is not below total/" << dominance_divisor << " = " << total / dominance_divisor;
    throw std::invalid_argument(message.str());
  }
  return total;
}

FrequencyStats finish_stats(std::size_t trials, std::size_t successes) {
  FrequencyStats stats;
  stats.trials = trials;
  stats.successes = successes;
  stats.frequency = trials > 0 ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
  stats.std_error =
      trials > 0 ? std::sqrt(stats.frequency * (1.0 - stats.frequency) /
                             static_cast<double>(trials))
                 : 0.0;
  return stats;
}

}  // namespace

FrequencyStats mc_concentration_sum(const std::vector<double>& numbers, std::size_t trials,
                                    RandomSource& rng, const ConcentrationOptions& options) {
  const double total =
      checked_total(numbers, 36.0, options.require_dominance, "sum dominance precondition");
  const double lower = total / 3.0;
  const double upper = 2.0 * total / 3.0;

  std::size_t successes = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    double selected = 0.0;
    for (double number : numbers) {
      if (rng.coin()) selected += number;
    }
    if (selected > lower && selected < upper) ++successes;
  }
  return finish_stats(trials, successes);
}

FrequencyStats mc_concentration_matching(const std::vector<double>& numbers, double rho,
                                         std::size_t trials, RandomSource& rng,
                                         const ConcentrationOptions& options) {
  if (!(rho > 1.0)) throw std::invalid_argument("rho must exceed 1");
  const double total =
      checked_total(numbers, rho, options.require_dominance, "matching dominance precondition");
  const double bound = total / 3.0 * (1.0 - 1.0 / rho);

  std::vector<double> side_a;
  std::vector<double> side_b;
  side_a.reserve(numbers.size());
  side_b.reserve(numbers.size());
  std::size_t successes = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    side_a.clear();
    side_b.clear();
    // filtering the globally sorted list keeps both sides sorted
    for (double number : numbers) (rng.coin() ? side_a : side_b).push_back(number);
    if (rank_matching_min_sum(side_a, side_b) > bound) ++successes;
  }
  return finish_stats(trials, successes);
}

RatioStats empirical_ratio(
    const std::function<Outcome(const AuctionInstance&, std::uint64_t seed)>& mechanism,
    const std::function<AuctionInstance(std::uint64_t trial)>& source, std::size_t trials,
    std::uint64_t root_seed, const std::function<double(const WelfareReport&)>& bound_for) {
  RatioStats stats;
  stats.min_ratio = std::numeric_limits<double>::infinity();
  double ratio_sum = 0.0;
  double ratio_sum_sq = 0.0;
  double bound_sum = 0.0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const AuctionInstance instance = source(trial);
    const WelfareReport opt = optimal_welfare(instance);
    if (!(opt.optimal_welfare > 0.0)) {
      ++stats.skipped;
      continue;
    }
    const Outcome outcome = mechanism(instance, split_seed(root_seed, trial));
    const double ratio = social_welfare(instance, outcome) / opt.optimal_welfare;
    ratio_sum += ratio;
    ratio_sum_sq += ratio * ratio;
    bound_sum += bound_for(opt);
    stats.min_ratio = std::min(stats.min_ratio, ratio);
    ++stats.trials;
  }
  if (stats.trials == 0) {
    stats.min_ratio = 0.0;
    return stats;
  }
  const double count = static_cast<double>(stats.trials);
  stats.mean_ratio = ratio_sum / count;
  const double variance = std::max(0.0, ratio_sum_sq / count - stats.mean_ratio * stats.mean_ratio);
  stats.ratio_std_error = std::sqrt(variance / count);
  stats.bound = bound_sum / count;
  stats.pass = approx_geq(stats.mean_ratio, stats.bound);
  return stats;
}

AuctionInstance generate_large_market_instance(std::size_t n, std::size_t k, double rho_target,
                                               RandomSource& rng,
                                               const GeneratorOptions& options) {
  if (n < k || k == 0) throw std::invalid_argument("need n >= k >= 1");
  double best_rho = 0.0;
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    AuctionInstance instance;
    instance.bidders.reserve(n);
    instance.ctrs.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      instance.ctrs.push_back(rng.uniform(options.ctr_floor, 1.0));
    }
    std::sort(instance.ctrs.begin(), instance.ctrs.end(), std::greater<>());
    const double top_ctr = instance.ctrs.front();
    for (std::size_t i = 0; i < n; ++i) {
      Bidder bidder;
      bidder.value = rng.uniform(1.0, 2.0);
      const std::uint64_t kind = rng.index(3);
      if (kind == 0) {
        bidder.allowance = 0.0;
      } else if (kind == 1) {
        bidder.allowance = rng.uniform(0.0, 2.0 * bidder.value * top_ctr);
      } else {
        bidder.allowance = kUnboundedAllowance;
      }
      instance.bidders.push_back(bidder);
    }
    instance.reports.reserve(n);
    for (const Bidder& bidder : instance.bidders) instance.reports.push_back(bidder.value);

    const WelfareReport report = optimal_welfare(instance);
    best_rho = std::max(best_rho, report.rho_observed);
    if (report.rho_observed >= rho_target) return instance;
  }
  std::ostringstream message;
  message << "large-market generator exhausted " << options.max_attempts
          << " attempts targeting rho >= " << rho_target << " with n = " << n << ", k = " << k
          << "; best observed rho = " << best_rho
          << " (the observed rho is capped by sum(ctrs)/ctr_1 <= k)";
  throw std::runtime_error(message.str());
}

ChargingCheck check_charging_bound(const AuctionInstance& instance,
                                   const LargeMarketTrace& trace) {
  ChargingCheck check;
  check.welfare = social_welfare(instance, trace.outcome);

  std::vector<double> target_bids;
  for (std::size_t i : trace.partition.target_set()) {
    target_bids.push_back(instance.reports[i]);
  }
  std::sort(target_bids.begin(), target_bids.end(), std::greater<>());

  const std::size_t k = instance.num_slots();
  for (std::size_t j = 0; j < k; ++j) {
    if (j >= target_bids.size()) break;
    const double reference = trace.slot_reference_prices[j];
    if (approx_geq(target_bids[j], reference)) {
      check.charged_mass += reference * instance.ctrs[j];
    }
  }
  check.holds = approx_leq(check.charged_mass, 4.0 * check.welfare);
  return check;
}

}  // namespace auctionsim
