#include "auctionsim/public_auction.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace auctionsim {

namespace {

std::vector<RoundedBid> round_reports(const AuctionInstance& instance, double epsilon) {
  std::vector<RoundedBid> rounded;
  rounded.reserve(instance.num_bidders());
  for (double bid : instance.reports) rounded.push_back(round_bid(bid, epsilon));
  return rounded;
}

}  // namespace

double AllocationCurve::ctr_at(Exponent z) const {
  for (const CurveSegment& segment : segments) {
    if (z <= segment.hi) return segment.ctr;
  }
  return segments.back().ctr;
}

AllocationCurve allocation_curve(const AuctionInstance& instance, std::size_t bidder,
                                 const PublicParams& params) {
  require_valid(instance);
  const std::size_t k = instance.num_slots();
  const std::vector<RoundedBid> rounded = round_reports(instance, params.epsilon);

  // Competitors with positive rounded bids; zero bids never outrank anyone.
  std::vector<std::pair<Exponent, std::size_t>> rivals;
  for (std::size_t h = 0; h < rounded.size(); ++h) {
    if (h != bidder && !rounded[h].is_zero()) rivals.emplace_back(rounded[h].exponent, h);
  }

  // The bidder at hypothetical exponent z is outranked by rival h iff h has a
  // strictly larger exponent, or an equal exponent and a smaller index.
  const auto ctr_for = [&](Exponent z) -> double {
    std::size_t outranked_by = 0;
    for (const auto& [exp, h] : rivals) {
      if (exp > z || (exp == z && h < bidder)) ++outranked_by;
    }
    return outranked_by < k ? instance.ctrs[outranked_by] : 0.0;
  };

  // Rank changes only at rival exponents, so segment boundaries lie in
  // {e, e+1 : e rival exponent}.
  std::vector<Exponent> cuts;
  for (const auto& [exp, h] : rivals) {
    cuts.push_back(exp);
    cuts.push_back(exp + 1);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  AllocationCurve curve;
  curve.owner = bidder;
  if (cuts.empty()) {
    curve.segments.push_back({kExponentNegInf, kExponentPosInf, ctr_for(0)});
    return curve;
  }
  curve.segments.push_back({kExponentNegInf, cuts.front() - 1, ctr_for(cuts.front() - 1)});
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    const Exponent lo = cuts[c];
    const Exponent hi = c + 1 < cuts.size() ? cuts[c + 1] - 1 : kExponentPosInf;
    curve.segments.push_back({lo, hi, ctr_for(lo)});
  }

  // Merge equal-CTR neighbours.
  std::vector<CurveSegment> merged;
  for (const CurveSegment& segment : curve.segments) {
    if (!merged.empty() && merged.back().ctr == segment.ctr) {
      merged.back().hi = segment.hi;
    } else {
      merged.push_back(segment);
    }
  }
  curve.segments = std::move(merged);

  for (std::size_t s = 1; s < curve.segments.size(); ++s) {
    assert(curve.segments[s].ctr >= curve.segments[s - 1].ctr);
  }
  return curve;
}

Exponent threshold_exponent(const AllocationCurve& curve, double allowance,
                            const PublicParams& params) {
  if (allowance == kUnboundedAllowance) return kExponentPosInf;
  if (curve.top_ctr() <= 0.0) return kExponentPosInf;

  const double base = 1.0 + params.epsilon;
  Exponent best = kExponentNegInf;
  bool found = false;
  for (const CurveSegment& segment : curve.segments) {
    if (segment.ctr <= 0.0) {
      // Zero cost: the whole segment is admissible.
      best = std::max(best, segment.hi);
      found = true;
      continue;
    }
    // allowance 0 against a positive CTR admits no exponent: the product is
    // strictly positive everywhere on this segment.
    if (allowance <= 0.0) continue;
    Exponent z = floor_exponent(allowance / segment.ctr, base);
    while (power_of(base, z) * segment.ctr > allowance + kTol) --z;
    while (power_of(base, z + 1) * segment.ctr <= allowance + kTol) ++z;
    if (z < segment.lo) continue;
    z = std::min(z, segment.hi);
    best = std::max(best, z);
    found = true;
  }
  return found ? best : kExponentNegInf;
}

double public_payment(const AllocationCurve& curve, Exponent t, Exponent z_m,
                      double allowance, const PublicParams& params) {
  const double base = 1.0 + params.epsilon;
  if (t <= z_m) return power_of(base, t) * curve.ctr_at(t);

  // Merged segments carry strictly increasing CTRs, so every segment start in
  // (z_m, t] is a jump of the curve.
  std::size_t first_jump = curve.segments.size();
  for (std::size_t s = 1; s < curve.segments.size(); ++s) {
    const Exponent jump = curve.segments[s].lo;
    if (jump > t) break;
    if (jump <= z_m) continue;
    first_jump = s;
    break;
  }
  if (first_jump == curve.segments.size()) {
    return z_m == kExponentNegInf ? 0.0 : power_of(base, z_m) * curve.ctr_at(z_m);
  }

  const Exponent g = curve.segments[first_jump].lo;
  const double pre_jump_ctr = curve.segments[first_jump - 1].ctr;
  double payment = std::min(allowance, power_of(base, g) * pre_jump_ctr);
  for (std::size_t s = first_jump; s < curve.segments.size(); ++s) {
    const Exponent jump = curve.segments[s].lo;
    if (jump > t) break;
    payment += power_of(base, jump) * (curve.segments[s].ctr - curve.segments[s - 1].ctr);
  }
  return payment;
}

Outcome run_public_auction(const AuctionInstance& instance, const PublicParams& params) {
  require_valid(instance);
  if (!(params.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  const std::size_t n = instance.num_bidders();
  const std::size_t k = instance.num_slots();
  const std::vector<RoundedBid> rounded = round_reports(instance, params.epsilon);
  const std::vector<std::size_t> ranked = rank_by_rounded_bid(rounded);

  Outcome outcome = Outcome::empty(n);
  const std::size_t winners = std::min(k, ranked.size());
  for (std::size_t slot = 0; slot < winners; ++slot) {
    const std::size_t i = ranked[slot];
    outcome.assignment[i] = slot;
    const double allowance = instance.bidders[i].allowance;
    const AllocationCurve curve = allocation_curve(instance, i, params);
    const Exponent z_m = threshold_exponent(curve, allowance, params);
    outcome.payments[i] = public_payment(curve, rounded[i].exponent, z_m, allowance, params);
  }
  return outcome;
}

}  // namespace auctionsim
