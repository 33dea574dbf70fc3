#pragma once

#include "auctionsim/model.hpp"

namespace auctionsim {

struct PublicParams {
  double epsilon = 0.0;  // > 0
};

// One constant-CTR stretch of an allocation curve; bounds are inclusive
// integer exponents, with kExponentNegInf/kExponentPosInf at the ends.
struct CurveSegment {
  Exponent lo = kExponentNegInf;
  Exponent hi = kExponentPosInf;
  double ctr = 0.0;
};

// The CTR a bidder obtains as a function of her hypothetical rounding
// exponent, with all other rounded bids fixed. Segments partition the
// integer line in ascending order and the CTR is non-decreasing.
struct AllocationCurve {
  std::vector<CurveSegment> segments;
  std::size_t owner = 0;

  double ctr_at(Exponent z) const;
  double top_ctr() const { return segments.back().ctr; }
};

// Runs the deterministic public-allowance auction: rounded bids ranked
// descending (ties to the lower index), slot i to the i-th ranked bidder,
// hybrid first-price / threshold payment per winner. Bidders whose rounded
// bid is zero are never ranked; surplus slots stay unassigned.
Outcome run_public_auction(const AuctionInstance& instance, const PublicParams& params);

// The curve of `bidder` against the other bidders' rounded reports, using
// the same ranking and tie-breaking as run_public_auction.
AllocationCurve allocation_curve(const AuctionInstance& instance, std::size_t bidder,
                                 const PublicParams& params);

// Largest exponent whose first-price cost stays within the allowance:
// max z with (1+eps)^z * curve(z) <= allowance. Returns kExponentPosInf when
// the constraint never binds (flat-zero curve or unbounded allowance) and
// kExponentNegInf when no exponent is admissible.
Exponent threshold_exponent(const AllocationCurve& curve, double allowance,
                            const PublicParams& params);

// Payment of a winner with actual rounding exponent `t`. Below the threshold
// the bidder pays first price, (1+eps)^t * f(t). Above it the payment is flat
// at (1+eps)^{z_m} * f(z_m) until the curve next jumps; from the first jump g
// in (z_m, t] onward the pre-jump CTR is re-priced at min(allowance,
// (1+eps)^g * f(g-1)) and every jump z in [g, t] adds its increment at
// (1+eps)^z * (f(z) - f(z-1)). The min caps the charge at the allowance when
// the allowance runs out strictly between breakpoints; without it, the unused
// allowance slack would subsidize an upward misreport across the jump.
// Evaluated segment-wise so the cost is linear in the number of segments.
double public_payment(const AllocationCurve& curve, Exponent t, Exponent z_m,
                      double allowance, const PublicParams& params);

}  // namespace auctionsim
