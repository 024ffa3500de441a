#pragma once

#include "freeprob/cumulants.hpp"
#include "freeprob/series.hpp"

namespace freeprob {

/// Cauchy transform of a probability law through its expansion at infinity:
/// G(z) = sum_k g_k z^{-(k+1)}, so g_0 is the total mass (always 1) and
/// g_k is the k-th moment.
struct CauchyCoeffs {
    std::vector<Rat> g;

    bool operator==(const CauchyCoeffs&) const = default;
};

/// R-transform r(z) = sum_n R_{n+1} z^n as a truncated series.
struct RTransform {
    RationalSeries series;

    explicit RTransform(RationalSeries s) : series(std::move(s)) {}

    /// R_k = coefficient of z^{k-1}.
    const Rat& cumulant(int k) const { return series[k - 1]; }
    int max_order() const { return series.order() + 1; }

    bool operator==(const RTransform&) const = default;
};

CauchyCoeffs moments_to_cauchy(const MomentSeq& m);

/// Solves G(r(z) + 1/z) = z by formal reversion of the expansion of G at
/// infinity. Requires g_0 = 1 and at least one moment. Yields R_1..R_K for
/// g_0..g_K. Independent of the moment-cumulant recursion.
RTransform cauchy_to_rtransform(const CauchyCoeffs& g);

/// Direct packaging of cumulants as an R-transform (and back).
RTransform rtransform_from_cumulants(const FreeCumulantSeq& R);
FreeCumulantSeq cumulants_from_rtransform(const RTransform& r, int max_order);

/// Moments of the free additive convolution: cumulants add termwise.
MomentSeq free_add_convolve(const MomentSeq& mx, const MomentSeq& my);

/// Moments of the free multiplicative convolution, computed from the mixed
/// word (XY)^n under freeness. N <= kWordCap / 2.
MomentSeq free_mult_convolve(const MomentSeq& mx, const MomentSeq& my, int N);

}  // namespace freeprob
