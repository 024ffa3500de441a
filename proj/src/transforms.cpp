#include "freeprob/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace freeprob {

CauchyCoeffs moments_to_cauchy(const MomentSeq& m) {
    CauchyCoeffs g;
    g.g.reserve(m.m.size() + 1);
    g.g.emplace_back(1);
    g.g.insert(g.g.end(), m.m.begin(), m.m.end());
    return g;
}

RTransform cauchy_to_rtransform(const CauchyCoeffs& g) {
    if (g.g.empty() || !(g.g[0] == Rat(1))) {
        throw std::invalid_argument("cauchy_to_rtransform: g_0 must be 1 (probability mass)");
    }
    if (g.g.size() < 2) {
        throw std::invalid_argument("cauchy_to_rtransform: need at least one moment");
    }
    const int K = static_cast<int>(g.g.size()) - 1;

    // In the variable u = 1/z the expansion of G at infinity becomes the
    // honest power series Ghat(u) = sum_k g_k u^{k+1} = u + m_1 u^2 + ...
    // G(K(z)) = z with K(z) = r(z) + 1/z says Ghat o (1/K) = id, so 1/K is
    // the compositional inverse of Ghat:
    //   F = revert(Ghat),  r(z) = 1/F(z) - 1/z = (reciprocal(F/z) - 1) / z.
    std::vector<Rat> ghat(static_cast<size_t>(K) + 2);
    for (int k = 0; k <= K; ++k) {
        ghat[static_cast<size_t>(k) + 1] = g.g[static_cast<size_t>(k)];
    }
    const RationalSeries f = revert(RationalSeries(K + 1, std::move(ghat)));
    const RationalSeries f_over_z = shift_down(f, 1);
    const RationalSeries one = RationalSeries::constant(1, K);
    const RationalSeries r = shift_down(reciprocal(f_over_z) - one, 1);
    return RTransform(r);
}

RTransform rtransform_from_cumulants(const FreeCumulantSeq& R) {
    if (R.R.empty()) {
        throw std::invalid_argument("rtransform_from_cumulants: empty cumulant sequence");
    }
    return RTransform(RationalSeries::from_coeffs(R.R));
}

FreeCumulantSeq cumulants_from_rtransform(const RTransform& r, int max_order) {
    if (max_order < 1 || max_order > r.max_order()) {
        throw std::invalid_argument("cumulants_from_rtransform: order out of range");
    }
    std::vector<Rat> R(r.series.coeffs().begin(),
                       r.series.coeffs().begin() + max_order);
    return FreeCumulantSeq(std::move(R));
}

MomentSeq free_add_convolve(const MomentSeq& mx, const MomentSeq& my) {
    const int N = std::min(mx.max_order(), my.max_order());
    if (N < 1) {
        throw std::invalid_argument("free_add_convolve: need at least one moment per operand");
    }
    const FreeCumulantSeq rx = moments_to_cumulants(MomentSeq(
        std::vector<Rat>(mx.m.begin(), mx.m.begin() + N)));
    const FreeCumulantSeq ry = moments_to_cumulants(MomentSeq(
        std::vector<Rat>(my.m.begin(), my.m.begin() + N)));
    std::vector<Rat> sum(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        sum[static_cast<size_t>(k)] = rx.R[static_cast<size_t>(k)] + ry.R[static_cast<size_t>(k)];
    }
    return cumulants_to_moments(FreeCumulantSeq(std::move(sum)), N);
}

MomentSeq free_mult_convolve(const MomentSeq& mx, const MomentSeq& my, int N) {
    if (N < 1 || N > kWordCap / 2) {
        throw std::invalid_argument("free_mult_convolve: N must satisfy 1 <= N <= " +
                                    std::to_string(kWordCap / 2));
    }
    if (mx.max_order() < N || my.max_order() < N) {
        throw std::invalid_argument("free_mult_convolve: need N moments per operand");
    }
    Word w;
    w.rx = moments_to_cumulants(MomentSeq(std::vector<Rat>(mx.m.begin(), mx.m.begin() + N)));
    w.ry = moments_to_cumulants(MomentSeq(std::vector<Rat>(my.m.begin(), my.m.begin() + N)));
    std::vector<Rat> out(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) {
        w.letters.assign(static_cast<size_t>(2 * n), Letter::X);
        for (int i = 0; i < n; ++i) {
            w.letters[static_cast<size_t>(2 * i + 1)] = Letter::Y;
        }
        out[static_cast<size_t>(n - 1)] = word_moment(w);
    }
    return MomentSeq(std::move(out));
}

}  // namespace freeprob
