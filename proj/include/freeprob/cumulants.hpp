#pragma once

#include "freeprob/rational.hpp"
#include "freeprob/series.hpp"

#include <optional>
#include <vector>

namespace freeprob {

/// Exhaustive partition sums stay below ~10^5 terms under these caps.
inline constexpr int kOracleCap = 10;
inline constexpr int kWordCap = 12;

/// Moments m_1..m_N of a distribution (m_k at index k-1). `inv` is the
/// moment of order -1 and is present only for elements declared invertible.
struct MomentSeq {
    std::vector<Rat> m;
    std::optional<Rat> inv;

    MomentSeq() = default;
    explicit MomentSeq(std::vector<Rat> moments) : m(std::move(moments)) {}

    int max_order() const { return static_cast<int>(m.size()); }
    /// Moment of order k, with moment(0) = 1.
    const Rat& moment(int k) const;

    bool operator==(const MomentSeq&) const = default;
};

/// Free cumulants R_1..R_N (R_k at index k-1).
struct FreeCumulantSeq {
    std::vector<Rat> R;

    FreeCumulantSeq() = default;
    explicit FreeCumulantSeq(std::vector<Rat> r) : R(std::move(r)) {}

    int max_order() const { return static_cast<int>(R.size()); }
    const Rat& at_order(int k) const { return R.at(static_cast<size_t>(k) - 1); }

    bool operator==(const FreeCumulantSeq&) const = default;
};

/// Cumulants C_n of an inverse variable against the variable itself:
/// C_n carries one inverse letter and n-1 plain letters.
struct InvCumulantSeq {
    std::vector<Rat> C;

    InvCumulantSeq() = default;
    explicit InvCumulantSeq(std::vector<Rat> c) : C(std::move(c)) {}

    int max_order() const { return static_cast<int>(C.size()); }
    const Rat& at_order(int k) const { return C.at(static_cast<size_t>(k) - 1); }

    bool operator==(const InvCumulantSeq&) const = default;
};

enum class Letter { X, Y, Xinv };

/// A product word over two free elements X, Y plus optionally a leading
/// X^{-1}. Carries the cumulant data needed to evaluate its moment.
struct Word {
    std::vector<Letter> letters;
    FreeCumulantSeq rx;   // cumulants of X
    FreeCumulantSeq ry;   // cumulants of Y
    InvCumulantSeq cx;    // inverse-against-X cumulants, used by the Xinv letter
};

/// Exact moments m_1..m_N from free cumulants via the moment-cumulant
/// recursion m_n = sum_k R_k sum_{i1+...+ik=n-k} m_{i1}...m_{ik}.
MomentSeq cumulants_to_moments(const FreeCumulantSeq& R, int N);

/// Triangular inverse of the same recursion; exact roundtrip.
FreeCumulantSeq moments_to_cumulants(const MomentSeq& m);

/// Brute force: sum over all of NC(n) of the product of R_{|B|}.
/// Independent oracle for cumulants_to_moments; n <= kOracleCap.
Rat moments_via_nc_oracle(const FreeCumulantSeq& R, int n);

/// Moment of a mixed word under freeness: sum over NC(n) where a block
/// contributes R_{|B|} of its letter when monochromatic in {X, Y},
/// C_{|B|} when it joins the leading Xinv with X letters only, and 0 for
/// any other mix.
Rat word_moment(const Word& w);

/// C_1 given; C_2 = 1 - C_1 R_1; C_n = -sum_{i<n} C_i R_{n-i} for n >= 3.
/// (The n = 2 value carries the extra +1; the plain recursion starts at 3.)
/// Returns C_1..C_{L+1} for R of length L.
InvCumulantSeq inverse_cumulants_recursion(const FreeCumulantSeq& R, const Rat& C1);

/// Same sequence through the closed form (z + C1) / (1 + z r(z)), where r
/// is the R-transform series r(z) = sum R_{n+1} z^n. Termwise equal to the
/// recursion; returns C_1..C_{order(r)+2}.
InvCumulantSeq inverse_cumulants_series(const RationalSeries& r, const Rat& C1);

}  // namespace freeprob
