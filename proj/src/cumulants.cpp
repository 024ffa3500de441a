#include "freeprob/cumulants.hpp"

#include "freeprob/partitions.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace freeprob {

namespace {

const Rat kOne = 1;

// w_k(t) = sum over compositions i1+...+ik = t (parts >= 0) of m_{i1}...m_{ik},
// i.e. the z^t coefficient of (1 + m_1 z + m_2 z^2 + ...)^k. Only moments of
// order <= t enter, so a partially built moment list is fine.
std::vector<Rat> composition_weights(const std::vector<Rat>& m_with_unit, int k, int t_max) {
    std::vector<Rat> prev(m_with_unit.begin(), m_with_unit.begin() + t_max + 1);
    for (int j = 2; j <= k; ++j) {
        std::vector<Rat> next(static_cast<size_t>(t_max) + 1);
        for (int t = 0; t <= t_max; ++t) {
            Rat acc = 0;
            for (int s = 0; s <= t; ++s) {
                acc += prev[static_cast<size_t>(s)] * m_with_unit[static_cast<size_t>(t - s)];
            }
            next[static_cast<size_t>(t)] = acc;
        }
        prev = std::move(next);
    }
    return prev;
}

}  // namespace

const Rat& MomentSeq::moment(int k) const {
    if (k == 0) {
        return kOne;
    }
    return m.at(static_cast<size_t>(k) - 1);
}

MomentSeq cumulants_to_moments(const FreeCumulantSeq& R, int N) {
    if (N < 1) {
        throw std::invalid_argument("cumulants_to_moments: N must be >= 1");
    }
    if (N > R.max_order()) {
        throw std::invalid_argument("cumulants_to_moments: N exceeds cumulant data length");
    }
    std::vector<Rat> mu(static_cast<size_t>(N) + 1);  // mu[0] = 1, mu[n] = m_n
    mu[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) {
            const Rat& rk = R.at_order(k);
            if (rk.is_zero()) {
                continue;
            }
            const auto w = composition_weights(mu, k, n - k);
            acc += rk * w[static_cast<size_t>(n - k)];
        }
        mu[static_cast<size_t>(n)] = acc;
    }
    return MomentSeq(std::vector<Rat>(mu.begin() + 1, mu.end()));
}

FreeCumulantSeq moments_to_cumulants(const MomentSeq& m) {
    const int N = m.max_order();
    if (N < 1) {
        throw std::invalid_argument("moments_to_cumulants: need at least one moment");
    }
    std::vector<Rat> mu(static_cast<size_t>(N) + 1);
    mu[0] = 1;
    for (int n = 1; n <= N; ++n) {
        mu[static_cast<size_t>(n)] = m.moment(n);
    }
    std::vector<Rat> R(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) {
        // m_n = R_n + sum_{k<n} R_k w_k(n-k); the k = n term has weight 1.
        Rat acc = mu[static_cast<size_t>(n)];
        for (int k = 1; k < n; ++k) {
            if (R[static_cast<size_t>(k - 1)].is_zero()) {
                continue;
            }
            const auto w = composition_weights(mu, k, n - k);
            acc -= R[static_cast<size_t>(k - 1)] * w[static_cast<size_t>(n - k)];
        }
        R[static_cast<size_t>(n - 1)] = acc;
    }
    return FreeCumulantSeq(std::move(R));
}

Rat moments_via_nc_oracle(const FreeCumulantSeq& R, int n) {
    if (n < 1 || n > kOracleCap) {
        throw std::invalid_argument("moments_via_nc_oracle: n must satisfy 1 <= n <= " +
                                    std::to_string(kOracleCap));
    }
    if (n > R.max_order()) {
        throw std::invalid_argument("moments_via_nc_oracle: cumulant data too short");
    }
    const NcRgsTable& table = nc_rgs_table(n);
    Rat total = 0;
    std::array<int, kWordCap> block_size{};
    for (std::size_t row = 0; row < table.count; ++row) {
        const auto rgs = table.row(row);
        int nblocks = 0;
        block_size.fill(0);
        for (int p = 0; p < n; ++p) {
            const int b = rgs[static_cast<size_t>(p)];
            nblocks = std::max(nblocks, b + 1);
            ++block_size[static_cast<size_t>(b)];
        }
        Rat prod = 1;
        for (int b = 0; b < nblocks; ++b) {
            prod *= R.at_order(block_size[static_cast<size_t>(b)]);
            if (prod.is_zero()) {
                break;
            }
        }
        total += prod;
    }
    return total;
}

Rat word_moment(const Word& w) {
    const int n = static_cast<int>(w.letters.size());
    if (n < 1 || n > kWordCap) {
        throw std::invalid_argument("word_moment: word length must satisfy 1 <= n <= " +
                                    std::to_string(kWordCap));
    }
    for (int p = 0; p < n; ++p) {
        if (w.letters[static_cast<size_t>(p)] == Letter::Xinv && p != 0) {
            throw std::invalid_argument("word_moment: Xinv is only supported in leading position");
        }
    }

    // Per-block letter content while scanning a partition's restricted-growth
    // string. Xinv may only merge with X letters; every other mix kills the
    // block (mixed free cumulants vanish).
    enum class BlockKind : std::uint8_t { AllX, AllY, InvX, Dead };

    const NcRgsTable& table = nc_rgs_table(n);
    Rat total = 0;
    std::array<BlockKind, kWordCap> kind{};
    std::array<int, kWordCap> size{};
    for (std::size_t row = 0; row < table.count; ++row) {
        const auto rgs = table.row(row);
        int nblocks = 0;
        bool dead = false;
        for (int p = 0; p < n && !dead; ++p) {
            const int b = rgs[static_cast<size_t>(p)];
            const Letter l = w.letters[static_cast<size_t>(p)];
            if (b == nblocks) {
                ++nblocks;
                size[static_cast<size_t>(b)] = 1;
                kind[static_cast<size_t>(b)] = l == Letter::X   ? BlockKind::AllX
                                               : l == Letter::Y ? BlockKind::AllY
                                                                : BlockKind::InvX;
                continue;
            }
            ++size[static_cast<size_t>(b)];
            BlockKind& bk = kind[static_cast<size_t>(b)];
            switch (bk) {
                case BlockKind::AllX:
                    if (l != Letter::X) bk = BlockKind::Dead;
                    break;
                case BlockKind::AllY:
                    if (l != Letter::Y) bk = BlockKind::Dead;
                    break;
                case BlockKind::InvX:
                    if (l != Letter::X) bk = BlockKind::Dead;
                    break;
                case BlockKind::Dead:
                    break;
            }
            if (bk == BlockKind::Dead) {
                dead = true;
            }
        }
        if (dead) {
            continue;
        }
        Rat prod = 1;
        for (int b = 0; b < nblocks && !prod.is_zero(); ++b) {
            const int sz = size[static_cast<size_t>(b)];
            switch (kind[static_cast<size_t>(b)]) {
                case BlockKind::AllX:
                    if (sz > w.rx.max_order()) {
                        throw std::invalid_argument("word_moment: X cumulant data too short");
                    }
                    prod *= w.rx.at_order(sz);
                    break;
                case BlockKind::AllY:
                    if (sz > w.ry.max_order()) {
                        throw std::invalid_argument("word_moment: Y cumulant data too short");
                    }
                    prod *= w.ry.at_order(sz);
                    break;
                case BlockKind::InvX:
                    if (sz > w.cx.max_order()) {
                        throw std::invalid_argument("word_moment: inverse cumulant data too short");
                    }
                    prod *= w.cx.at_order(sz);
                    break;
                case BlockKind::Dead:
                    break;
            }
        }
        total += prod;
    }
    return total;
}

InvCumulantSeq inverse_cumulants_recursion(const FreeCumulantSeq& R, const Rat& C1) {
    const int L = R.max_order();
    std::vector<Rat> C(static_cast<size_t>(L) + 1);
    C[0] = C1;
    for (int n = 2; n <= L + 1; ++n) {
        Rat acc = 0;
        for (int i = 1; i <= n - 1; ++i) {
            acc += C[static_cast<size_t>(i - 1)] * R.at_order(n - i);
        }
        C[static_cast<size_t>(n - 1)] = (n == 2) ? kOne - acc : -acc;
    }
    return InvCumulantSeq(std::move(C));
}

InvCumulantSeq inverse_cumulants_series(const RationalSeries& r, const Rat& C1) {
    const int K = r.order();
    // (z + C1) / (1 + z r(z)) at order K+1: z*r(z) is exact there, so the
    // result yields C_1..C_{K+2}, matching the recursion on R_1..R_{K+1}.
    const int work = K + 1;
    std::vector<Rat> num(static_cast<size_t>(work) + 1);
    num[0] = C1;
    num[1] = 1;
    const RationalSeries numerator(work, std::move(num));
    RationalSeries denom = RationalSeries::constant(1, work) + shift_up(truncate(r, K), 1);
    const RationalSeries c_series = mul(numerator, reciprocal(denom));
    std::vector<Rat> C(c_series.coeffs().begin(), c_series.coeffs().end());
    return InvCumulantSeq(std::move(C));
}

}  // namespace freeprob
