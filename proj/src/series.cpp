#include "freeprob/series.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace freeprob {

RationalSeries::RationalSeries(int order)
    : order_(order), c_(static_cast<size_t>(order) + 1) {
    if (order < 0) {
        throw std::invalid_argument("RationalSeries: order must be >= 0");
    }
}

RationalSeries::RationalSeries(int order, std::vector<Rat> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    if (order < 0) {
        throw std::invalid_argument("RationalSeries: order must be >= 0");
    }
    if (c_.size() != static_cast<size_t>(order) + 1) {
        throw std::invalid_argument("RationalSeries: coefficient count must equal order+1");
    }
}

RationalSeries RationalSeries::from_coeffs(std::vector<Rat> coeffs) {
    if (coeffs.empty()) {
        throw std::invalid_argument("RationalSeries: empty coefficient list");
    }
    const int order = static_cast<int>(coeffs.size()) - 1;
    return RationalSeries(order, std::move(coeffs));
}

RationalSeries RationalSeries::constant(const Rat& value, int order) {
    RationalSeries s(order);
    std::vector<Rat> c = s.c_;
    c[0] = value;
    return RationalSeries(order, std::move(c));
}

RationalSeries RationalSeries::identity(int order) {
    if (order < 1) {
        throw std::invalid_argument("RationalSeries::identity: order must be >= 1");
    }
    std::vector<Rat> c(static_cast<size_t>(order) + 1);
    c[1] = 1;
    return RationalSeries(order, std::move(c));
}

RationalSeries linear_combine(const Rat& a, const RationalSeries& f,
                              const Rat& b, const RationalSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        c[static_cast<size_t>(k)] = a * f[k] + b * g[k];
    }
    return RationalSeries(n, std::move(c));
}

RationalSeries mul(const RationalSeries& f, const RationalSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rat acc = 0;
        for (int i = 0; i <= k; ++i) {
            if (!f[i].is_zero() && !g[k - i].is_zero()) {
                acc += f[i] * g[k - i];
            }
        }
        c[static_cast<size_t>(k)] = acc;
    }
    return RationalSeries(n, std::move(c));
}

RationalSeries compose(const RationalSeries& f, const RationalSeries& g) {
    if (!g[0].is_zero()) {
        throw std::invalid_argument(
            "compose: inner series must have zero constant term");
    }
    const int n = std::min(f.order(), g.order());
    const RationalSeries gt = truncate(g, n);
    // f_k with k > n only feeds degrees > n (g has no constant term), so a
    // Horner evaluation over f_0..f_n is exact to order n.
    RationalSeries acc = RationalSeries::constant(f[n], n);
    for (int k = n - 1; k >= 0; --k) {
        acc = linear_combine(1, mul(acc, gt), 1, RationalSeries::constant(f[k], n));
    }
    return acc;
}

RationalSeries reciprocal(const RationalSeries& f) {
    if (f[0].is_zero()) {
        throw std::invalid_argument("reciprocal: constant term is zero");
    }
    const int n = f.order();
    const Rat inv0 = f[0].reciprocal();
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    c[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rat acc = 0;
        for (int i = 1; i <= k; ++i) {
            acc += f[i] * c[static_cast<size_t>(k - i)];
        }
        c[static_cast<size_t>(k)] = -inv0 * acc;
    }
    return RationalSeries(n, std::move(c));
}

RationalSeries revert(const RationalSeries& f) {
    if (!f[0].is_zero()) {
        throw std::invalid_argument("revert: constant term must be zero");
    }
    if (f.order() < 1 || f[1].is_zero()) {
        throw std::invalid_argument("revert: linear coefficient must be nonzero");
    }
    const int n = f.order();
    const Rat inv1 = f[1].reciprocal();

    // Triangular solve: with g_1..g_{k-1} fixed and g_k unknown,
    //   [z^k] f(g) = [z^k] f(g_partial) + f_1 * g_k,
    // so each defect against the target series z determines one coefficient.
    std::vector<Rat> gc(static_cast<size_t>(n) + 1);
    gc[1] = inv1;
    for (int k = 2; k <= n; ++k) {
        const RationalSeries partial(n, std::vector<Rat>(gc));
        const Rat defect = compose(f, partial)[k];
        gc[static_cast<size_t>(k)] = -inv1 * defect;
    }
    return RationalSeries(n, std::move(gc));
}

RationalSeries truncate(const RationalSeries& f, int n) {
    if (n < 0 || n > f.order()) {
        throw std::invalid_argument("truncate: degree out of range");
    }
    std::vector<Rat> c(f.coeffs().begin(), f.coeffs().begin() + n + 1);
    return RationalSeries(n, std::move(c));
}

RationalSeries shift_up(const RationalSeries& f, int k) {
    if (k < 0) {
        throw std::invalid_argument("shift_up: negative shift");
    }
    std::vector<Rat> c(static_cast<size_t>(f.order() + k) + 1);
    for (int i = 0; i <= f.order(); ++i) {
        c[static_cast<size_t>(i + k)] = f[i];
    }
    return RationalSeries(f.order() + k, std::move(c));
}

RationalSeries shift_down(const RationalSeries& f, int k) {
    if (k < 0 || k > f.order()) {
        throw std::invalid_argument("shift_down: shift out of range");
    }
    for (int i = 0; i < k; ++i) {
        if (!f[i].is_zero()) {
            throw std::invalid_argument("shift_down: low coefficients are not zero");
        }
    }
    std::vector<Rat> c(f.coeffs().begin() + k, f.coeffs().end());
    return RationalSeries(f.order() - k, std::move(c));
}

bool equal_up_to(const RationalSeries& f, const RationalSeries& g, int n) {
    return !first_difference(f, g, n).has_value();
}

std::optional<int> first_difference(const RationalSeries& f, const RationalSeries& g, int n) {
    if (n < 0 || n > f.order() || n > g.order()) {
        throw std::invalid_argument("first_difference: degree exceeds an operand order");
    }
    for (int k = 0; k <= n; ++k) {
        if (!(f[k] == g[k])) {
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace freeprob
