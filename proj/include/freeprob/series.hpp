#pragma once

#include "freeprob/rational.hpp"

#include <optional>
#include <vector>

namespace freeprob {

/// Truncated formal power series with exact rational coefficients.
/// A series of order N stores the coefficients of z^0 ... z^N; every
/// operation truncates its result to the smaller operand order, so a
/// coefficient that is present is always exact.
///
/// Values are immutable after construction and all operations are pure.
class RationalSeries {
public:
    /// Zero series of the given order.
    explicit RationalSeries(int order);

    /// Takes ownership of exactly order+1 coefficients.
    RationalSeries(int order, std::vector<Rat> coeffs);

    /// Order inferred from the coefficient list (must be nonempty).
    static RationalSeries from_coeffs(std::vector<Rat> coeffs);

    static RationalSeries constant(const Rat& value, int order);

    /// The series z (order must be >= 1).
    static RationalSeries identity(int order);

    int order() const { return order_; }

    const Rat& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    const Rat& operator[](int k) const { return coeff(k); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const RationalSeries&) const = default;

private:
    int order_;
    std::vector<Rat> c_;
};

/// a*f + b*g, truncated to min(order(f), order(g)).
RationalSeries linear_combine(const Rat& a, const RationalSeries& f,
                              const Rat& b, const RationalSeries& g);

/// Cauchy product, truncated to min(order(f), order(g)).
RationalSeries mul(const RationalSeries& f, const RationalSeries& g);

/// f(g(z)); requires g(0) = 0.
RationalSeries compose(const RationalSeries& f, const RationalSeries& g);

/// g with f*g = 1 up to the truncation order; requires f(0) != 0.
RationalSeries reciprocal(const RationalSeries& f);

/// Compositional inverse: g with f(g(z)) = g(f(z)) = z up to truncation;
/// requires f(0) = 0 and f'(0) != 0.
RationalSeries revert(const RationalSeries& f);

/// Drop coefficients above degree n (n <= order(f)).
RationalSeries truncate(const RationalSeries& f, int n);

/// Multiply by z^k; order grows by k.
RationalSeries shift_up(const RationalSeries& f, int k);

/// Divide by z^k; the first k coefficients must be zero.
RationalSeries shift_down(const RationalSeries& f, int k);

/// Coefficientwise equality for all degrees <= n (both orders must reach n).
bool equal_up_to(const RationalSeries& f, const RationalSeries& g, int n);

/// Smallest degree <= n where f and g differ, if any.
std::optional<int> first_difference(const RationalSeries& f, const RationalSeries& g, int n);

inline RationalSeries operator+(const RationalSeries& f, const RationalSeries& g) {
    return linear_combine(1, f, 1, g);
}
inline RationalSeries operator-(const RationalSeries& f, const RationalSeries& g) {
    return linear_combine(1, f, -1, g);
}
inline RationalSeries operator*(const RationalSeries& f, const RationalSeries& g) {
    return mul(f, g);
}
inline RationalSeries operator*(const Rat& a, const RationalSeries& f) {
    return linear_combine(a, f, 0, f);
}

}  // namespace freeprob
