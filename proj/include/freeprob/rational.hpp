#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace freeprob {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1. All arithmetic in this library goes through
/// Rat so that every identity can be checked bit-exactly.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long long n) : q_(n) {}  // NOLINT: implicit on purpose, integers embed
    explicit Rat(const BigInt& n) : q_(n) {}

    Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) {
            throw std::domain_error("Rat: zero denominator");
        }
        q_ = BigRational(num);
        q_ /= BigRational(den);  // division canonicalizes sign and gcd
    }

    /// Parse "p/q" or a bare integer string. Rejects anything else
    /// (notably decimal floats: exactness is the whole point).
    static Rat parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rat(BigInt(std::string(text)));
            }
            BigInt num{std::string(text.substr(0, slash))};
            BigInt den{std::string(text.substr(slash + 1))};
            return Rat(num, den);
        } catch (const std::domain_error&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("Rat: cannot parse '" + std::string(text) +
                                        "' (expected \"p\" or \"p/q\")");
        }
    }

    BigInt numerator() const { return boost::multiprecision::numerator(q_); }
    BigInt denominator() const { return boost::multiprecision::denominator(q_); }

    bool is_zero() const { return q_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    bool is_positive() const { return q_ > 0; }
    bool is_negative() const { return q_ < 0; }

    /// "p/q", with "/q" omitted when q == 1.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) {
            s += "/" + denominator().str();
        }
        return s;
    }

    double to_double() const { return q_.convert_to<double>(); }

    Rat operator-() const {
        Rat r;
        r.q_ = -q_;
        return r;
    }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) {
            throw std::domain_error("Rat: division by zero");
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        if (a.q_ < b.q_) return std::strong_ordering::less;
        if (a.q_ > b.q_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rat reciprocal() const {
        if (is_zero()) {
            throw std::domain_error("Rat: reciprocal of zero");
        }
        return Rat(denominator(), numerator());
    }

private:
    BigRational q_;
};

inline Rat abs(const Rat& r) { return r.is_negative() ? -r : r; }

/// r^k for k >= 0 (r^0 = 1, including 0^0).
inline Rat pow(const Rat& r, int k) {
    if (k < 0) {
        throw std::domain_error("pow: negative exponent");
    }
    Rat acc = 1;
    for (int i = 0; i < k; ++i) {
        acc *= r;
    }
    return acc;
}

}  // namespace freeprob
