#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace novikov {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Invariants: always in lowest terms, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : value_(n) {}
    Rational(BigInt n) : value_(std::move(n)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) {
            throw std::domain_error("rational: zero denominator");
        }
        value_ = Impl(num);
        value_ /= Impl(den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational operator-() const { return Rational(Impl(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("rational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) {
            throw std::domain_error("rational: inverse of zero");
        }
        Rational one(1);
        return one /= *this;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) {
            s += "/" + denominator().str();
        }
        return s;
    }

    template <typename Stream>
    friend Stream& operator<<(Stream& out, const Rational& r) {
        return out << r.str();
    }

private:
    using Impl = boost::multiprecision::cpp_rational;
    explicit Rational(Impl v) : value_(std::move(v)) {}

    Impl value_;
};

inline BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

} // namespace novikov
