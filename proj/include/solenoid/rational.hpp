#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace solenoid {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact fraction a/b kept in lowest terms with b >= 1. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        value_ = BigRational(num, den);
    }

    /// Accepts "a/b" or a plain integer "a".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
            return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("malformed rational: " + s);
        }
    }

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    int64_t num_i64() const { return to_i64(num()); }
    int64_t den_i64() const { return to_i64(den()); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return den() == 1; }
    double to_double() const { return value_.convert_to<double>(); }

    /// Canonical "a/b" form, denominator always printed.
    std::string str() const { return num().str() + "/" + den().str(); }

    Rational operator-() const { return Rational(BigRational(-value_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(BigRational(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(BigRational(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(BigRational(a.value_ * b.value_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

private:
    explicit Rational(BigRational v) : value_(std::move(v)) {}

    static int64_t to_i64(const BigInt& v) {
        if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
            throw std::overflow_error("rational component exceeds 64-bit range");
        return v.convert_to<int64_t>();
    }

    BigRational value_{0};
};

}  // namespace solenoid
