#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hilbpairs {

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero stored as 0/1. All arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, integers embed
    Rational(int n) : v_(n) {}  // NOLINT
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Accepts "p/q", plain integers, and exact decimal strings like "-2.25".
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// Integer value; throws unless the rational is an integer fitting in long.
    long as_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("Rational: not a machine integer: " + str());
        return v_.get_num().get_si();
    }

    std::string str() const {
        return is_integer() ? v_.get_num().get_str() : v_.get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    for (char c : s)
        if (c == 'e' || c == 'E')
            throw std::invalid_argument("Rational::parse: exponent notation not accepted: " + s);
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw std::invalid_argument("Rational::parse: mixed decimal and fraction: " + s);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0) throw std::invalid_argument("Rational::parse: trailing dot: " + s);
        mpz_class num, den(1);
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            throw std::invalid_argument("Rational::parse: bad decimal: " + s);
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(mpq_class(num, den));
    }
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("Rational::parse: bad rational: " + s);
    if (sgn(mpq_class(v.get_den())) == 0)
        throw std::invalid_argument("Rational::parse: zero denominator: " + s);
    v.canonicalize();
    return Rational(std::move(v));
}

/// Generalized binomial coefficient C(n, k) for integer n (possibly negative).
inline Rational binomial(std::int64_t n, int k) {
    if (k < 0) return 0;
    Rational acc = 1;
    for (int i = 0; i < k; ++i) acc *= Rational(n - i, i + 1);
    return acc;
}

} // namespace hilbpairs
