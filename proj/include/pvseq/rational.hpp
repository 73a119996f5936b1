// Exact rational scalar used throughout the library.
//
// Thin wrapper over GMP's mpq_class that enforces the storage contract:
// denominator > 0 and gcd(|num|, den) = 1 at all times, so equality is
// structural and results are reproducible bit for bit.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace pvseq {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}

    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p" or "p/q" in base 10 (q > 0). Throws std::invalid_argument.
    static Rational from_string(const std::string& s);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sgn() const { return ::sgn(q_); }
    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(q_)); }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(1 / q_);
    }

    /// "p" when the value is an integer, "p/q" otherwise.
    std::string str() const { return q_.get_str(); }

    /// Lossy escape hatch for test oracles and candidate generation only.
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& r) { q_ += r.q_; return *this; }
    Rational& operator-=(const Rational& r) { q_ -= r.q_; return *this; }
    Rational& operator*=(const Rational& r) { q_ *= r.q_; return *this; }
    Rational& operator/=(const Rational& r) {
        if (r.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= r.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.q_ == b.q_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class q_;  // canonical: den > 0, lowest terms
};

inline int sgn(const Rational& r) { return r.sgn(); }

}  // namespace pvseq
