#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>

#include "torus/errors.hpp"

namespace torus {

// Exact rational number backed by GMP, always in lowest terms with a
// positive denominator. Every quantity in this library is carried by this
// type; there is no floating-point fallback.
//
// A global digit guard (default 10^6 decimal digits across numerator and
// denominator) aborts runaway growth with a diagnostic instead of letting a
// computation degrade into pathological allocation.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                     // NOLINT: implicit by design
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(mpq_class q);                 // canonicalizes

    // Parses "num/den" or a bare integer, e.g. "-1/6", "7/6", "3".
    // Decimal notation is rejected.
    static Rational parse(const std::string& text);

    // Always "num/den", lowest terms, denominator positive, e.g. "0/1".
    std::string str() const;

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& mpq() const noexcept { return q_; }

    int sign() const noexcept { return mpq_sgn(q_.get_mpq_t()); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    mpz_class floor() const;
    // Fractional part x - floor(x), always in [0, 1).
    Rational mod1() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const noexcept {
        return mpq_equal(q_.get_mpq_t(), o.q_.get_mpq_t()) != 0;
    }
    std::strong_ordering operator<=>(const Rational& o) const noexcept {
        int c = mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Digit guard configuration (total decimal digits per value).
    static void set_digit_guard(std::size_t digits);
    static std::size_t digit_guard();

private:
    void check_guard() const;

    mpq_class q_;
};

Rational abs(const Rational& r);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

}  // namespace torus
