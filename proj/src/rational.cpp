#include "torus/rational.hpp"

#include <atomic>
#include <cctype>

namespace torus {

namespace {

std::atomic<std::size_t> g_digit_guard{1000000};

// A 64-bit limb holds at most 20 decimal digits, so limb counts give a
// cheap no-false-negative pre-filter before the exact digit count.
bool maybe_over_guard(const mpq_class& q, std::size_t limit) {
    std::size_t limbs = mpz_size(q.get_num_mpz_t()) + mpz_size(q.get_den_mpz_t());
    return limbs * 20 > limit;
}

std::size_t exact_digits(const mpq_class& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 10) + mpz_sizeinbase(q.get_den_mpz_t(), 10);
}

}  // namespace

Rational::Rational(long n, long d) {
    if (d == 0) throw ValidationError("zero_denominator", "rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw ValidationError("zero_denominator", "rational with zero denominator");
    q_ = mpq_class(n) / mpq_class(d);
    check_guard();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
    check_guard();
}

Rational Rational::parse(const std::string& text) {
    auto bad = [&](const char* why) {
        return ValidationError("bad_rational",
                               "cannot parse rational \"" + text + "\": " + why);
    };
    if (text.empty()) throw bad("empty string");

    std::size_t i = 0;
    auto scan_int = [&]() -> std::string {
        std::string out;
        if (i < text.size() && text[i] == '-') out.push_back(text[i++]);
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i++]);
            ++digits;
        }
        if (digits == 0) out.clear();
        return out;
    };

    std::string num = scan_int();
    if (num.empty()) throw bad("expected an integer numerator");
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') throw bad("expected '/' (decimal notation is not accepted)");
        ++i;
        den = scan_int();
        if (den.empty()) throw bad("expected an integer denominator");
        if (i != text.size()) throw bad("trailing characters");
    }

    mpz_class n(num), d(den);
    return Rational(n, d);
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class Rational::floor() const {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Rational Rational::mod1() const {
    mpq_class out;
    mpz_fdiv_r(out.get_num_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    mpz_set(out.get_den_mpz_t(), q_.get_den_mpz_t());
    // num mod den and den are already coprime when num/den is canonical
    Rational r;
    r.q_ = std::move(out);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    mpq_add(r.q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    r.check_guard();
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    mpq_sub(r.q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    r.check_guard();
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    mpq_mul(r.q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    r.check_guard();
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw ValidationError("zero_denominator", "division by zero");
    Rational r;
    mpq_div(r.q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    r.check_guard();
    return r;
}

void Rational::set_digit_guard(std::size_t digits) {
    g_digit_guard.store(digits, std::memory_order_relaxed);
}

std::size_t Rational::digit_guard() {
    return g_digit_guard.load(std::memory_order_relaxed);
}

void Rational::check_guard() const {
    std::size_t limit = g_digit_guard.load(std::memory_order_relaxed);
    if (!maybe_over_guard(q_, limit)) return;
    std::size_t digits = exact_digits(q_);
    if (digits > limit) {
        throw DigitGuardExceeded("rational grew to " + std::to_string(digits) +
                                 " digits, exceeding the guard of " + std::to_string(limit));
    }
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace torus
