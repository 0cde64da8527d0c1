#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace vbf {

// Arbitrary-precision rational, always reduced, denominator > 0.
// Thin wrapper around GMP's mpq_class so every constructor canonicalizes
// and division by zero throws instead of aborting the process.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}  // NOLINT: implicit on purpose
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    // Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return q_.get_num() == 0; }
    int sign() const { return sgn(q_); }

    // Exact conversions for serialization; throw std::range_error if the
    // component does not fit.
    long num_long() const;
    long den_long() const;

    std::string str() const;  // "p/q", or "p" when the denominator is 1

    Rational operator-() const { return Rational(static_cast<mpq_class>(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

}  // namespace vbf
