#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zetaforms {

using BigInt = mpz_class;

// Exact rational number in lowest terms with a positive denominator.
//
// Thin value wrapper over mpq_class that turns division by zero into an
// exception instead of a GMP abort, and fixes the "num/den" text form.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den = 1);
    explicit Rational(const mpq_class& q);

    // Accepts "a", "a/b", with optional sign on a.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return q_; }
    const BigInt& num() const noexcept { return q_.get_num(); }
    const BigInt& den() const noexcept { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    Rational abs() const;
    Rational pow(long exponent) const;
    BigInt floor() const;
    // x - floor(x), in [0, 1).
    Rational frac() const;
    double to_double() const { return q_.get_d(); }

    // Always "num/den" in decimal, including integers ("3/1").
    std::string to_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_;
};

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt pow(const BigInt& base, unsigned long exponent);
std::string to_string(const BigInt& v);
BigInt parse_bigint(std::string_view text);

} // namespace zetaforms
