#pragma once

#include <compare>
#include <string>
#include <utility>

#include <mpfr.h>

#include "zetaforms/rational.hpp"

namespace zetaforms {

// Requested output precision plus the extra working bits every high-precision
// routine carries internally. A result requested at prec_bits is computed at
// working_bits() and rounded back to prec_bits before it is returned.
struct PrecisionContext {
    static constexpr int default_prec = 256;
    static constexpr int default_guard = 64;

    int prec_bits = default_prec;
    int guard_bits = default_guard;

    int working_bits() const noexcept { return prec_bits + guard_bits; }
    PrecisionContext doubled() const noexcept { return {2 * prec_bits, guard_bits}; }
    PrecisionContext with_prec(int bits) const noexcept { return {bits, guard_bits}; }
    // Throws PreconditionError unless prec_bits >= 64 and guard_bits >= 32.
    void validate() const;
};

// Arbitrary-precision binary floating-point real (MPFR, round-to-nearest).
// Binary operations produce a result at the larger operand precision.
class Real {
public:
    explicit Real(long prec = 64);
    Real(double v, long prec);
    static Real from_int(long v, long prec);
    static Real from_bigint(const BigInt& v, long prec);
    static Real from_rational(const Rational& v, long prec);
    static Real from_string(const std::string& decimal, long prec);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    long precision() const noexcept { return mpfr_get_prec(v_); }
    Real rounded(long prec) const;
    Real with_precision(long prec) const { return rounded(prec); }

    mpfr_ptr raw() noexcept { return v_; }
    mpfr_srcptr raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // log2|x| without overflow; -inf for zero.
    double log2_abs() const;
    // Natural log |x| as a double, valid for magnitudes far outside double range.
    double log_abs() const;
    // Scientific notation with `digits` significant digits (0 = all digits
    // justified by the precision).
    std::string to_string(int digits = 0) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);
    friend Real operator+(const Real& a, long b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real ldexp(const Real& x, long e);
Real const_pi(long prec);
Real const_euler(long prec);
Real const_log2(long prec);

// -log2(|a-b|/|b|); +inf when equal. Relative agreement in bits.
double agreement_bits(const Real& a, const Real& b);

// Complex number over two MPFR reals of equal precision. Multivalued
// functions use the principal branch (argument in (-pi, pi]).
class Complex {
public:
    explicit Complex(long prec = 64) : re_(prec), im_(prec) {}
    Complex(Real re, Real im);
    explicit Complex(Real re);
    static Complex from_doubles(double re, double im, long prec);
    static Complex from_rational(const Rational& re, long prec);

    const Real& re() const noexcept { return re_; }
    const Real& im() const noexcept { return im_; }
    long precision() const noexcept { return re_.precision(); }
    Complex rounded(long prec) const { return {re_.rounded(prec), im_.rounded(prec)}; }

    Complex conj() const { return {re_, -im_}; }
    // Multiply by i.
    Complex times_i() const { return {-im_, re_}; }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return {-re_, -im_}; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re_ * b, a.im_ * b}; }
    friend Complex operator*(const Complex& a, long b) { return {a.re_ * b, a.im_ * b}; }
    friend Complex operator+(const Complex& a, const Real& b) { return {a.re_ + b, a.im_}; }
    friend Complex operator+(const Complex& a, long b) { return {a.re_ + b, a.im_}; }
    friend Complex operator-(const Complex& a, long b) { return {a.re_ + (-b), a.im_}; }

    std::string to_string(int digits = 0) const;

private:
    Real re_;
    Real im_;
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
// z^w = exp(w log z), principal branch.
Complex pow(const Complex& z, const Real& w);
Complex cos(const Complex& z);
double agreement_bits(const Complex& a, const Complex& b);

} // namespace zetaforms
