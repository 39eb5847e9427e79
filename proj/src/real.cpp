#include "zetaforms/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetaforms/errors.hpp"

namespace zetaforms {

void PrecisionContext::validate() const
{
    require(prec_bits >= 64, "precision must be at least 64 bits, got " + std::to_string(prec_bits));
    require(guard_bits >= 32, "guard bits must be at least 32, got " + std::to_string(guard_bits));
}

Real::Real(long prec)
{
    mpfr_init2(v_, std::max<long>(prec, MPFR_PREC_MIN));
    mpfr_set_zero(v_, 1);
}

Real::Real(double v, long prec) : Real(prec) { mpfr_set_d(v_, v, MPFR_RNDN); }

Real Real::from_int(long v, long prec)
{
    Real r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::from_bigint(const BigInt& v, long prec)
{
    Real r(prec);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::from_rational(const Rational& v, long prec)
{
    Real r(prec);
    mpfr_set_q(r.v_, v.value().get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& decimal, long prec)
{
    Real r(prec);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        throw PreconditionError("malformed decimal: '" + decimal + "'");
    }
    return r;
}

Real::Real(const Real& o)
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded(long prec) const
{
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

double Real::log2_abs() const
{
    if (is_zero()) {
        return -std::numeric_limits<double>::infinity();
    }
    long e = 0;
    const double d = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::fabs(d)) + static_cast<double>(e);
}

double Real::log_abs() const { return log2_abs() * std::log(2.0); }

std::string Real::to_string(int digits) const
{
    if (digits <= 0) {
        digits = static_cast<int>(std::floor(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
    }
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

namespace {

long max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

} // namespace

Real& Real::operator+=(const Real& o)
{
    if (o.precision() > precision()) {
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    }
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o)
{
    if (o.precision() > precision()) {
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    }
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o)
{
    if (o.precision() > precision()) {
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    }
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o)
{
    if (o.precision() > precision()) {
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    }
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const
{
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, long b)
{
    Real r(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b)
{
    Real r(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, long b)
{
    Real r(a.precision());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b)
{
    if (mpfr_unordered_p(a.v_, b.v_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define ZETAFORMS_UNARY(name, fn)                                                                  \
    Real name(const Real& x)                                                                       \
    {                                                                                              \
        Real r(x.precision());                                                                     \
        fn(r.raw(), x.raw(), MPFR_RNDN);                                                           \
        return r;                                                                                  \
    }

ZETAFORMS_UNARY(abs, mpfr_abs)
ZETAFORMS_UNARY(sqrt, mpfr_sqrt)
ZETAFORMS_UNARY(exp, mpfr_exp)
ZETAFORMS_UNARY(log, mpfr_log)
ZETAFORMS_UNARY(sin, mpfr_sin)
ZETAFORMS_UNARY(cos, mpfr_cos)
ZETAFORMS_UNARY(sinh, mpfr_sinh)
ZETAFORMS_UNARY(cosh, mpfr_cosh)

#undef ZETAFORMS_UNARY

Real atan2(const Real& y, const Real& x)
{
    Real r(max_prec(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y)
{
    Real r(max_prec(x, y));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long n)
{
    Real r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

Real ldexp(const Real& x, long e)
{
    Real r(x.precision());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

Real const_pi(long prec)
{
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real const_euler(long prec)
{
    Real r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

Real const_log2(long prec)
{
    Real r(prec);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

double agreement_bits(const Real& a, const Real& b)
{
    const Real diff = a - b;
    if (diff.is_zero()) {
        return std::numeric_limits<double>::infinity();
    }
    if (b.is_zero()) {
        return -diff.log2_abs();
    }
    return b.log2_abs() - diff.log2_abs();
}

// ---------------------------------------------------------------------------

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im))
{
    const long p = std::max(re_.precision(), im_.precision());
    if (re_.precision() != p) {
        re_ = re_.rounded(p);
    }
    if (im_.precision() != p) {
        im_ = im_.rounded(p);
    }
}

Complex::Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}

Complex Complex::from_doubles(double re, double im, long prec) { return {Real(re, prec), Real(im, prec)}; }

Complex Complex::from_rational(const Rational& re, long prec) { return Complex(Real::from_rational(re, prec)); }

Complex& Complex::operator+=(const Complex& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& o)
{
    Real re = re_ * o.re_ - im_ * o.im_;
    Real im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex& Complex::operator/=(const Complex& o)
{
    const Real den = o.re_ * o.re_ + o.im_ * o.im_;
    Real re = (re_ * o.re_ + im_ * o.im_) / den;
    Real im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string Complex::to_string(int digits) const
{
    std::string im = im_.to_string(digits);
    if (im.front() != '-') {
        im = "+" + im;
    }
    return re_.to_string(digits) + im + "i";
}

Real abs(const Complex& z)
{
    Real r(z.precision());
    mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
    return r;
}

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z)
{
    const Real m = exp(z.re());
    return {m * cos(z.im()), m * sin(z.im())};
}

Complex log(const Complex& z)
{
    if (z.re().is_zero() && z.im().is_zero()) {
        throw PreconditionError("log of zero");
    }
    return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z)
{
    if (z.re().is_zero() && z.im().is_zero()) {
        return z;
    }
    // Principal root: Re >= 0, computed without cancellation.
    const Real m = abs(z);
    if (z.re().sign() >= 0) {
        const Real s = sqrt(ldexp(m + z.re(), -1));
        return {s, z.im() / (s * 2)};
    }
    Real s = sqrt(ldexp(m - z.re(), -1));
    if (z.im().sign() < 0) {
        s = -s;
    }
    return {z.im() / (s * 2), s};
}

Complex pow(const Complex& z, const Real& w)
{
    const Complex l = log(z);
    return exp(Complex(l.re() * w, l.im() * w));
}

Complex cos(const Complex& z)
{
    return {cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im()))};
}

double agreement_bits(const Complex& a, const Complex& b)
{
    const Real diff = abs(a - b);
    if (diff.is_zero()) {
        return std::numeric_limits<double>::infinity();
    }
    return abs(b).log2_abs() - diff.log2_abs();
}

} // namespace zetaforms
