#include "zetaforms/rational.hpp"

#include <cctype>

#include "zetaforms/errors.hpp"

namespace zetaforms {

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw PreconditionError("rational with zero denominator");
    }
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q)
{
    if (q_.get_den() == 0) {
        throw PreconditionError("rational with zero denominator");
    }
    q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

BigInt parse_bigint(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        throw PreconditionError("malformed integer: '" + std::string(text) + "'");
    }
    std::string s(text);
    if (s.front() == '+') {
        s.erase(0, 1);
    }
    return BigInt(s, 10);
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_bigint(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw PreconditionError("malformed rational: '" + std::string(text) + "'");
    }
    return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(den_text));
}

Rational Rational::abs() const
{
    Rational r;
    mpq_abs(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        if (is_zero()) {
            throw PreconditionError("negative power of zero");
        }
        return Rational(1) / pow(-exponent);
    }
    Rational r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

BigInt Rational::floor() const
{
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::to_string() const
{
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw PreconditionError("rational division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r(*this);
    mpq_neg(r.q_.get_mpq_t(), r.q_.get_mpq_t());
    return r;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt pow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

} // namespace zetaforms
