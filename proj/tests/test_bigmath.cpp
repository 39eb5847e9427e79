#include <random>
#include <vector>

#include "doctest.h"

#include "zetaforms/errors.hpp"
#include "zetaforms/rational.hpp"
#include "zetaforms/real.hpp"
#include "zetaforms/series.hpp"
#include "zetaforms/special.hpp"

using namespace zetaforms;

namespace {

TruncatedSeries make(const Rational& center, std::vector<Rational> c)
{
    return {center, std::move(c)};
}

std::vector<Rational> R(std::initializer_list<const char*> xs)
{
    std::vector<Rational> out;
    for (const char* x : xs) {
        out.push_back(Rational::parse(x));
    }
    return out;
}

// Direct Dirichlet summation with the integral tail bound
//   sum_{k>K} k^-s < K^{1-s}/(s-1),
// plus the midpoint of the tail interval.
Real zeta_direct(long s, long prec)
{
    const long K = 1L << 14;
    Real sum(prec + 32);
    for (long k = K; k >= 1; --k) {
        Real base = Real::from_int(k, prec + 32);
        Real p(prec + 32);
        mpfr_pow_si(p.raw(), base.raw(), -s, MPFR_RNDN);
        sum += p;
    }
    // sum_{k>K} k^-s lies in ((K+1)^{1-s}/(s-1), K^{1-s}/(s-1)).
    Real lo(prec + 32), hi(prec + 32);
    Real kk = Real::from_int(K, prec + 32);
    mpfr_pow_si(hi.raw(), kk.raw(), 1 - s, MPFR_RNDN);
    Real kk1 = Real::from_int(K + 1, prec + 32);
    mpfr_pow_si(lo.raw(), kk1.raw(), 1 - s, MPFR_RNDN);
    sum += (lo + hi) / (2 * (s - 1));
    return sum;
}

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den)
{
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return {num(rng), den(rng)};
}

} // namespace

TEST_CASE("rational basics")
{
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(3).to_string() == "3/1");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).frac() == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), PreconditionError);
    CHECK_THROWS_AS(Rational::parse("1/x"), PreconditionError);
    CHECK(Rational(2, 3).pow(-3) == Rational(27, 8));
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
}

TEST_CASE("series_linear_factor")
{
    CHECK(series_linear_factor(0, 0, 2).coeffs() == R({"0", "1", "0"}));
    CHECK(series_linear_factor(Rational(1, 2), -3, 1).coeffs() == R({"-7/2", "1"}));
    CHECK(series_linear_factor(-2, -2, 3).coeffs() == R({"0", "1", "0", "0"}));
}

TEST_CASE("series_mul and series_inv")
{
    CHECK(series_mul(make(0, R({"1", "1"})), make(0, R({"1", "-1"}))).coeffs() == R({"1", "0"}));
    CHECK(series_mul(make(0, R({"0", "1", "0"})), make(0, R({"0", "1", "0"}))).coeffs() == R({"0", "0", "1"}));
    CHECK(series_mul(make(0, R({"2", "3", "1"})), make(0, R({"1", "0", "0"}))).coeffs() == R({"2", "3", "1"}));
    CHECK_THROWS_AS(series_mul(make(0, R({"1", "1"})), make(1, R({"1", "1"}))), PreconditionError);
    CHECK_THROWS_AS(series_mul(make(0, R({"1", "1"})), make(0, R({"1", "1", "0"}))), PreconditionError);

    CHECK(series_inv(make(0, R({"1", "1", "0"}))).coeffs() == R({"1", "-1", "1"}));
    CHECK(series_inv(make(0, R({"2", "0", "0"}))).coeffs() == R({"1/2", "0", "0"}));
    const auto a = make(0, R({"1", "0", "1"}));
    const auto b = series_inv(a);
    CHECK(b.coeffs() == R({"1", "0", "-1"}));
    CHECK(series_mul(a, b) == TruncatedSeries::constant(0, 1, 2));
    CHECK_THROWS_AS(series_inv(make(0, R({"0", "1"}))), PreconditionError);
}

TEST_CASE("series_mul(a, series_inv(a)) is the identity for random series")
{
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const int K = static_cast<int>(rng() % 12);
        const Rational center = random_rational(rng, 9, 5);
        std::vector<Rational> c(static_cast<std::size_t>(K) + 1);
        for (auto& x : c) {
            x = random_rational(rng, 50, 30);
        }
        if (c[0].is_zero()) {
            c[0] = 1;
        }
        const TruncatedSeries a(center, c);
        CHECK(series_mul(a, series_inv(a)) == TruncatedSeries::constant(center, 1, K));
    }
}

TEST_CASE("series_linear_power matches repeated multiplication")
{
    const Rational center(-3);
    for (long e : {-4L, -1L, 0L, 1L, 3L}) {
        auto naive = series_pow(series_linear_factor(Rational(5, 2), center, 6), e);
        CHECK(series_linear_power(Rational(5, 2), e, center, 6) == naive);
    }
    CHECK(series_linear_power(-3, 2, -3, 4).coeffs() == R({"0", "0", "1", "0", "0"}));
}

TEST_CASE("series_linear_product matches the naive product of factor series")
{
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        const int K = 1 + static_cast<int>(rng() % 15);
        const Rational center = random_rational(rng, 12, 2);
        std::vector<LinearFactor> fs;
        const int nf = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < nf; ++i) {
            Rational root;
            do {
                root = random_rational(rng, 20, 6);
            } while (root == center);
            fs.push_back({root, static_cast<long>(rng() % 9) - 4});
        }
        const Rational constant = random_rational(rng, 100, 7);
        auto naive = TruncatedSeries::constant(center, constant, K);
        for (const auto& f : fs) {
            naive = series_mul(naive, series_linear_power(f.root, f.exponent, center, K));
        }
        CHECK(series_linear_product(constant, fs, center, K) == naive);
    }
    std::vector<LinearFactor> bad{{Rational(2), 1}};
    CHECK_THROWS_AS(series_linear_product(1, bad, 2, 3), PreconditionError);
}

TEST_CASE("zeta_int")
{
    const PrecisionContext ctx{256, 64};
    const Real pi = const_pi(400);
    const Real z2 = zeta_int(2, ctx);
    CHECK(agreement_bits(pi * pi / 6, z2) >= 254);

    Real mp(400);
    for (long s : {3L, 5L, 7L, 21L, 69L}) {
        mpfr_zeta_ui(mp.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
        CHECK(agreement_bits(mp, zeta_int(s, ctx)) >= 254);
    }

    // Direct summation oracle at 64 bits; its own error is below 2^-70 for s=5.
    CHECK(agreement_bits(zeta_direct(5, 64), zeta_int(5, {64, 64})) >= 62);

    const Real z69 = zeta_int(69, ctx);
    const Real two69 = ldexp(Real::from_int(1, 400), -69);
    Real three69(400);
    mpfr_ui_pow_ui(three69.raw(), 3, 69, MPFR_RNDN);
    const Real rest = z69 - Real::from_int(1, 400) - two69;
    CHECK(rest.sign() > 0);
    CHECK(rest < Real::from_int(2, 400) / three69);

    // Two precisions agree to the lower one.
    CHECK(agreement_bits(zeta_int(7, ctx), zeta_int(7, ctx.with_prec(320))) >= 254);

    const auto range = zeta_int_range(5, 9, ctx);
    REQUIRE(range.size() == 5);
    CHECK(range[2] == zeta_int(7, ctx));
    CHECK_THROWS_AS(zeta_int(1, ctx), PreconditionError);
}

TEST_CASE("bernoulli_even")
{
    const auto B = bernoulli_even(6);
    CHECK(B[0] == Rational(1, 6));
    CHECK(B[1] == Rational(-1, 30));
    CHECK(B[2] == Rational(1, 42));
    CHECK(B[3] == Rational(-1, 30));
    CHECK(B[4] == Rational(5, 66));
    CHECK(B[5] == Rational(-691, 2730));
}

TEST_CASE("log_gamma")
{
    const PrecisionContext ctx{256, 64};
    const LogGammaEvaluator lg(ctx);
    CHECK(lg(Complex(Real::from_int(1, 256))).re().log2_abs() < -250);
    CHECK(lg(Complex(Real::from_int(2, 256))).re().log2_abs() < -250);

    const Real half_log_pi = log(const_pi(400)) / 2;
    CHECK(agreement_bits(half_log_pi, lg(Complex(Real(0.5, 256))).re()) >= 250);

    // Real-axis oracle.
    for (double x : {0.1, 3.7, 25.5, 140.25}) {
        Real ref(400);
        Real xr(x, 400);
        mpfr_lngamma(ref.raw(), xr.raw(), MPFR_RNDN);
        CHECK(agreement_bits(ref, lg(Complex(Real(x, 256))).re()) >= 245);
    }

    // Functional equation log Gamma(z+1) = log z + log Gamma(z), at two precisions.
    const Complex z = Complex::from_doubles(10, 10, 256);
    const Complex lhs = lg(z + 1);
    const Complex rhs = log(z) + lg(z);
    CHECK(agreement_bits(lhs, rhs) >= 245);
    const LogGammaEvaluator lg2(ctx.doubled());
    CHECK(agreement_bits(lg2(z), lg(z)) >= 250);

    CHECK_THROWS_AS(lg(Complex(Real::from_int(-3, 256))), PreconditionError);
    CHECK_THROWS_AS(lg(Complex(Real(256))), PreconditionError);
}

TEST_CASE("exp(log_gamma(z+1) - log_gamma(z)) = z at random right half-plane points")
{
    const PrecisionContext ctx{128, 64};
    const LogGammaEvaluator lg(ctx);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> re(0.01, 40.0), im(-60.0, 60.0);
    for (int i = 0; i < 100; ++i) {
        const Complex z = Complex::from_doubles(re(rng), im(rng), 128);
        const Complex back = exp(lg(z + 1) - lg(z));
        CHECK(agreement_bits(z, back) >= 120);
    }
}

TEST_CASE("log_gamma stays on the principal branch in the left half-plane")
{
    const PrecisionContext ctx{128, 64};
    const LogGammaEvaluator lg(ctx);
    // Gamma(z) Gamma(1-z) = pi / sin(pi z); compare imaginary parts modulo nothing:
    // for z = x + iy with y > 0 the principal log Gamma is continuous in x, so
    // stepping x by 1 changes it by log(z) exactly.
    for (double x : {-7.5, -3.25, -0.5, 0.5}) {
        const Complex z = Complex::from_doubles(x, 0.75, 128);
        CHECK(agreement_bits(lg(z + 1), log(z) + lg(z)) >= 118);
    }
}

TEST_CASE("digamma")
{
    const PrecisionContext ctx{256, 64};
    const Real gamma = const_euler(400);
    CHECK(agreement_bits(-gamma, digamma(1, ctx)) >= 254);
    const Real ref_half = -gamma - const_log2(400) * 2;
    CHECK(agreement_bits(ref_half, digamma(Rational(1, 2), ctx)) >= 254);
    const Rational x(5, 6);
    CHECK(agreement_bits(digamma(x, ctx) + Real::from_rational(Rational(6, 5), 400), digamma(x + Rational(1), ctx)) >= 250);
    for (const Rational& y : {Rational(1, 3), Rational(7, 3), Rational(250, 7)}) {
        Real ref(400);
        Real yr = Real::from_rational(y, 400);
        mpfr_digamma(ref.raw(), yr.raw(), MPFR_RNDN);
        CHECK(agreement_bits(ref, digamma(y, ctx)) >= 252);
    }
    CHECK_THROWS_AS(digamma(0, ctx), PreconditionError);
    CHECK_THROWS_AS(digamma(Rational(-1, 2), ctx), PreconditionError);
}

TEST_CASE("digamma recurrence at random rationals in (0, 10]")
{
    const PrecisionContext ctx{128, 64};
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(1, 1000);
    for (int i = 0; i < 30; ++i) {
        const Rational x(num(rng), 100);
        const Real lhs = digamma(x + Rational(1), ctx) - digamma(x, ctx);
        CHECK(agreement_bits(Real::from_rational(Rational(1) / x, 200), lhs) >= 120);
    }
}
