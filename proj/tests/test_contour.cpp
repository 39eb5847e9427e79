#include "doctest.h"

#include <random>

#include "zetaforms/contour.hpp"
#include "zetaforms/errors.hpp"

using namespace zetaforms;

namespace {

const PrecisionContext ctx256{256, 64};

// Real Gamma through MPFR directly, independent of the Stirling evaluator.
Real gamma_real(const Real& x)
{
    Real out(x.precision());
    mpfr_gamma(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

// The integrand on the real axis as a plain product of MPFR Gammas.
Real integrand_oracle(const Parameters& p, const Rational& t_exact, Which which, long prec)
{
    const Real t = Real::from_rational(t_exact, prec);
    const Real half(0.5, prec);
    const long n = p.n;
    const long a3 = p.A + 3;
    Real v = pow(Real::from_bigint(factorial(static_cast<unsigned long>(n)), prec), p.A - 15);
    Real c = cos(t * const_pi(prec));
    c = c * c;
    c = c * c;
    if (which == Which::plain) {
        v = v * (t * 2L + n) * pow(gamma_real(t), a3) * pow(gamma_real(t * 2L + (4 * n + 1)), 3)
            * pow(gamma_real(Real::from_int(2 * n + 1, prec) - t * 2L), 3) / pow(gamma_real(t + (n + 1)), a3);
    } else {
        v = v * (t * 2L + (n - 1)) * pow(gamma_real(t - half), a3) * pow(gamma_real(t * 2L + 4 * n), 3)
            * pow(gamma_real(Real::from_int(2 * n + 2, prec) - t * 2L), 3) / pow(gamma_real(t + half + n), a3);
    }
    return v * c;
}

Complex at(const Rational& c, double y, long prec = 320)
{
    return Complex(Real::from_rational(c, prec), Real(y, prec));
}

} // namespace

TEST_CASE("integrand matches a product of real Gammas")
{
    for (const Parameters p : {Parameters{2, 16}, Parameters{3, 17}}) {
        for (const Rational t : {Rational(3, 4), Rational(13, 10), Rational(7, 4)}) {
            for (Which w : {Which::plain, Which::hat}) {
                const Complex v = contour_integrand(p, Complex::from_rational(t, 320), w, ctx256);
                CHECK(agreement_bits(v.re(), integrand_oracle(p, t, w, 400)) >= 240);
                CHECK(v.im().log2_abs() < v.re().log2_abs() - 240);
            }
        }
    }
}

TEST_CASE("integrand symmetry and decay")
{
    const Parameters p{2, 16};
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> xs(0.55, 1.9);
    std::uniform_real_distribution<double> ys(-6.0, 6.0);
    for (int k = 0; k < 20; ++k) {
        const Complex t = Complex::from_doubles(xs(rng), ys(rng), 320);
        for (Which w : {Which::plain, Which::hat}) {
            const Complex a = contour_integrand(p, t, w, ctx256);
            const Complex b = contour_integrand(p, t.conj(), w, ctx256);
            CHECK(agreement_bits(a, b.conj()) >= 240);
        }
    }
    for (Which w : {Which::plain, Which::hat}) {
        for (double side : {1.0, -1.0}) {
            double last = abs(contour_integrand(p, at(Rational(3, 4), side * 4.0), w, ctx256)).log_abs();
            for (double y = 6.0; y <= 24.0; y += 2.0) {
                const double cur = abs(contour_integrand(p, at(Rational(3, 4), side * y), w, ctx256)).log_abs();
                CHECK(cur < last);
                last = cur;
            }
        }
    }
}

TEST_CASE("integrand poles")
{
    const Parameters p{2, 16};
    CHECK_THROWS_AS(contour_integrand(p, Complex::from_doubles(0.0, 0.0, 320), Which::plain, ctx256), PoleError);
    CHECK_THROWS_AS(contour_integrand(p, Complex::from_doubles(-3.0, 0.0, 320), Which::plain, ctx256), PoleError);
    CHECK_THROWS_AS(contour_integrand(p, Complex::from_doubles(0.5, 0.0, 320), Which::hat, ctx256), PoleError);
    // Cancelled by the zero of cos^4 in the exact function, but still a pole of a factor.
    CHECK_THROWS_AS(contour_integrand(p, Complex::from_doubles(2.5, 0.0, 320), Which::plain, ctx256), PoleError);
}

TEST_CASE("contour equals the direct series at n=2, A=16")
{
    const Parameters p{2, 16};
    for (Which w : {Which::plain, Which::hat}) {
        const Real series = S_direct(p, ctx256, w);
        ContourSpec lo;
        const ContourResult a = contour_S(p, lo, ctx256, w);
        CHECK(agreement_bits(a.value.re(), series) >= 90);
        CHECK(abs(a.value.im()) < abs(a.value.re()) * Real(1e-15, 320));
        CHECK(a.points > 0);

        ContourSpec hi;
        hi.c = Rational(5, 4);
        const ContourResult b = contour_S(p, hi, ctx256, w);
        CHECK(agreement_bits(a.value.re(), b.value.re()) >= 90);
    }
}

TEST_CASE("odd parameters n=3, A=17")
{
    const Parameters p{3, 17};
    const ContourReport r = contour_verify(p, ContourSpec{}, ctx256, Which::plain);
    CHECK(r.series_prec_bits == 160);
    CHECK(r.abs_diff < abs(r.series_value) * Real(1e-30, 320));
    CHECK(r.quadrature_points > 0);
    CHECK(r.tail_bound < abs(r.series_value) * Real(1e-30, 320));
}

TEST_CASE("doubling the height stays inside the tail bound")
{
    const Parameters p{2, 16};
    ContourSpec s10;
    s10.Y = 10.0;
    ContourSpec s20;
    s20.Y = 20.0;
    const ContourResult a = contour_S(p, s10, ctx256, Which::plain);
    const ContourResult b = contour_S(p, s20, ctx256, Which::plain);
    CHECK(abs(a.value - b.value) <= a.tail_bound + a.quad_error + b.quad_error);
    CHECK(b.tail_bound < a.tail_bound);
}

TEST_CASE("contour preconditions")
{
    const Parameters p{2, 16};
    ContourSpec bad;
    bad.c = Rational(1, 2);
    CHECK_THROWS_AS(contour_S(p, bad, ctx256, Which::plain), PreconditionError);
    bad.c = Rational(2);
    CHECK_THROWS_AS(contour_S(p, bad, ctx256, Which::plain), PreconditionError);
    CHECK_THROWS_AS(contour_S(Parameters{0, 16}, ContourSpec{}, ctx256, Which::plain), PreconditionError);
    CHECK_THROWS_AS(contour_S(Parameters{2, 14}, ContourSpec{}, ctx256, Which::plain), PreconditionError);
    ContourSpec low;
    low.Y = 2.0;
    CHECK_THROWS_AS(contour_S(p, low, ctx256, Which::plain), ConvergenceError);
}
