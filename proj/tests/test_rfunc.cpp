#include <random>

#include "doctest.h"

#include "zetaforms/errors.hpp"
#include "zetaforms/rfunc.hpp"

using namespace zetaforms;

namespace {

// Direct product form, independent of FactoredRational:
// n!^{A-15} 2^{-3} (2t+n) prod_{i=0}^{6n} (2t-2n+i)^3 / prod_{i=0}^{n} (t+i)^{A+3}
Rational R_oracle(long n, long A, const Rational& t)
{
    Rational v(pow(factorial(static_cast<unsigned long>(n)), static_cast<unsigned long>(A - 15)));
    v /= Rational(8);
    v *= Rational(2) * t + Rational(n);
    for (long i = 0; i <= 6 * n; ++i) {
        v *= (Rational(2) * t - Rational(2 * n - i)).pow(3);
    }
    for (long i = 0; i <= n; ++i) {
        v /= (t + Rational(i)).pow(A + 3);
    }
    return v;
}

Rational random_non_pole(std::mt19937_64& rng, long n)
{
    for (;;) {
        std::uniform_int_distribution<long> num(-400, 400), den(1, 37);
        Rational t(num(rng), den(rng));
        if (!(t.is_integer() && t <= Rational(0) && t >= Rational(-n))) {
            return t;
        }
    }
}

} // namespace

TEST_CASE("parameters")
{
    CHECK(Parameters{1, 16}.degree() == -16);
    CHECK(Parameters{0, 68}.degree() == -67);
    CHECK_THROWS_AS(Parameters({1, 14}).validate(), PreconditionError);
    CHECK_THROWS_AS(Parameters({-1, 16}).validate(), PreconditionError);
    CHECK_NOTHROW(Parameters({3, 17}).validate());
    CHECK_THROWS_AS(Parameters({3, 16}).validate_even(), PreconditionError);
    CHECK_THROWS_AS(Parameters({2, 15}).validate_even(), PreconditionError);
    CHECK_THROWS_AS(Parameters({2, 17}).validate_even(), PreconditionError);
    CHECK_NOTHROW(Parameters({2, 16}).validate_even());
}

TEST_CASE("build_R base case n=0")
{
    const auto fr = build_R({0, 68});
    CHECK(fr.monic_constant() == Rational(2));
    REQUIRE(fr.merged().size() == 1);
    CHECK(fr.merged().begin()->first == Rational(0));
    CHECK(fr.merged().begin()->second == -67);
    CHECK(fr.degree() == -67);
    CHECK(fr.evaluate(1) == Rational(2));
    CHECK(fr.evaluate(2) == Rational(BigInt(2), pow(BigInt(2), 67)));
}

TEST_CASE("both constructions agree and match the direct product")
{
    std::mt19937_64 rng(31337);
    for (long A : {16L, 68L}) {
        for (long n = 0; n <= 8; ++n) {
            const Parameters p{n, A};
            const auto a = build_R(p, Construction::shifted_pochhammers);
            const auto b = build_R(p, Construction::doubled_pochhammer);
            CHECK(a.degree() == p.degree());
            CHECK(b.degree() == p.degree());
            CHECK(a.merged() == b.merged());
            for (int i = 0; i < 10; ++i) {
                const Rational t = random_non_pole(rng, n);
                const Rational va = a.evaluate(t);
                CHECK(va == b.evaluate(t));
                CHECK(va == R_oracle(n, A, t));
            }
        }
    }
    const Parameters p{2, 16};
    CHECK(build_R(p).evaluate(Rational(1, 3)) == build_R(p, Construction::doubled_pochhammer).evaluate(Rational(1, 3)));
}

TEST_CASE("evaluate_R zeros and poles")
{
    const auto fr = build_R({2, 16});
    CHECK(fr.evaluate(1).is_zero());
    CHECK(fr.evaluate(2).is_zero());
    CHECK(fr.evaluate(Rational(3, 2)).is_zero());
    CHECK(!fr.evaluate(3).is_zero());
    try {
        (void)fr.evaluate(-1);
        FAIL("expected a pole error");
    } catch (const PoleError& e) {
        CHECK(e.root() == "-1/1");
    }
    CHECK_THROWS_AS(fr.evaluate(0), PoleError);
    CHECK_NOTHROW(fr.evaluate(-3));
}

TEST_CASE("expand agrees with exact difference quotients")
{
    const auto fr = build_R({2, 16});
    // Series about t=5 to order 2: compare R(5 + h) with the quadratic model
    // for tiny h; the cubic remainder must be O(h^3).
    const auto s = fr.expand(5, 3);
    CHECK(s[0] == fr.evaluate(5));
    const Rational h(1, 1000000);
    const Rational model = s[0] + s[1] * h + s[2] * h * h + s[3] * h * h * h;
    const Rational diff = (fr.evaluate(Rational(5) + h) - model).abs();
    CHECK(diff < (s[0].abs() + Rational(1)) * Rational(1, 1000000) * h * h * h);
    // A triple root: the expansion starts at u^3.
    const auto r = fr.expand(1, 4);
    CHECK(r[0].is_zero());
    CHECK(r[1].is_zero());
    CHECK(r[2].is_zero());
    CHECK(!r[3].is_zero());
    CHECK(fr.second_derivative(1).is_zero());
    CHECK_THROWS_AS(fr.expand(0, 2), PoleError);
}

TEST_CASE("partial_fractions base case")
{
    const Parameters p{0, 68};
    const auto t = partial_fractions(p);
    for (long j = 1; j <= 68; ++j) {
        CHECK(t.at(j, 0) == (j == 67 ? Rational(2) : Rational(0)));
    }
    const auto fr = build_R(p);
    const std::vector<Rational> pts{1, 2, 3};
    CHECK(verify_reconstruction(t, fr, pts));
}

TEST_CASE("partial_fractions n=2 A=16")
{
    const Parameters p{2, 16};
    const auto fr = build_R(p);
    auto t = partial_fractions(fr, p);
    for (const Rational& x : {Rational(1, 3), Rational(1, 5), Rational(7, 2), Rational(-1, 2), Rational(11)}) {
        CHECK(t.evaluate(x) == fr.evaluate(x));
    }
    CHECK(residue_at_infinity_vanishes(t));
    CHECK(even_row_sums_vanish(t));
    CHECK(reflection_symmetric(t));

    std::vector<Rational> pts;
    for (long k = 1; k <= 600; ++k) {
        pts.emplace_back(k % 2 ? k : -k, 601);
    }
    CHECK(verify_reconstruction(t, fr, pts));
    CHECK(pts.size() > certifying_points(p).size());

    t.at(5, 1) += Rational(1);
    CHECK(!verify_reconstruction(t, fr, certifying_points(p)));
    CHECK_THROWS_AS(t.at(0, 0), PreconditionError);
    CHECK_THROWS_AS(t.at(17, 0), PreconditionError);
}

TEST_CASE("partial fraction coefficients match an independent derivative computation")
{
    // p[j][m] = (1/(A-j)!) d^{A-j}/dt^{A-j} [R(t)(t+m)^A] at t=-m. Oracle: the
    // naive product of factor series built by repeated multiplication.
    const Parameters p{2, 16};
    const auto fr = build_R(p, Construction::doubled_pochhammer);
    const auto t = partial_fractions(p);
    for (long m = 0; m <= 2; ++m) {
        const Rational c(-m);
        auto s = TruncatedSeries::constant(c, fr.constant() * fr.extra().slope, 16);
        s = series_mul(s, series_linear_power(-fr.extra().intercept / fr.extra().slope, 1, c, 16));
        long at_center = 16;
        for (const auto& f : fr.factors()) {
            if (f.root == c) {
                at_center += f.exponent;
            } else {
                s = series_mul(s, series_linear_power(f.root, f.exponent, c, 16));
            }
        }
        s = series_mul(s, series_linear_power(c, at_center, c, 16));
        for (long j = 1; j <= 16; ++j) {
            CHECK(t.at(j, m) == s[static_cast<std::size_t>(16 - j)]);
        }
    }
}

TEST_CASE("partial fraction invariants for odd parameters")
{
    const Parameters p{3, 17};
    const auto fr = build_R(p);
    const auto t = partial_fractions(fr, p);
    CHECK(residue_at_infinity_vanishes(t));
    CHECK(verify_reconstruction(t, fr, certifying_points(p)));
}

TEST_CASE("vanishing_check")
{
    CHECK(vanishing_check(build_R({2, 16}), 2));
    CHECK(vanishing_check(build_R({1, 68}), 1));
    CHECK(vanishing_check(build_R({0, 16}), 0));
    // Orders of the series at the vanishing points, not just multiplicities.
    const auto fr = build_R({3, 16});
    for (long k = 1; k <= 3; ++k) {
        for (const Rational& c : {Rational(k), Rational(2 * k - 1, 2)}) {
            const auto s = fr.expand(c, 2);
            CHECK(s[0].is_zero());
            CHECK(s[1].is_zero());
            CHECK(s[2].is_zero());
        }
    }
    const FactoredRational weak(Rational(1), {{Rational(1), 2}, {Rational(1, 2), 3}, {Rational(0), -20}},
                                {Rational(2), Rational(1)});
    CHECK(!vanishing_check(weak, 1));
}
