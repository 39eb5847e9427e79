#include "doctest.h"

#include "zetaforms/errors.hpp"
#include "zetaforms/forms.hpp"
#include "zetaforms/special.hpp"

using namespace zetaforms;

namespace {

const PrecisionContext ctx256{256, 64};

LinearForm form_for(long n, long A)
{
    return q_coefficients(partial_fractions(Parameters{n, A}));
}

Real two_pow_minus_one(long j, long prec)
{
    return ldexp(Real::from_int(1, prec), j) - Real::from_int(1, prec);
}

} // namespace

TEST_CASE("base case n=0, A=68")
{
    const auto f = form_for(0, 68);
    CHECK(f.q.size() == 33);
    for (const auto& [j, q] : f.q) {
        CHECK(j % 2 == 1);
        CHECK(q == (j == 69 ? Rational(9112) : Rational(0)));
    }
    CHECK(f.q0.is_zero());
    CHECK(f.q0_hat.is_zero());

    const Real z69 = zeta_int(69, ctx256.with_prec(400));
    const Real plain = z69 * 9112;
    const Real hat = plain * two_pow_minus_one(69, 400);
    const Parameters p{0, 68};
    CHECK(agreement_bits(plain, S_direct(p, ctx256, Which::plain)) >= 255);
    CHECK(agreement_bits(hat, S_direct(p, ctx256, Which::hat)) >= 255);
    CHECK(agreement_bits(plain, S_via_zeta(f, ctx256, Which::plain)) >= 255);
    CHECK(agreement_bits(hat, S_via_zeta(f, ctx256, Which::hat)) >= 255);
}

TEST_CASE("q coefficient structure n=2, A=16")
{
    const auto f = form_for(2, 16);
    CHECK(f.q.size() == 7);
    CHECK(f.q.begin()->first == 5);
    CHECK(f.q.rbegin()->first == 17);
    CHECK(f.omega == 0);
    CHECK(q0_hat_alt(partial_fractions(Parameters{2, 16})) == f.q0_hat);
}

TEST_CASE("q0_hat two formulas agree")
{
    for (long n = 2; n <= 8; n += 2) {
        const auto t = partial_fractions(Parameters{n, 16});
        CHECK(q0_hat_alt(t) == q_coefficients(t).q0_hat);
    }
    const auto t = partial_fractions(Parameters{4, 68});
    CHECK(q0_hat_alt(t) == q_coefficients(t).q0_hat);
}

TEST_CASE("parity preconditions")
{
    CHECK_THROWS_AS(q_coefficients(partial_fractions(Parameters{1, 16})), PreconditionError);
    CHECK_THROWS_AS(q0_hat_alt(partial_fractions(Parameters{1, 16})), PreconditionError);
    CHECK_THROWS_AS(q_coefficients(partial_fractions(Parameters{2, 17})), PreconditionError);
    CHECK_THROWS_AS(q0_hat_alt(partial_fractions(Parameters{0, 16})), PreconditionError);
}

TEST_CASE("route equivalence")
{
    for (auto [n, A] : {std::pair{2L, 16L}, std::pair{4L, 16L}, std::pair{2L, 68L}, std::pair{4L, 68L}}) {
        const Parameters p{n, A};
        const auto f = form_for(n, A);
        for (Which w : {Which::plain, Which::hat}) {
            CHECK_MESSAGE(agreement_bits(S_direct(p, ctx256, w), S_via_zeta(f, ctx256, w)) >= 240,
                          "n=" << n << " A=" << A << " " << to_string(w));
        }
    }
}

TEST_CASE("known values")
{
    // Independent high-precision evaluation (mpmath, 60 digits) of the same sums.
    CHECK(S_direct({2, 16}, ctx256, Which::plain).to_string(10) == "-1.823569832e-01");
    CHECK(S_direct({2, 16}, ctx256, Which::hat).to_string(10) == "-1.500398090e+00");
    CHECK(S_direct({4, 16}, ctx256, Which::plain).to_string(10) == "1.273659042e+01");
    CHECK(S_direct({2, 68}, ctx256, Which::plain).to_string(10) == "5.924397736e-75");
    CHECK(S_direct({2, 68}, ctx256, Which::hat).to_string(10) == "2.125409298e-65");
}

TEST_CASE("direct summation is stable under a precision change")
{
    const Parameters p{2, 16};
    const auto d = S_direct_detailed(p, ctx256, Which::plain);
    const auto e = S_direct_detailed(p, ctx256.with_prec(320), Which::plain);
    CHECK(e.terms > d.terms);
    CHECK(d.tail_log2 < d.value.log2_abs() - 266);
    CHECK(agreement_bits(e.value, d.value) >= 255);
}

TEST_CASE("elimination")
{
    {
        const auto f = form_for(0, 68);
        const auto ef = eliminate(f, 69);
        CHECK(ef.c0.is_zero());
        for (const auto& [j, c] : ef.c) {
            CHECK(c.is_zero());
        }
        CHECK(ef.c.count(69) == 0);
        CHECK(elimination_value(ef, ctx256).is_zero());
    }
    const auto f = form_for(2, 16);
    CHECK(eliminate(f, 5).c.count(5) == 0);
    CHECK_THROWS_AS(eliminate(f, 6), PreconditionError);
    CHECK_THROWS_AS(eliminate(f, 3), PreconditionError);
    CHECK_THROWS_AS(eliminate(f, 19), PreconditionError);

    const auto ef = eliminate(f, 7);
    CHECK(ef.c.count(7) == 0);
    const PrecisionContext hi{400, 64};
    const Real lhs = S_via_zeta(f, hi, Which::plain) * two_pow_minus_one(7, 400) - S_via_zeta(f, hi, Which::hat);
    CHECK(agreement_bits(lhs, elimination_value(ef, ctx256)) >= 240);
}

TEST_CASE("integerize")
{
    {
        const auto ef = eliminate(form_for(0, 68), 7);
        const auto d = denominators(0);
        const auto iform = integerize(ef, d);
        CHECK(iform.scale == Rational(1));
        CHECK(iform.Q0 == 0);
        CHECK(iform.Q.at(69) == BigInt(9112) * (BigInt(128) - pow(BigInt(2), 69)));
    }
    for (long n : {2L, 4L, 10L}) {
        const auto t = partial_fractions(Parameters{n, 68});
        const auto f = q_coefficients(t);
        const auto d = denominators(n);
        CHECK(linear_form_integral(f, d));
        CHECK(table_integral(t, d));
        const auto iform = integerize(eliminate(f, 5), d);
        CHECK(iform.Q.count(5) == 0);
        CHECK(iform.scale_description == "Phi_n^-3 d_n^70");
    }
    // A too-small scale is caught loudly.
    const auto f = form_for(10, 68);
    auto d = denominators(10);
    d.d_n = 1;
    CHECK(!linear_form_integral(f, d));
    CHECK_THROWS_AS(integerize(eliminate(f, 5), d), VerificationError);
    CHECK_THROWS_AS(integerize(eliminate(f, 5), denominators(8)), PreconditionError);
}
