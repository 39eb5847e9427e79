#include "zetaforms/saddle.hpp"

#include <cmath>

#include "zetaforms/arith.hpp"
#include "zetaforms/errors.hpp"

namespace zetaforms {

namespace {

Complex constant(long v, long prec)
{
    return Complex(Real::from_int(v, prec));
}

Complex constant(double v, long prec)
{
    return Complex(Real(v, prec));
}

void check_domain(const Complex& t, const PrecisionContext& ctx)
{
    if (t.im().is_zero() && (t.re().sign() <= 0 || t.re() >= Real::from_int(1, 64))) {
        throw PreconditionError("phase function evaluated on a branch cut: t = " + t.to_string(12));
    }
    const double limit = -static_cast<double>(ctx.prec_bits) / 4.0;
    const long p = t.precision();
    for (long endpoint : {0L, 1L, -2L}) {
        if (abs(t - constant(endpoint, p)).log2_abs() < limit) {
            throw PreconditionError("phase function evaluated too close to the branch point " + std::to_string(endpoint));
        }
    }
}

struct Logs {
    Complex lt, l24, l22, l1;
};

Logs logs_at(const Complex& t)
{
    const long p = t.precision();
    return {log(t), log(t * 2L + 4L), log(constant(2L, p) - t * 2L), log(t + 1L)};
}

// 2 l i pi t
Complex twist(int ell, const Complex& t)
{
    const Real c = const_pi(t.precision()) * static_cast<long>(2 * ell);
    return Complex(-(t.im() * c), t.re() * c);
}

} // namespace

Complex phase_eval(const PhaseFunction& pf, const Complex& t_in, int derivative, const PrecisionContext& ctx)
{
    ctx.validate();
    require(derivative >= 0 && derivative <= 2, "phase_eval: derivative must be 0, 1 or 2");
    const long W = ctx.working_bits();
    const Complex t = t_in.rounded(W);
    check_domain(t, ctx);
    const long a3 = pf.A + 3;
    Complex out(W);
    if (derivative == 2) {
        out = constant(a3, W) / (t * (t + 1L)) + constant(6L, W) / (t + 2L) + constant(6L, W) / (constant(1L, W) - t);
        return out.rounded(ctx.prec_bits);
    }
    const Logs L = logs_at(t);
    if (derivative == 1) {
        out = (L.lt - L.l1) * a3 + L.l24 * 6L - L.l22 * 6L;
        if (pf.ell != 0) {
            out += Complex(Real(W), const_pi(W) * static_cast<long>(2 * pf.ell));
        }
    } else {
        out = t * L.lt * a3 + (t * 6L + 12L) * L.l24 + (constant(6L, W) - t * 6L) * L.l22 - (t + 1L) * L.l1 * a3;
        if (pf.ell != 0) {
            out += twist(pf.ell, t);
        }
    }
    return out.rounded(ctx.prec_bits);
}

Complex amplitude_g(long A, const Complex& t_in, const PrecisionContext& ctx)
{
    const long W = ctx.working_bits();
    const Complex t = t_in.rounded(W);
    check_domain(t, ctx);
    const Logs L = logs_at(t);
    const Real half(0.5, W);
    const Complex e = (L.l24 + L.l22) * Real(1.5, W) - (L.lt + L.l1) * (Real::from_int(A + 3, W) * half);
    return ((t * 2L + 1L) * exp(e)).rounded(ctx.prec_bits);
}

Complex amplitude_g_hat(long A, const Complex& t_in, const PrecisionContext& ctx)
{
    const long W = ctx.working_bits();
    const Complex t = t_in.rounded(W);
    check_domain(t, ctx);
    const Logs L = logs_at(t);
    const Complex e = (L.l1 - L.lt) * (Real::from_int(A + 3, W) * Real(0.5, W)) + L.l22 * 3L - L.l24 * 3L;
    const PrecisionContext wide = ctx.with_prec(static_cast<int>(W));
    return (amplitude_g(A, t, wide) * exp(e)).rounded(ctx.prec_bits);
}

namespace {

Complex seed_for(int ell, long prec)
{
    switch (ell) {
    case 0: return Complex::from_doubles(0.9991, 0.0, prec);
    case 1: return Complex::from_doubles(0.9995, -0.0007, prec);
    case 2: return Complex::from_doubles(1.0004, -0.0007, prec);
    default: throw PreconditionError("saddle index must satisfy |l| <= 2");
    }
}

bool in_domain(const Complex& t)
{
    return !(t.im().is_zero() && (t.re().sign() <= 0 || t.re() >= Real::from_int(1, 64)));
}

// Newton on phi_l'; returns false if the iterate leaves the domain, wanders
// off, or does not settle in 200 steps.
bool newton(const PhaseFunction& pf, Complex& t, int& steps, const PrecisionContext& wctx)
{
    const Complex start = t;
    const double stop = -static_cast<double>(wctx.prec_bits) + 8.0;
    for (steps = 1; steps <= 200; ++steps) {
        Complex d1 = phase_eval(pf, t, 1, wctx);
        Complex d2 = phase_eval(pf, t, 2, wctx);
        const Complex delta = d1 / d2;
        t -= delta;
        if (!in_domain(t) || abs(t - start).to_double() > 0.25) {
            return false;
        }
        if (delta.re().is_zero() && delta.im().is_zero()) {
            return true;
        }
        if (abs(delta).log2_abs() < stop) {
            return true;
        }
    }
    return false;
}

SaddlePoint find_positive(long A, int ell, const PrecisionContext& ctx)
{
    const PrecisionContext wctx = ctx.with_prec(ctx.working_bits() + 16);
    const long W = wctx.prec_bits;
    const PhaseFunction pf{A, ell};
    const Complex seed = seed_for(ell, W);
    Complex t = seed;
    int steps = 0;
    if (!newton(pf, t, steps, wctx)) {
        // Grid fallback: best |phi_l'| over a disk of radius 0.02 about the seed.
        const PrecisionContext coarse{64, 32};
        double best = std::numeric_limits<double>::infinity();
        Complex best_t = seed;
        for (int ri = 1; ri <= 10; ++ri) {
            for (int k = 0; k < 24; ++k) {
                const double r = 0.002 * ri;
                const double th = 2.0 * M_PI * k / 24.0;
                Complex c = seed + Complex::from_doubles(r * std::cos(th), r * std::sin(th), W);
                if (!in_domain(c)) {
                    continue;
                }
                try {
                    const double v = abs(phase_eval(pf, c, 1, coarse)).to_double();
                    if (v < best) {
                        best = v;
                        best_t = c;
                    }
                } catch (const PreconditionError&) {
                }
            }
        }
        t = best_t;
        if (!newton(pf, t, steps, wctx)) {
            throw ConvergenceError("saddle search for l=" + std::to_string(ell) + " did not converge");
        }
    }
    SaddlePoint sp;
    sp.A = A;
    sp.ell = ell;
    sp.newton_steps = steps;
    sp.prec_bits = ctx.prec_bits;
    sp.residual = abs(phase_eval(pf, t, 1, wctx)).rounded(ctx.prec_bits);
    if (!sp.residual.is_zero() && sp.residual.log2_abs() > -static_cast<double>(ctx.prec_bits) / 2.0) {
        throw ConvergenceError("saddle residual above 2^(-prec/2) for l=" + std::to_string(ell));
    }
    sp.f_eff = exp(phase_eval(pf, t, 0, wctx)).rounded(ctx.working_bits());
    sp.g = amplitude_g(A, t, wctx).rounded(ctx.working_bits());
    sp.g_hat = amplitude_g_hat(A, t, wctx).rounded(ctx.working_bits());
    sp.phi2 = phase_eval(pf, t, 2, wctx).rounded(ctx.working_bits());
    sp.t = t.rounded(ctx.working_bits());
    return sp;
}

} // namespace

SaddlePoint find_saddle(long A, int ell, const PrecisionContext& ctx)
{
    ctx.validate();
    require(A >= 15, "find_saddle: A must be at least 15");
    require(ell >= -2 && ell <= 2, "find_saddle: |l| must be at most 2");
    if (ell >= 0) {
        return find_positive(A, ell, ctx);
    }
    SaddlePoint sp = find_positive(A, -ell, ctx);
    sp.ell = ell;
    sp.t = sp.t.conj();
    sp.f_eff = sp.f_eff.conj();
    sp.g = sp.g.conj();
    sp.g_hat = sp.g_hat.conj();
    sp.phi2 = sp.phi2.conj();
    return sp;
}

std::map<int, Rational> fourier_weights()
{
    // cos^4 x = (3 + 4 cos 2x + cos 4x) / 8
    return {{-2, Rational(1, 16)}, {-1, Rational(1, 4)}, {0, Rational(3, 8)}, {1, Rational(1, 4)}, {2, Rational(1, 16)}};
}

Complex branch_check(const SaddlePoint& sp, Which which, double N, const PrecisionContext& ctx)
{
    const long W = ctx.working_bits();
    const PhaseFunction pf{sp.A, sp.ell};
    const Complex t0 = sp.t.rounded(W);
    const Complex phi_star = phase_eval(pf, t0, 0, ctx.with_prec(static_cast<int>(W)));
    const Complex amp_star = which == Which::plain ? sp.g.rounded(W) : sp.g_hat.rounded(W);
    const Complex NN(Real(N, W));
    // Along t = t0 + tau w with w = i sqrt(2/(N phi'')) the exponent is -tau^2
    // to leading order.
    Complex w = sqrt(constant(2L, W) / (NN * sp.phi2.rounded(W))).times_i();
    if (w.im().sign() < 0) {
        w = -w;
    }
    const double h = 0.05;
    const int steps = 160;
    const PrecisionContext wctx = ctx.with_prec(static_cast<int>(W));
    Complex quad(W);
    for (int k = -steps; k <= steps; ++k) {
        const Complex t = t0 + w * Real(h * k, W);
        const Complex amp = which == Which::plain ? amplitude_g(sp.A, t, wctx) : amplitude_g_hat(sp.A, t, wctx);
        quad += amp * exp((phase_eval(pf, t, 0, wctx) - phi_star) * NN);
    }
    quad = quad * w * Real(h, W);
    const Complex formula = (amp_star * sqrt(Complex(const_pi(W) * 2L) / (NN * sp.phi2.rounded(W)))).times_i();
    return (quad / formula).rounded(ctx.prec_bits);
}

AsymptoticModel build_model(long A, const PrecisionContext& ctx)
{
    AsymptoticModel model;
    model.A = A;
    model.ctx = ctx;
    for (int ell = -2; ell <= 2; ++ell) {
        model.saddles.emplace(ell, find_saddle(A, ell, ctx));
    }
    const PrecisionContext check{128, 64};
    for (int ell = -2; ell <= 2; ++ell) {
        for (Which which : {Which::plain, Which::hat}) {
            const Complex r = branch_check(model.saddles.at(ell), which, 1e8, check);
            int sign = 0;
            if (abs(r - constant(1L, r.precision())).to_double() < 0.05) {
                sign = 1;
            } else if (abs(r + constant(1L, r.precision())).to_double() < 0.05) {
                sign = -1;
            } else {
                throw ConvergenceError("branch validation inconclusive for l=" + std::to_string(ell) + ": ratio "
                                       + r.to_string(6));
            }
            (which == Which::plain ? model.branch_sign_plain : model.branch_sign_hat)[ell] = sign;
        }
    }
    return model;
}

Complex saddle_contribution(const AsymptoticModel& model, int ell, long n, Which which)
{
    require(n >= 1, "saddle_contribution: n must be positive");
    const long W = model.ctx.working_bits();
    const SaddlePoint& sp = model.saddles.at(ell);
    const Complex amp = (which == Which::plain ? sp.g : sp.g_hat).rounded(W);
    const Complex nn(Real::from_int(n, W));
    const Complex root = sqrt(Complex(const_pi(W) * 2L) / (nn * sp.phi2.rounded(W)));
    const Complex power = exp(log(sp.f_eff.rounded(W)) * nn);
    const int sign = (which == Which::plain ? model.branch_sign_plain : model.branch_sign_hat).at(ell);
    return (amp * root * power).times_i() * static_cast<long>(sign);
}

Complex predict_S(const AsymptoticModel& model, long n, Which which)
{
    require(n >= 2, "predict_S: n must be at least 2");
    const long W = model.ctx.working_bits();
    const long A = model.A;
    Complex sum(W);
    for (const auto& [ell, u] : fourier_weights()) {
        sum += saddle_contribution(model, ell, n, which) * Real::from_rational(u, W);
    }
    const Real two_pi = const_pi(W) * 2L;
    const Real half(0.5, W);
    Real pref = pow(two_pi, Real::from_int(A - 9, W) * half) * pow(Real::from_int(n, W), -(Real::from_int(A + 9, W) * half));
    pref = pref * 2L;
    if (which == Which::hat) {
        pref = -pref;
    }
    return (sum * pref).times_i().rounded(model.ctx.prec_bits);
}

Complex predict_S(long A, long n, const PrecisionContext& ctx, Which which)
{
    return predict_S(build_model(A, ctx), n, which);
}

Real kappa(const AsymptoticModel& model)
{
    return -log(abs(model.saddles.at(2).f_eff)).rounded(model.ctx.prec_bits);
}

Real kappa(long A, const PrecisionContext& ctx)
{
    return -log(abs(find_saddle(A, 2, ctx).f_eff)).rounded(ctx.prec_bits);
}

Real final_exponent(const AsymptoticModel& model, const PrecisionContext& ctx)
{
    const Real k = kappa(model);
    const Real d = delta_integral(ctx);
    return (Real::from_int(model.A + 2, ctx.working_bits()) - k - d * 3L).rounded(ctx.prec_bits);
}

Real final_exponent(const PrecisionContext& ctx)
{
    AsymptoticModel model;
    model.A = 68;
    model.ctx = ctx;
    model.saddles.emplace(2, find_saddle(68, 2, ctx));
    return final_exponent(model, ctx);
}

std::vector<long> sigma_selector(const AsymptoticModel& model, long n_max)
{
    const double log_f2 = abs(model.saddles.at(2).f_eff).log_abs();
    std::vector<long> out;
    double running = -std::numeric_limits<double>::infinity();
    const long W = model.ctx.working_bits();
    for (long n = 2; n <= n_max; n += 2) {
        Complex sum(W);
        for (const auto& [ell, u] : fourier_weights()) {
            sum += saddle_contribution(model, ell, n, Which::plain) * Real::from_rational(u, W);
        }
        const double r = abs(sum).log_abs() - static_cast<double>(n) * log_f2 + 0.5 * std::log(static_cast<double>(n));
        running = std::max(running, r);
        if (r >= running - std::log(2.0)) {
            out.push_back(n);
        }
    }
    return out;
}

} // namespace zetaforms
