#include "zetaforms/contour.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetaforms/errors.hpp"
#include "zetaforms/parallel.hpp"
#include "zetaforms/special.hpp"

namespace zetaforms {

namespace {

// Gamma argument slope * t + shift.
struct GammaArg {
    long slope;
    Rational shift;
    long power;
};

class Integrand {
public:
    Integrand(const Parameters& params, Which which, const PrecisionContext& ctx)
        : params_(params), which_(which), W_(ctx.working_bits()), pole_limit_(-static_cast<double>(ctx.prec_bits) / 4.0),
          lgamma_(ctx.with_prec(ctx.working_bits())), prefactor_(W_)
    {
        const long n = params.n;
        const long a3 = params.A + 3;
        if (which == Which::plain) {
            args_ = {{1, Rational(0), a3}, {2, Rational(4 * n + 1), 3}, {-2, Rational(2 * n + 1), 3}, {1, Rational(n + 1), -a3}};
            linear_shift_ = n;
        } else {
            args_ = {{1, Rational(-1, 2), a3}, {2, Rational(4 * n), 3}, {-2, Rational(2 * n + 2), 3}, {1, Rational(2 * n + 1, 2), -a3}};
            linear_shift_ = n - 1;
        }
        prefactor_ = log(Real::from_bigint(factorial(static_cast<unsigned long>(n)), W_)) * (params.A - 15);
        pi_ = const_pi(W_);
    }

    Complex operator()(const Complex& t_in) const
    {
        const Complex t = t_in.rounded(W_);
        Complex acc(prefactor_);
        for (const GammaArg& g : args_) {
            const Complex z = t * g.slope + Real::from_rational(g.shift, W_);
            check_pole(z);
            acc += lgamma_(z) * g.power;
        }
        const Complex linear = t * 2L + linear_shift_;
        if (linear.re().is_zero() && linear.im().is_zero()) {
            return Complex(W_);
        }
        const Complex c = cos(t * pi_);
        if (c.re().is_zero() && c.im().is_zero()) {
            return Complex(W_);
        }
        acc += log(linear) + log(c) * 4L;
        return exp(acc);
    }

    long precision() const noexcept { return W_; }

private:
    void check_pole(const Complex& z) const
    {
        const double re = z.re().to_double();
        if (re > 0.5) {
            return;
        }
        const long k = std::lround(re);
        if (k > 0) {
            return;
        }
        const Complex d = z - k;
        if (abs(d).log2_abs() < pole_limit_) {
            throw PoleError("contour integrand evaluated at a Gamma pole", std::to_string(k));
        }
    }

    Parameters params_;
    Which which_;
    long W_;
    double pole_limit_;
    LogGammaEvaluator lgamma_;
    std::vector<GammaArg> args_;
    long linear_shift_ = 0;
    Real prefactor_;
    Real pi_;
};

void validate(const Parameters& params, const ContourSpec& spec)
{
    require(params.A >= 15, "contour: A must be at least 15");
    require(params.n >= 1, "contour: n must be at least 1");
    require(spec.c > Rational(1, 2) && spec.c < Rational(params.n), "contour: need 1/2 < c < n");
    require(spec.Y >= 0.0 && std::isfinite(spec.Y), "contour: Y must be non-negative");
    require(spec.rel_tol > 0.0 && spec.rel_tol < 1.0, "contour: rel_tol must lie in (0, 1)");
}

constexpr double base_step = 0.25;
constexpr int max_levels = 14;

class LineQuadrature {
public:
    LineQuadrature(const Integrand& f, const Rational& c) : f_(f), W_(f.precision()), c_(Real::from_rational(c, W_)) {}

    Complex at(double y) const { return f_(Complex(c_, Real(y, W_))); }

    // Sum of f over y = j h for the given j, reduced in index order.
    Complex sum(const std::vector<long>& js, double h) const
    {
        std::vector<Complex> vals(js.size(), Complex(W_));
        parallel_for(js.size(), [&](std::size_t i) { vals[i] = at(static_cast<double>(js[i]) * h); });
        Complex s(W_);
        for (const Complex& v : vals) {
            s += v;
        }
        return s;
    }

    // Majorant for int_{|y| > Y} |f|: |f(+-Y)| / pi once the samples at Y+1 and
    // Y+2 decay at least like exp(-pi |y - Y|). Returns a negative value when
    // the samples do not decay fast enough yet.
    Real tail(double Y) const
    {
        Real total(W_);
        const Real pi = const_pi(W_);
        for (double side : {1.0, -1.0}) {
            const Real f0 = abs(at(side * Y));
            const Real f1 = abs(at(side * (Y + 1.0)));
            const Real f2 = abs(at(side * (Y + 2.0)));
            if (f1 > f0 * exp(-pi) || f2 > f0 * exp(-pi * 2L)) {
                return Real::from_int(-1, W_);
            }
            total += f0 / pi;
        }
        return total;
    }

private:
    const Integrand& f_;
    long W_;
    Real c_;
};

std::vector<long> range_indices(long from, long to)
{
    std::vector<long> js;
    for (long j = from; j <= to; ++j) {
        js.push_back(j);
    }
    return js;
}

} // namespace

Complex contour_integrand(const Parameters& params, const Complex& t, Which which, const PrecisionContext& ctx)
{
    ctx.validate();
    require(params.A >= 15 && params.n >= 0, "contour_integrand: need A >= 15 and n >= 0");
    const Integrand f(params, which, ctx);
    return f(t).rounded(ctx.prec_bits);
}

ContourResult contour_S(const Parameters& params, const ContourSpec& spec, const PrecisionContext& ctx, Which which)
{
    ctx.validate();
    validate(params, spec);
    const Integrand f(params, which, ctx);
    const long W = f.precision();
    const LineQuadrature line(f, spec.c);
    const bool auto_height = spec.Y == 0.0;
    const Real tol(spec.rel_tol, W);

    // Grid y = j h, |j| <= J; the truncation height is Y = J h.
    double h = base_step;
    long J = auto_height ? 16 : static_cast<long>(std::ceil(spec.Y / base_step));
    Complex total = line.sum(range_indices(-J, J), h);
    long points = 2 * J + 1;
    Complex prev = total * Real(h, W);
    Complex current = prev;
    Real change(W);
    Real tail(W);
    for (int level = 1; level <= max_levels; ++level) {
        h /= 2.0;
        J *= 2;
        std::vector<long> odd;
        for (long j = -J + 1; j < J; j += 2) {
            odd.push_back(j);
        }
        total += line.sum(odd, h);
        points += static_cast<long>(odd.size());
        current = total * Real(h, W);
        change = abs(current - prev);
        prev = current;

        bool extended = false;
        tail = line.tail(static_cast<double>(J) * h);
        while (tail.sign() < 0 || tail > abs(current) * tol / 2L) {
            if (!auto_height) {
                throw ConvergenceError("contour: tail bound exceeds tolerance; Y too small");
            }
            require(static_cast<double>(J) * h < 1000.0, "contour: integrand does not decay; no truncation height found");
            // Extend by 2 in y at the current spacing.
            const long step = static_cast<long>(std::lround(2.0 / h));
            total += line.sum(range_indices(J + 1, J + step), h) + line.sum(range_indices(-J - step, -J - 1), h);
            points += 2 * step;
            J += step;
            current = total * Real(h, W);
            prev = current;
            extended = true;
            tail = line.tail(static_cast<double>(J) * h);
        }
        if (!extended && level >= 2 && change <= abs(current) * tol) {
            const Real pi = const_pi(W);
            Complex value = current * (Real::from_int(1, W) / pi);
            if (which == Which::plain) {
                value = -value;
            }
            ContourResult r;
            r.value = value.rounded(ctx.prec_bits);
            r.tail_bound = (tail / pi).rounded(ctx.prec_bits);
            r.quad_error = (change / pi).rounded(ctx.prec_bits);
            r.Y = static_cast<double>(J) * h;
            r.step = h;
            r.points = points;
            return r;
        }
    }
    throw ConvergenceError("contour: trapezoid halving did not reach the tolerance");
}

ContourReport contour_verify(const Parameters& params, const ContourSpec& spec, const PrecisionContext& ctx, Which which)
{
    const ContourResult cr = contour_S(params, spec, ctx, which);
    ContourReport rep;
    rep.params = params;
    rep.which = which;
    rep.contour_value = cr.value;
    // The direct series needs ~2^(prec/|deg+1|) terms; 160 bits covers any
    // comparison at the quadrature tolerance.
    rep.series_prec_bits = std::min(ctx.prec_bits, 160);
    rep.series_value = S_direct(params, ctx.with_prec(rep.series_prec_bits), which).rounded(ctx.prec_bits);
    rep.abs_diff = abs(cr.value - Complex(rep.series_value));
    rep.tail_bound = cr.tail_bound;
    rep.quadrature_points = cr.points;
    return rep;
}

} // namespace zetaforms
