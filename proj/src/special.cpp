#include "zetaforms/special.hpp"

#include <cmath>
#include <numbers>

#include "zetaforms/errors.hpp"

namespace zetaforms {

namespace {

// Upper bound for log2 |B_{2k}|: |B_{2k}| = 2 (2k)! zeta(2k) / (2 pi)^{2k} <= 4 (2k)! / (2 pi)^{2k}.
double log2_bernoulli_bound(int k)
{
    const double twok = 2.0 * k;
    return (2.0 + std::lgamma(twok + 1.0) / std::numbers::ln2) - twok * std::log2(2.0 * std::numbers::pi);
}

} // namespace

std::vector<Rational> bernoulli_even(int count)
{
    require(count >= 0, "bernoulli_even: negative count");
    const auto n = static_cast<std::size_t>(count);
    // Tangent numbers T_1..T_n by the in-place integer recurrence of Brent and Harvey.
    std::vector<BigInt> T(n + 1);
    if (n >= 1) {
        T[1] = 1;
    }
    for (std::size_t k = 2; k <= n; ++k) {
        T[k] = T[k - 1] * static_cast<unsigned long>(k - 1);
    }
    for (std::size_t k = 2; k <= n; ++k) {
        for (std::size_t j = k; j <= n; ++j) {
            T[j] = T[j - 1] * static_cast<unsigned long>(j - k) + T[j] * static_cast<unsigned long>(j - k + 2);
        }
    }
    std::vector<Rational> B;
    B.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        // B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1))
        BigInt four_k = BigInt(1) << static_cast<mp_bitcnt_t>(2 * k);
        BigInt num = T[k] * static_cast<unsigned long>(2 * k);
        if (k % 2 == 0) {
            num = -num;
        }
        B.emplace_back(num, four_k * (four_k - 1));
    }
    return B;
}

std::vector<Real> zeta_int_range(long s_min, long s_max, const PrecisionContext& ctx)
{
    ctx.validate();
    if (s_min < 2) {
        throw PreconditionError("zeta_int requires s >= 2");
    }
    require(s_max >= s_min, "zeta_int_range: empty range");

    // Borwein's alternating-series acceleration. With
    //   d_k = N sum_{i<=k} (N+i-1)! 4^i / ((N-i)! (2i)!)
    // zeta(s) = -1/(d_N (1 - 2^{1-s})) sum_{k<N} (-1)^k (d_k - d_N) / (k+1)^s + err,
    // |err| <= 3 / ((3 + sqrt 8)^N |1 - 2^{1-s}|) <= 6 (3 + sqrt 8)^{-N} for s >= 2.
    const long work = ctx.working_bits() + 16;
    const auto N = static_cast<long>(std::ceil((work + 4) / std::log2(3.0 + std::sqrt(8.0)))) + 1;
    const long wp = work + static_cast<long>(std::ceil(std::log2(static_cast<double>(N)))) + 8;

    std::vector<Rational> d(static_cast<std::size_t>(N) + 1);
    Rational term(1);
    Rational acc(0);
    for (long i = 0; i <= N; ++i) {
        acc += term;
        d[static_cast<std::size_t>(i)] = acc;
        if (i < N) {
            term *= Rational(BigInt(4) * (N + i) * (N - i), BigInt(2 * i + 1) * (2 * i + 2));
        }
    }
    // The common factor N cancels between d_k - d_N and d_N, so it is left out.
    std::vector<Real> e(static_cast<std::size_t>(N));
    for (long k = 0; k < N; ++k) {
        e[static_cast<std::size_t>(k)] = Real::from_rational(d[static_cast<std::size_t>(k)] - d.back(), wp);
    }
    const Real dN = Real::from_rational(d.back(), wp);

    std::vector<Real> out;
    out.reserve(static_cast<std::size_t>(s_max - s_min + 1));
    for (long s = s_min; s <= s_max; ++s) {
        Real sum(wp);
        for (long k = N - 1; k >= 0; --k) {
            Real base = Real::from_int(k + 1, wp);
            Real p(wp);
            mpfr_pow_si(p.raw(), base.raw(), -s, MPFR_RNDN);
            p *= e[static_cast<std::size_t>(k)];
            if (k % 2 == 0) {
                sum += p;
            } else {
                sum -= p;
            }
        }
        Real factor = Real::from_int(1, wp) - ldexp(Real::from_int(1, wp), 1 - s);
        Real z = -sum / (dN * factor);
        out.push_back(z.rounded(ctx.prec_bits));
    }
    return out;
}

Real zeta_int(long s, const PrecisionContext& ctx)
{
    return std::move(zeta_int_range(s, s, ctx).front());
}

LogGammaEvaluator::LogGammaEvaluator(const PrecisionContext& ctx)
    : ctx_(ctx), work_(0), shift_radius_(0), half_log_2pi_(64)
{
    ctx_.validate();
    work_ = ctx_.working_bits() + 16;
    // Stirling remainder after M terms, for Re w > 0:
    //   |R_M| <= |B_{2M+2}| / ((2M+2)(2M+1) |w|^{2M+1}) * sec(arg(w)/2)^{2M+2},
    // and sec(arg/2)^2 <= 2 on the right half-plane. Shifting to Re w >= r makes
    // the smallest term about exp(-sqrt(2) pi r), so r ~ 0.16 * bits suffices.
    shift_radius_ = static_cast<long>(std::ceil(0.16 * static_cast<double>(work_))) + 8;
    const double target = -static_cast<double>(work_) - 8.0;
    const double log2r = std::log2(static_cast<double>(shift_radius_));
    int M = 0;
    for (int k = 1;; ++k) {
        const double bound = log2_bernoulli_bound(k + 1) - std::log2((2.0 * k + 2) * (2.0 * k + 1))
                             - (2.0 * k + 1) * log2r + (k + 1);
        if (bound < target) {
            M = k;
            break;
        }
        if (k > 4 * shift_radius_) {
            throw ConvergenceError("log_gamma: Stirling table bound not reached");
        }
    }
    const auto B = bernoulli_even(M);
    stirling_.reserve(static_cast<std::size_t>(M));
    for (int k = 1; k <= M; ++k) {
        stirling_.push_back(Real::from_rational(B[static_cast<std::size_t>(k - 1)] / Rational(2L * k * (2L * k - 1)), work_));
    }
    half_log_2pi_ = log(const_pi(work_) * 2) / 2;
}

Complex LogGammaEvaluator::operator()(const Complex& z_in) const
{
    const Complex z = z_in.rounded(work_);
    if (z.im().is_zero() && z.re().sign() <= 0) {
        throw PreconditionError("log_gamma: argument on the branch cut (-inf, 0]");
    }
    const double re = z.re().to_double();
    long shifts = 0;
    if (re < static_cast<double>(shift_radius_)) {
        shifts = static_cast<long>(std::ceil(static_cast<double>(shift_radius_) - re));
    }
    const Complex w = z + shifts;

    // (w - 1/2) log w - w + log(2 pi)/2 + sum_k c_k / w^{2k-1}
    Complex result = (w - Complex(Real(0.5, work_))) * log(w) - w + half_log_2pi_;
    const Complex inv = Complex(Real::from_int(1, work_)) / w;
    const Complex inv2 = inv * inv;
    Complex p = inv;
    const double log2w = abs(w).log2_abs();
    for (std::size_t k = 0; k < stirling_.size(); ++k) {
        result += p * stirling_[k];
        const double next = stirling_.size() > k + 1 ? stirling_[k + 1].log2_abs() : 0.0;
        // Remaining terms are below the table's worst-case tail once |w| is large.
        if (k + 1 < stirling_.size()
            && next - (2.0 * static_cast<double>(k) + 3.0) * log2w + static_cast<double>(k + 2) < -static_cast<double>(work_) - 8.0) {
            break;
        }
        p *= inv2;
    }

    if (shifts > 0) {
        // log Gamma(z) = log Gamma(z + s) - sum_{i<s} log(z + i). The sum is
        // taken as one log of the product, and the multiple of 2 pi i lost to
        // the principal branch is recovered from the double-precision sum of
        // the individual arguments.
        Complex prod(Real::from_int(1, work_), Real(work_));
        double arg_sum = 0.0;
        const double im = z.im().to_double();
        for (long i = 0; i < shifts; ++i) {
            Complex zi = z + i;
            arg_sum += std::atan2(im, re + static_cast<double>(i));
            prod *= zi;
        }
        Complex lp = log(prod);
        const double k = std::round((arg_sum - lp.im().to_double()) / (2.0 * std::numbers::pi));
        if (k != 0.0) {
            lp += Complex(Real(work_), const_pi(work_) * static_cast<long>(2 * k));
        }
        result -= lp;
    }
    return result.rounded(ctx_.prec_bits);
}

Complex log_gamma(const Complex& z, const PrecisionContext& ctx)
{
    return LogGammaEvaluator(ctx)(z);
}

Real log_gamma(const Real& x, const PrecisionContext& ctx)
{
    if (x.sign() <= 0) {
        throw PreconditionError("log_gamma: real argument must be positive");
    }
    return LogGammaEvaluator(ctx)(Complex(x)).re();
}

Real digamma(const Rational& x, const PrecisionContext& ctx)
{
    ctx.validate();
    if (x.sign() <= 0) {
        throw PreconditionError("digamma requires x > 0");
    }
    const long work = ctx.working_bits() + 16;
    // For real w > 0 the asymptotic series alternates in sign after the first
    // terms and the remainder is bounded by the first omitted term.
    const long r = static_cast<long>(std::ceil(static_cast<double>(work) / 8.0)) + 4;
    const double xd = x.to_double();
    long shifts = 0;
    if (xd < static_cast<double>(r)) {
        shifts = static_cast<long>(std::ceil(static_cast<double>(r) - xd));
    }
    const Rational w = x + Rational(shifts);
    const double log2w = std::log2(w.to_double());
    int M = 0;
    for (int k = 1;; ++k) {
        const double bound = log2_bernoulli_bound(k + 1) - std::log2(2.0 * k + 2) - (2.0 * k + 2) * log2w;
        if (bound < -static_cast<double>(work) - 8.0) {
            M = k;
            break;
        }
        if (k > 8 * r) {
            throw ConvergenceError("digamma: asymptotic bound not reached");
        }
    }
    const auto B = bernoulli_even(M);

    // psi(w) = log w - 1/(2w) - sum_k B_{2k} / (2k w^{2k})
    const Real wr = Real::from_rational(w, work);
    Real result = log(wr) - Real::from_rational(Rational(1) / (Rational(2) * w), work);
    const Rational inv2 = Rational(1) / (w * w);
    Rational p = inv2;
    Rational series(0);
    for (int k = 1; k <= M; ++k) {
        series += B[static_cast<std::size_t>(k - 1)] * p / Rational(2L * k);
        p *= inv2;
    }
    result -= Real::from_rational(series, work);

    Rational back(0);
    for (long i = 0; i < shifts; ++i) {
        back += Rational(1) / (x + Rational(i));
    }
    result -= Real::from_rational(back, work);
    return result.rounded(ctx.prec_bits);
}

} // namespace zetaforms
