#include "zetaforms/forms.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "zetaforms/errors.hpp"
#include "zetaforms/parallel.hpp"
#include "zetaforms/special.hpp"

namespace zetaforms {

const char* to_string(Which w) noexcept
{
    return w == Which::plain ? "plain" : "hat";
}

namespace {

// H[L][j] = sum_{k=1}^{L} x_k^{-(j+2)} for L = 0..Lmax, j = 1..A, where
// x_k = k (plain) or k - 1/2 (hat).
std::vector<std::vector<Rational>> power_sums(long Lmax, long A, Which which)
{
    std::vector<std::vector<Rational>> H(static_cast<std::size_t>(Lmax) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(A) + 1));
    for (long L = 1; L <= Lmax; ++L) {
        const Rational inv = which == Which::plain ? Rational(1, L) : Rational(2, 2 * L - 1);
        Rational pw = inv * inv * inv;
        auto& row = H[static_cast<std::size_t>(L)];
        const auto& prev = H[static_cast<std::size_t>(L - 1)];
        for (long j = 1; j <= A; ++j) {
            row[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j)] + pw;
            pw *= inv;
        }
    }
    return H;
}

// -sum_j sum_m j(j+1) p[j][m] H[m][j]
Rational q0_from_sums(const PartialFractionTable& t, const std::vector<std::vector<Rational>>& H)
{
    const long A = t.params().A;
    Rational acc;
    for (long m = 1; m <= t.params().n; ++m) {
        for (long j = 1; j <= A; ++j) {
            const auto& p = t.at(j, m);
            if (!p.is_zero()) {
                acc += Rational(j * (j + 1)) * p * H[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
            }
        }
    }
    return -acc;
}

Rational two_pow(long e)
{
    return Rational(pow(BigInt(2), static_cast<unsigned long>(e)));
}

} // namespace

LinearForm q_coefficients(const PartialFractionTable& table)
{
    const Parameters& params = table.params();
    params.validate_even();
    const long A = params.A;
    const long n = params.n;

    LinearForm f;
    f.params = params;
    f.omega = n >= 1 ? (n - 1) / 2 : 0;

    // Coefficient of zeta(j) is (j-2)(j-1) sum_m p[j-2][m]. For even j the
    // row sum must vanish, and j = 3 meets the residue at infinity.
    for (long j = 3; j <= A + 2; ++j) {
        Rational row;
        for (long m = 0; m <= n; ++m) {
            row += table.at(j - 2, m);
        }
        const Rational coeff = Rational((j - 2) * (j - 1)) * row;
        if (j % 2 == 0 || j == 3) {
            if (!coeff.is_zero()) {
                throw ConsistencyError("zeta(" + std::to_string(j) + ") coefficient does not vanish");
            }
            continue;
        }
        f.q[j] = coeff;
    }
    f.q0 = q0_from_sums(table, power_sums(n, A, Which::plain));
    f.q0_hat = q0_from_sums(table, power_sums(n, A, Which::hat));
    return f;
}

Rational q0_hat_alt(const PartialFractionTable& table)
{
    const Parameters& params = table.params();
    params.validate_even();
    const long n = params.n;
    const long A = params.A;
    if (n == 0) {
        throw PreconditionError("q0_hat_alt requires n >= 1");
    }
    const long omega = (n - 1) / 2;
    // sum_{k=0}^{L} (k+1/2)^{-s} = sum_{k=1}^{L+1} (k-1/2)^{-s}
    const auto H = power_sums(n + 1, A, Which::hat);
    Rational acc;
    for (long m = 0; m <= omega; ++m) {
        const auto& h = H[static_cast<std::size_t>(omega - m + 1)];
        for (long j = 1; j <= A; ++j) {
            const Rational w = Rational(j % 2 == 0 ? j * (j + 1) : -j * (j + 1));
            acc += w * table.at(j, m) * h[static_cast<std::size_t>(j)];
        }
    }
    for (long m = omega + 1; m <= n; ++m) {
        const auto& h = H[static_cast<std::size_t>(m - omega - 1)];
        for (long j = 1; j <= A; ++j) {
            acc -= Rational(j * (j + 1)) * table.at(j, m) * h[static_cast<std::size_t>(j)];
        }
    }
    return acc;
}

namespace {

// R'' at the points t = x/2 for integer x beyond the largest root, exactly
// per point. With y_i = x - 2 r_i and P = prod y_i,
//   R(t)  = C 2^{-deg} prod y_i^{e_i},
//   R''/R = S1^2 - S2 = 4 (s1^2 - s2) / P^2,
//   s1 = sum e_i P/y_i,  s2 = sum e_i (P/y_i)^2.
class SecondDerivativeKernel {
public:
    SecondDerivativeKernel(const FactoredRational& fr, long work)
        : work_(work)
    {
        for (const auto& [root, e] : fr.merged()) {
            const Rational twice = root * Rational(2);
            if (!twice.is_integer()) {
                throw PreconditionError("direct summation needs roots in (1/2)Z");
            }
            a_.push_back(twice.num().get_si());
            e_.push_back(e);
            max_root_ = std::max(max_root_, root.to_double());
        }
        const Rational c = fr.monic_constant() * Rational(2).pow(2 - fr.degree());
        scale_ = Real::from_rational(c, work_);
        log2_c_ = Real::from_rational(fr.monic_constant(), 64).log2_abs();
        degree_ = fr.degree();
    }

    // Exact term converted to a working-precision real.
    Real term(long x) const
    {
        const std::size_t k = a_.size();
        std::vector<unsigned long> y(k);
        BigInt P = 1;
        for (std::size_t i = 0; i < k; ++i) {
            const long yi = x - a_[i];
            if (yi <= 0) {
                throw PreconditionError("direct summation point not beyond the largest root");
            }
            y[i] = static_cast<unsigned long>(yi);
            P *= y[i];
        }
        BigInt s1 = 0, s2 = 0, Pi, sq;
        BigInt num = 1, den = 1, pw;
        for (std::size_t i = 0; i < k; ++i) {
            mpz_divexact_ui(Pi.get_mpz_t(), P.get_mpz_t(), y[i]);
            mpz_mul(sq.get_mpz_t(), Pi.get_mpz_t(), Pi.get_mpz_t());
            const long e = e_[i];
            if (e > 0) {
                mpz_addmul_ui(s1.get_mpz_t(), Pi.get_mpz_t(), static_cast<unsigned long>(e));
                mpz_addmul_ui(s2.get_mpz_t(), sq.get_mpz_t(), static_cast<unsigned long>(e));
            } else {
                mpz_submul_ui(s1.get_mpz_t(), Pi.get_mpz_t(), static_cast<unsigned long>(-e));
                mpz_submul_ui(s2.get_mpz_t(), sq.get_mpz_t(), static_cast<unsigned long>(-e));
            }
            // prod y^e / P^2 = prod y^(e-2)
            const long d = e - 2;
            if (d > 0) {
                mpz_ui_pow_ui(pw.get_mpz_t(), y[i], static_cast<unsigned long>(d));
                num *= pw;
            } else if (d < 0) {
                mpz_ui_pow_ui(pw.get_mpz_t(), y[i], static_cast<unsigned long>(-d));
                den *= pw;
            }
        }
        num *= s1 * s1 - s2;
        Real r(work_);
        mpfr_set_z(r.raw(), num.get_mpz_t(), MPFR_RNDN);
        mpfr_div_z(r.raw(), r.raw(), den.get_mpz_t(), MPFR_RNDN);
        r *= scale_;
        return r;
    }

    // log2 of a bound for sum_{t >= T0, t in T0 + Z} |R''(t)|, T0 > max root:
    //   |R''(t)| <= B t^{deg-2},  B = |C| prod max(1, (1 - r_i/T0)^{e_i}) (M1^2 + M2),
    //   M1 = sum |e_i| max(1, T0/(T0 - r_i)),  M2 = sum |e_i| max(1, T0/(T0 - r_i))^2,
    // and the sum over t >= T0 + 1 is at most the integral from T0.
    double tail_log2(double T0) const
    {
        if (!(T0 > max_root_)) {
            return std::numeric_limits<double>::infinity();
        }
        double log2B = log2_c_;
        double M1 = 0.0, M2 = 0.0;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            const double r = 0.5 * static_cast<double>(a_[i]);
            const double e = static_cast<double>(e_[i]);
            const double f = e * std::log2(1.0 - r / T0);
            log2B += std::max(0.0, f);
            const double q = std::max(1.0, T0 / (T0 - r));
            M1 += std::fabs(e) * q;
            M2 += std::fabs(e) * q * q;
        }
        log2B += std::log2(M1 * M1 + M2);
        const double d = static_cast<double>(degree_);
        // One extra bit absorbs the double-precision evaluation of the bound.
        return log2B + (d - 1.0) * std::log2(T0) - std::log2(1.0 - d) + 1.0;
    }

    double max_root() const noexcept { return max_root_; }

private:
    long work_;
    std::vector<long> a_;
    std::vector<long> e_;
    double max_root_ = -1e300;
    Real scale_{64};
    double log2_c_ = 0.0;
    long degree_ = 0;
};

struct RawSum {
    DirectSum sum;
    Real abs_total;
};

RawSum direct_sum_at(const FactoredRational& fr, long n, long prec, long work, Which which)
{
    const SecondDerivativeKernel kernel(fr, work);
    // Points t = k (plain) or k - 1/2 (hat), k >= n + 1; R'' vanishes at the
    // smaller ones. x = 2t.
    const long x0 = which == Which::plain ? 2 * (n + 1) : 2 * (n + 1) - 1;
    constexpr long block = 128;
    const std::size_t wave = std::max(1u, std::thread::hardware_concurrency());

    Real total(work);
    Real abs_total(work);
    long terms = 0;
    double tail = 0.0;
    for (long next_block = 0;; ) {
        std::vector<Real> sums(wave, Real(work));
        std::vector<Real> abs_sums(wave, Real(work));
        parallel_for(wave, [&](std::size_t b) {
            const long first = x0 + 2 * block * (next_block + static_cast<long>(b));
            Real s(work), sa(work);
            for (long i = 0; i < block; ++i) {
                Real t = kernel.term(first + 2 * i);
                sa += abs(t);
                s += t;
            }
            sums[b] = std::move(s);
            abs_sums[b] = std::move(sa);
        });
        for (std::size_t b = 0; b < wave; ++b) {
            total += sums[b];
            abs_total += abs_sums[b];
        }
        next_block += static_cast<long>(wave);
        terms = next_block * block;
        // Last point summed is x = x0 + 2(terms-1); the rest starts one step on.
        const double T_last = 0.5 * static_cast<double>(x0 + 2 * (terms - 1));
        tail = kernel.tail_log2(T_last);
        const double target = total.is_zero() ? -2.0 * static_cast<double>(prec) - 10.0
                                              : total.log2_abs() - static_cast<double>(prec) - 10.0;
        if (tail < target) {
            break;
        }
        if (terms > 200'000'000) {
            throw ConvergenceError("S_direct: tail bound not reached");
        }
    }
    return {DirectSum{total, terms, tail, work}, abs_total};
}

} // namespace

DirectSum S_direct_detailed(const Parameters& params, const PrecisionContext& ctx, Which which)
{
    params.validate();
    ctx.validate();
    if (params.A < 16) {
        throw PreconditionError("S_direct requires A >= 16");
    }
    const auto fr = build_R(params);
    long work = ctx.working_bits() + 32;
    for (int attempt = 0; attempt < 6; ++attempt) {
        RawSum r = direct_sum_at(fr, params.n, ctx.prec_bits, work, which);
        // Each term carries relative error below 2^{3-work}; the running sum
        // adds at most (terms + 1) 2^{-work} of the absolute total.
        const double err = r.abs_total.log2_abs() - static_cast<double>(work) + 3.0
                           + std::log2(static_cast<double>(r.sum.terms) + 1.0);
        const double allowed = r.sum.value.log2_abs() - static_cast<double>(ctx.prec_bits) - 4.0;
        if (err <= allowed) {
            return r.sum;
        }
        work += static_cast<long>(std::ceil(err - allowed)) + 16;
    }
    throw ConvergenceError("S_direct: working precision did not settle");
}

Real S_direct(const Parameters& params, const PrecisionContext& ctx, Which which)
{
    return S_direct_detailed(params, ctx, which).value.rounded(ctx.prec_bits);
}

namespace {

// sum_j weight_j zeta(j) over the keys of `coeffs` plus `constant`, at a
// working precision raised until the cancellation between the terms is paid for.
Real zeta_combination(const Rational& constant, const std::map<long, Rational>& coeffs, bool twisted,
                      const PrecisionContext& ctx)
{
    if (coeffs.empty()) {
        return Real::from_rational(constant, ctx.prec_bits);
    }
    const long s_min = coeffs.begin()->first;
    const long s_max = coeffs.rbegin()->first;
    long work = ctx.working_bits() + 16;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const auto z = zeta_int_range(s_min, s_max, ctx.with_prec(static_cast<int>(work)));
        Real total = Real::from_rational(constant, work);
        double largest = total.is_zero() ? -1e300 : total.log2_abs();
        for (const auto& [j, q] : coeffs) {
            Rational w = q;
            if (twisted) {
                w *= two_pow(j) - Rational(1);
            }
            Real term = Real::from_rational(w, work) * z[static_cast<std::size_t>(j - s_min)];
            if (!term.is_zero()) {
                largest = std::max(largest, term.log2_abs());
            }
            total += term;
        }
        if (total.is_zero()) {
            return total.rounded(ctx.prec_bits);
        }
        // Each term is accurate to about 2^{4-work} relative.
        const double err = largest - static_cast<double>(work) + 4.0 + std::log2(static_cast<double>(coeffs.size()) + 1.0);
        const double allowed = total.log2_abs() - static_cast<double>(ctx.prec_bits) - 4.0;
        if (err <= allowed) {
            return total.rounded(ctx.prec_bits);
        }
        work += static_cast<long>(std::ceil(err - allowed)) + 16;
    }
    throw ConvergenceError("zeta combination: working precision did not settle");
}

} // namespace

Real S_via_zeta(const LinearForm& form, const PrecisionContext& ctx, Which which)
{
    ctx.validate();
    if (which == Which::plain) {
        return zeta_combination(form.q0, form.q, false, ctx);
    }
    return zeta_combination(form.q0_hat, form.q, true, ctx);
}

EliminationForm eliminate(const LinearForm& form, long m)
{
    if (m % 2 == 0 || m < 5 || m > form.params.A + 1) {
        throw PreconditionError("elimination index m must be odd in [5, A+1] (got " + std::to_string(m) + ")");
    }
    EliminationForm ef;
    ef.params = form.params;
    ef.m = m;
    const Rational tm = two_pow(m);
    ef.c0 = (tm - Rational(1)) * form.q0 - form.q0_hat;
    for (const auto& [j, q] : form.q) {
        if (j == m) {
            continue;
        }
        ef.c[j] = (tm - two_pow(j)) * q;
    }
    return ef;
}

Real elimination_value(const EliminationForm& ef, const PrecisionContext& ctx)
{
    ctx.validate();
    std::map<long, Rational> nonzero;
    for (const auto& [j, c] : ef.c) {
        if (!c.is_zero()) {
            nonzero.emplace(j, c);
        }
    }
    return zeta_combination(ef.c0, nonzero, false, ctx);
}

namespace {

Rational integer_scale(const DenominatorData& d, long power)
{
    return Rational(pow(d.d_n, static_cast<unsigned long>(power)), pow(d.phi_n, 3));
}

} // namespace

IntegerForm integerize(const EliminationForm& ef, const DenominatorData& denoms)
{
    ef.params.validate_even();
    if (denoms.n != ef.params.n) {
        throw PreconditionError("integerize: denominator data for n=" + std::to_string(denoms.n)
                                + " does not match n=" + std::to_string(ef.params.n));
    }
    IntegerForm out;
    out.params = ef.params;
    out.m = ef.m;
    out.scale = integer_scale(denoms, ef.params.A + 2);
    out.scale_description = "Phi_n^-3 d_n^" + std::to_string(ef.params.A + 2);
    auto to_int = [&](const Rational& x, const std::string& what) {
        const Rational y = x * out.scale;
        if (!y.is_integer()) {
            throw VerificationError("integrality failed for " + what + " at n=" + std::to_string(ef.params.n)
                                    + ", m=" + std::to_string(ef.m) + ": " + y.to_string());
        }
        return y.num();
    };
    out.Q0 = to_int(ef.c0, "Q0");
    for (const auto& [j, c] : ef.c) {
        out.Q[j] = to_int(c, "Q" + std::to_string(j));
    }
    return out;
}

bool linear_form_integral(const LinearForm& form, const DenominatorData& denoms)
{
    const Rational s = integer_scale(denoms, form.params.A + 2);
    if (!(form.q0 * s).is_integer() || !(form.q0_hat * s).is_integer()) {
        return false;
    }
    return std::all_of(form.q.begin(), form.q.end(), [&](const auto& kv) { return (kv.second * s).is_integer(); });
}

bool table_integral(const PartialFractionTable& table, const DenominatorData& denoms)
{
    const long A = table.params().A;
    for (long j = 1; j <= A; ++j) {
        const Rational s = integer_scale(denoms, A - j);
        for (long m = 0; m <= table.params().n; ++m) {
            if (!(table.at(j, m) * s).is_integer()) {
                return false;
            }
        }
    }
    return true;
}

} // namespace zetaforms
