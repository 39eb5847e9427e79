#include "zetaforms/series.hpp"

#include "zetaforms/errors.hpp"

namespace zetaforms {

TruncatedSeries::TruncatedSeries(Rational center, std::vector<Rational> coeffs)
    : center_(std::move(center)), coeffs_(std::move(coeffs))
{
    require(!coeffs_.empty(), "series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& center, const Rational& value, int order)
{
    require(order >= 0, "series order must be non-negative");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = value;
    return {center, std::move(c)};
}

namespace {

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.center() != b.center() || a.order() != b.order()) {
        throw PreconditionError("series center/order mismatch");
    }
}

} // namespace

TruncatedSeries series_linear_factor(const Rational& root, const Rational& center, int order)
{
    require(order >= 0, "series order must be non-negative");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = center - root;
    if (order >= 1) {
        c[1] = 1;
    }
    return {center, std::move(c)};
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    check_compatible(a, b);
    std::vector<Rational> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] += b.coeffs()[i];
    }
    return {a.center(), std::move(c)};
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& s)
{
    std::vector<Rational> c(a.coeffs());
    for (auto& x : c) {
        x *= s;
    }
    return {a.center(), std::move(c)};
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    check_compatible(a, b);
    const std::size_t n = a.coeffs().size();
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs()[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return {a.center(), std::move(c)};
}

TruncatedSeries series_inv(const TruncatedSeries& a)
{
    const auto& x = a.coeffs();
    if (x[0].is_zero()) {
        throw PreconditionError("series inversion with zero constant term");
    }
    const std::size_t n = x.size();
    std::vector<Rational> y(n);
    const Rational inv0 = Rational(1) / x[0];
    y[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            acc += x[i] * y[k - i];
        }
        y[k] = -acc * inv0;
    }
    return {a.center(), std::move(y)};
}

TruncatedSeries series_pow(const TruncatedSeries& a, long exponent)
{
    if (exponent < 0) {
        return series_pow(series_inv(a), -exponent);
    }
    TruncatedSeries result = TruncatedSeries::constant(a.center(), 1, a.order());
    TruncatedSeries base = a;
    while (exponent > 0) {
        if (exponent & 1) {
            result = series_mul(result, base);
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

TruncatedSeries series_linear_power(const Rational& root, long exponent, const Rational& center, int order)
{
    require(order >= 0, "series order must be non-negative");
    const Rational c = center - root;
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    if (c.is_zero()) {
        require(exponent >= 0, "negative power of a factor vanishing at the center");
        if (exponent <= order) {
            out[static_cast<std::size_t>(exponent)] = 1;
        }
        return {center, std::move(out)};
    }
    // binom(e, k) c^(e-k), built incrementally.
    Rational term = c.pow(exponent);
    const Rational inv_c = Rational(1) / c;
    for (int k = 0; k <= order; ++k) {
        out[static_cast<std::size_t>(k)] = term;
        term *= Rational(exponent - k, k + 1) * inv_c;
    }
    return {center, std::move(out)};
}

TruncatedSeries series_linear_product(const Rational& constant, std::span<const LinearFactor> factors,
                                      const Rational& center, int order)
{
    require(order >= 0, "series order must be non-negative");
    const auto K = static_cast<std::size_t>(order);

    // Common denominator of the center and all roots: c_i = center - r_i = a_i / L.
    BigInt L = center.den();
    for (const auto& f : factors) {
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), f.root.den().get_mpz_t());
    }
    std::vector<BigInt> a;
    std::vector<long> e;
    a.reserve(factors.size());
    e.reserve(factors.size());
    BigInt Q = 1;
    BigInt c0_num = constant.num();
    BigInt c0_den = constant.den();
    for (const auto& f : factors) {
        if (f.exponent == 0) {
            continue;
        }
        const Rational shifted = (center - f.root) * Rational(L);
        if (shifted.is_zero()) {
            throw PreconditionError("series_linear_product: a root coincides with the expansion center");
        }
        BigInt ai = shifted.num();
        const BigInt p = pow(BigInt(abs(ai)), static_cast<unsigned long>(std::labs(f.exponent)));
        if (f.exponent > 0) {
            c0_num *= p;
            if (ai < 0 && (f.exponent & 1)) {
                c0_num = -c0_num;
            }
        } else {
            c0_den *= p;
            if (ai < 0 && (f.exponent & 1)) {
                c0_num = -c0_num;
            }
        }
        BigInt abs_ai = abs(ai);
        mpz_lcm(Q.get_mpz_t(), Q.get_mpz_t(), abs_ai.get_mpz_t());
        a.push_back(std::move(ai));
        e.push_back(f.exponent);
    }
    long total_exponent = 0;
    for (long ei : e) {
        total_exponent += ei;
    }
    // L^(-sum e) from c_i = a_i / L.
    if (total_exponent > 0) {
        c0_den *= pow(L, static_cast<unsigned long>(total_exponent));
    } else if (total_exponent < 0) {
        c0_num *= pow(L, static_cast<unsigned long>(-total_exponent));
    }
    const Rational c0(c0_num, c0_den);

    // b_k = (-1)^(k+1) sum_i e_i q_i^k with q_i = Q / a_i.
    std::vector<BigInt> q(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_divexact(q[i].get_mpz_t(), Q.get_mpz_t(), a[i].get_mpz_t());
    }
    std::vector<BigInt> b(K + 1);
    std::vector<BigInt> qpow(q);
    for (std::size_t k = 1; k <= K; ++k) {
        BigInt s = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (k > 1) {
                qpow[i] *= q[i];
            }
            if (e[i] > 0) {
                mpz_addmul_ui(s.get_mpz_t(), qpow[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
            } else {
                mpz_submul_ui(s.get_mpz_t(), qpow[i].get_mpz_t(), static_cast<unsigned long>(-e[i]));
            }
        }
        b[k] = (k % 2 == 1) ? s : BigInt(-s);
    }

    // F_k = k! E_k satisfies F_k = sum_j b_j (k-1)!/(k-j)! F_{k-j}; Horner in j.
    std::vector<BigInt> F(K + 1);
    F[0] = 1;
    for (std::size_t k = 1; k <= K; ++k) {
        BigInt acc = b[k] * F[0];
        for (std::size_t j = k - 1; j >= 1; --j) {
            acc *= static_cast<unsigned long>(k - j);
            mpz_addmul(acc.get_mpz_t(), b[j].get_mpz_t(), F[k - j].get_mpz_t());
        }
        F[k] = std::move(acc);
    }

    // coefficient_k = c0 * F_k / k! * (L/Q)^k
    std::vector<Rational> out(K + 1);
    BigInt fact = 1;
    BigInt Lk = 1;
    BigInt Qk = 1;
    for (std::size_t k = 0; k <= K; ++k) {
        if (k > 0) {
            fact *= static_cast<unsigned long>(k);
            Lk *= L;
            Qk *= Q;
        }
        out[k] = c0 * Rational(F[k] * Lk, fact * Qk);
    }
    return {center, std::move(out)};
}

} // namespace zetaforms
