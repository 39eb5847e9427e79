#include "zetaforms/arith.hpp"

#include <algorithm>
#include <cmath>

#include "zetaforms/errors.hpp"
#include "zetaforms/special.hpp"

namespace zetaforms {

std::vector<long> primes_upto(long n)
{
    std::vector<long> out;
    if (n < 2) {
        return out;
    }
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (long p = 2; p <= n; ++p) {
        if (composite[static_cast<std::size_t>(p)]) {
            continue;
        }
        out.push_back(p);
        for (long q = p * p; q <= n; q += p) {
            composite[static_cast<std::size_t>(q)] = true;
        }
    }
    return out;
}

BigInt lcm_upto(long n)
{
    require(n >= 0, "lcm_upto: n must be non-negative");
    BigInt d = 1;
    for (long p : primes_upto(n)) {
        long pk = p;
        while (pk <= n / p) {
            pk *= p;
        }
        d *= static_cast<unsigned long>(pk);
    }
    return d;
}

long rho(const Rational& x, const Rational& y)
{
    const Rational two(2), four(4);
    const BigInt v = (two * x + two * y).floor() + (four * x - two * y).floor() - 6 * y.floor() - 6 * (x - y).floor();
    return v.get_si();
}

long rho_fractional(const Rational& x, const Rational& y)
{
    const Rational two(2), four(4), six(6);
    const Rational v = six * y.frac() + six * (x - y).frac() - (two * x + two * y).frac() - (four * x - two * y).frac();
    if (!v.is_integer()) {
        throw ConsistencyError("rho_fractional: non-integer value");
    }
    return v.num().get_si();
}

long rho0(const Rational& x)
{
    const Rational f = x.frac();
    if (f < Rational(1, 3)) {
        return 0;
    }
    if (f < Rational(1, 2)) {
        return 1;
    }
    if (f < Rational(2, 3)) {
        return 2;
    }
    if (f < Rational(5, 6)) {
        return 3;
    }
    return 4;
}

namespace {

// rho0(n/p) for positive integers, from r = n mod p.
long rho0_ratio(long n, long p)
{
    const long r = n % p;
    if (3 * r < p) {
        return 0;
    }
    if (2 * r < p) {
        return 1;
    }
    if (3 * r < 2 * p) {
        return 2;
    }
    if (6 * r < 5 * p) {
        return 3;
    }
    return 4;
}

} // namespace

long rho0_bruteforce(const Rational& x)
{
    // rho(x, .) is 1-periodic and jumps only where y, x-y, 2x+2y or 4x-2y is
    // an integer.
    const Rational half(1, 2), two(2);
    std::vector<Rational> bp{Rational(0), x.frac(), (-x).frac(), (-x + half).frac(), (two * x).frac(),
                             (two * x + half).frac()};
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    long best = rho(x, bp.front());
    for (std::size_t i = 0; i < bp.size(); ++i) {
        const Rational next = i + 1 < bp.size() ? bp[i + 1] : Rational(1);
        best = std::min({best, rho(x, bp[i]), rho(x, (bp[i] + next) * half)});
    }
    return best;
}

std::map<long, long> phi_factorization(long n)
{
    require(n >= 0, "phi: n must be non-negative");
    std::map<long, long> f;
    for (long p : primes_upto(n)) {
        if (p * p <= 4 * n) {
            continue;
        }
        const long e = rho0_ratio(n, p);
        if (e > 0) {
            f[p] = e;
        }
    }
    return f;
}

BigInt phi(long n)
{
    BigInt v = 1;
    for (const auto& [p, e] : phi_factorization(n)) {
        v *= pow(BigInt(p), static_cast<unsigned long>(e));
    }
    return v;
}

DenominatorData denominators(long n)
{
    DenominatorData d;
    d.n = n;
    d.d_n = lcm_upto(n);
    d.phi_factorization = phi_factorization(n);
    d.phi_n = 1;
    for (const auto& [p, e] : d.phi_factorization) {
        d.phi_n *= pow(BigInt(p), static_cast<unsigned long>(e));
    }
    return d;
}

long legendre_valuation(long n, long p)
{
    require(n >= 0 && p >= 2, "legendre_valuation: need n >= 0, p >= 2");
    long v = 0;
    for (long q = n / p; q > 0; q /= p) {
        v += q;
    }
    return v;
}

bool factorial_quotient_check(long n)
{
    require(n >= 0, "factorial_quotient_check: n must be non-negative");
    std::vector<BigInt> fact(static_cast<std::size_t>(4 * n) + 1);
    fact[0] = 1;
    for (std::size_t i = 1; i < fact.size(); ++i) {
        fact[i] = fact[i - 1] * static_cast<unsigned long>(i);
    }
    const BigInt ph = phi(n);
    for (long m = 0; m <= n; ++m) {
        const BigInt num = fact[static_cast<std::size_t>(2 * n + 2 * m)] * fact[static_cast<std::size_t>(4 * n - 2 * m)];
        BigInt den = pow(fact[static_cast<std::size_t>(m)] * fact[static_cast<std::size_t>(n - m)], 6);
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
            return false;
        }
        BigInt q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (!mpz_divisible_p(q.get_mpz_t(), ph.get_mpz_t())) {
            return false;
        }
    }
    return true;
}

Real delta_integral(const PrecisionContext& ctx)
{
    // rho0 is the step function 0,1,2,3,4 on [0,1/3), [1/3,1/2), [1/2,2/3),
    // [2/3,5/6), [5/6,1), so the integral is sum_i c_i (W(b_i) - W(a_i)) with
    // W(t) = psi(t) + 1/t = psi(t+1). The piece with c = 0 contributes nothing,
    // and W(1) = psi(2) = 1 - gamma exactly.
    const PrecisionContext inner = ctx.with_prec(ctx.working_bits());
    auto W = [&](const Rational& t) { return digamma(t + Rational(1), inner); };
    const Rational cuts[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(5, 6), Rational(1)};
    Real total(inner.prec_bits);
    for (int i = 0; i + 1 < 5; ++i) {
        total += (W(cuts[i + 1]) - W(cuts[i])) * static_cast<long>(i + 1);
    }
    return total.rounded(ctx.prec_bits);
}

std::vector<std::pair<long, double>> delta_empirical(long N)
{
    require(N >= 1, "delta_empirical: N must be positive");
    const auto primes = primes_upto(N);
    std::vector<double> logs;
    logs.reserve(primes.size());
    for (long p : primes) {
        logs.push_back(std::log(static_cast<double>(p)));
    }
    std::vector<std::pair<long, double>> out;
    out.reserve(static_cast<std::size_t>(N));
    for (long n = 1; n <= N; ++n) {
        double s = 0.0;
        // primes in (2 sqrt n, n]
        auto lo = std::upper_bound(primes.begin(), primes.end(), 0L, [n](long, long p) { return p * p > 4 * n; });
        for (auto it = lo; it != primes.end() && *it <= n; ++it) {
            s += static_cast<double>(rho0_ratio(n, *it)) * logs[static_cast<std::size_t>(it - primes.begin())];
        }
        out.emplace_back(n, s / static_cast<double>(n));
    }
    return out;
}

} // namespace zetaforms
