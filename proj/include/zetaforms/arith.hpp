#pragma once

#include <map>
#include <utility>
#include <vector>

#include "zetaforms/rational.hpp"
#include "zetaforms/real.hpp"

namespace zetaforms {

std::vector<long> primes_upto(long n);

// lcm(1, ..., n) = prod_{p <= n} p^{floor(log_p n)}; 1 for n <= 1.
BigInt lcm_upto(long n);

// rho(x, y) = floor(2x+2y) + floor(4x-2y) - 6 floor(y) - 6 floor(x-y)
long rho(const Rational& x, const Rational& y);
// The same quantity as 6{y} + 6{x-y} - {2x+2y} - {4x-2y}.
long rho_fractional(const Rational& x, const Rational& y);

// min over y of rho(x, y), by table lookup on {x}.
long rho0(const Rational& x);
// Same minimum by enumerating every breakpoint of rho(x, .) in [0, 1) and the
// midpoint of every piece between them.
long rho0_bruteforce(const Rational& x);

struct DenominatorData {
    long n = 0;
    BigInt d_n;
    BigInt phi_n;
    std::map<long, long> phi_factorization;
};

// Primes p with 2 sqrt(n) < p <= n (tested as p^2 > 4n), exponent rho0(n/p).
std::map<long, long> phi_factorization(long n);
BigInt phi(long n);
DenominatorData denominators(long n);

// v_p(n!) = sum_l floor(n / p^l)
long legendre_valuation(long n, long p);

// (2n+2m)! (4n-2m)! / (m!^6 (n-m)!^6) is an integer divisible by Phi_n for
// every m in [0, n].
bool factorial_quotient_check(long n);

// Integral of rho0 against d(psi(t) + 1/t) over [0, 1].
Real delta_integral(const PrecisionContext& ctx);

// (n, log(Phi_n)/n) for n = 1..N.
std::vector<std::pair<long, double>> delta_empirical(long N);

} // namespace zetaforms
