#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "zetaforms/rational.hpp"
#include "zetaforms/series.hpp"

namespace zetaforms {

struct Parameters {
    long n = 0;
    long A = 68;

    // A >= 15, n >= 0, and the degree of R at most -2.
    void validate() const;
    // Hypotheses of the linear-form construction: A >= 16, A and n even.
    void validate_even() const;
    bool even_even() const noexcept { return n % 2 == 0 && A % 2 == 0; }
    long degree() const noexcept { return (15 - A) * n - A + 1; }

    friend bool operator==(const Parameters&, const Parameters&) = default;
};

// slope * t + intercept
struct AffineFactor {
    Rational slope;
    Rational intercept;
};

// constant * extra(t) * prod_i (t - root_i)^{e_i}. Roots may repeat across
// entries; merged() collects them.
class FactoredRational {
public:
    FactoredRational(Rational constant, std::vector<LinearFactor> factors, AffineFactor extra);

    const Rational& constant() const noexcept { return constant_; }
    const std::vector<LinearFactor>& factors() const noexcept { return factors_; }
    const AffineFactor& extra() const noexcept { return extra_; }

    long degree() const;
    // Constant with the affine factor's slope folded in, and net exponent per
    // root (the affine root included); zero exponents dropped.
    const Rational& monic_constant() const noexcept { return monic_; }
    const std::map<Rational, long>& merged() const noexcept { return merged_; }

    // Exact value; throws PoleError naming the root when t is a pole.
    Rational evaluate(const Rational& t) const;

    // Series of the function about `center` to order K. A root at the center
    // with positive net exponent is handled exactly; a pole there throws.
    TruncatedSeries expand(const Rational& center, int order) const;
    // Same, for the function multiplied by (t - center)^extra_power.
    TruncatedSeries expand_times_power(const Rational& center, long extra_power, int order) const;

    // R''(t) at a non-pole rational point, exactly.
    Rational second_derivative(const Rational& t) const;

private:
    Rational constant_;
    std::vector<LinearFactor> factors_;
    AffineFactor extra_;
    Rational monic_;
    std::map<Rational, long> merged_;
};

enum class Construction {
    // n!^{A-15} 2^{18n} (2t+n) (t-n)_n^3 (t+n+1)_n^3 (t-n+1/2)_{3n}^3 / (t)_{n+1}^A
    shifted_pochhammers,
    // n!^{A-15} 2^{-3} (2t+n) (2t-2n)_{6n+1}^3 / (t)_{n+1}^{A+3}
    doubled_pochhammer,
};

FactoredRational build_R(const Parameters& params, Construction c = Construction::shifted_pochhammers);

// p[j][m] multiplies (t+m)^{-j}, 1 <= j <= A, 0 <= m <= n. Row 0 is unused.
class PartialFractionTable {
public:
    PartialFractionTable(Parameters params, std::vector<std::vector<Rational>> p);

    const Parameters& params() const noexcept { return params_; }
    const Rational& at(long j, long m) const;
    Rational& at(long j, long m);

    // Sum over all (j, m) of p[j][m] / (t+m)^j; throws PoleError at t = -m.
    Rational evaluate(const Rational& t) const;

private:
    Parameters params_;
    std::vector<std::vector<Rational>> p_;
};

PartialFractionTable partial_fractions(const FactoredRational& fr, const Parameters& params);
inline PartialFractionTable partial_fractions(const Parameters& params)
{
    return partial_fractions(build_R(params), params);
}

bool verify_reconstruction(const PartialFractionTable& table, const FactoredRational& fr,
                           std::span<const Rational> points);
// Distinct non-pole points, more than the numerator degree of the difference
// of both sides over the common denominator prod_m (t+m)^A.
std::vector<Rational> certifying_points(const Parameters& params);

// R has a root of order >= 3 at every k and k - 1/2, k = 1..n.
bool vanishing_check(const FactoredRational& fr, long n);

// Invariant checks on a table; each returns true when the identity holds.
bool residue_at_infinity_vanishes(const PartialFractionTable& t);
bool even_row_sums_vanish(const PartialFractionTable& t);
bool reflection_symmetric(const PartialFractionTable& t);

} // namespace zetaforms
