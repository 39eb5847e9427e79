#pragma once

#include <vector>

#include "zetaforms/rational.hpp"
#include "zetaforms/real.hpp"

namespace zetaforms {

// Even-index Bernoulli numbers B_2, B_4, ..., B_{2count}, exact.
std::vector<Rational> bernoulli_even(int count);

// zeta(s) for integer s >= 2, relative error below 2^-prec.
Real zeta_int(long s, const PrecisionContext& ctx);
// zeta(s) for s in [s_min, s_max]; entry i holds zeta(s_min + i). The
// expensive part of the acceleration is shared between all s.
std::vector<Real> zeta_int_range(long s_min, long s_max, const PrecisionContext& ctx);

// Principal log Gamma off the cut (-inf, 0]. Reuse one evaluator for many
// points at the same precision; construction precomputes the Stirling table.
class LogGammaEvaluator {
public:
    explicit LogGammaEvaluator(const PrecisionContext& ctx);

    Complex operator()(const Complex& z) const;
    const PrecisionContext& context() const noexcept { return ctx_; }

private:
    PrecisionContext ctx_;
    long work_;
    long shift_radius_;
    // B_{2k} / (2k (2k-1)) at working precision.
    std::vector<Real> stirling_;
    Real half_log_2pi_;
};

Complex log_gamma(const Complex& z, const PrecisionContext& ctx);
Real log_gamma(const Real& x, const PrecisionContext& ctx);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
Real digamma(const Rational& x, const PrecisionContext& ctx);

} // namespace zetaforms
