#pragma once

#include <map>
#include <vector>

#include "zetaforms/forms.hpp"
#include "zetaforms/rational.hpp"
#include "zetaforms/real.hpp"

namespace zetaforms {

// phi_l(t) = phi_0(t) + 2 l i pi t with
// phi_0(t) = (A+3) t log t + (6t+12) log(2t+4) + (6-6t) log(2-2t) - (A+3)(t+1) log(t+1),
// analytic off (-inf, 0] and [1, +inf).
struct PhaseFunction {
    long A = 68;
    int ell = 0;
};

// derivative in {0, 1, 2}; the second derivative does not depend on ell.
Complex phase_eval(const PhaseFunction& pf, const Complex& t, int derivative, const PrecisionContext& ctx);

// g(t) = (2t+1) (2t+4)^{3/2} (2-2t)^{3/2} / (t^{(A+3)/2} (t+1)^{(A+3)/2})
Complex amplitude_g(long A, const Complex& t, const PrecisionContext& ctx);
// g(t) (t+1)^{(A+3)/2} (2-2t)^3 / (t^{(A+3)/2} (2t+4)^3)
Complex amplitude_g_hat(long A, const Complex& t, const PrecisionContext& ctx);

struct SaddlePoint {
    long A = 68;
    int ell = 0;
    Complex t;
    Complex f_eff;  // exp(phi_l(t)) = f(t) e^{2 l i pi t}
    Complex g;
    Complex g_hat;
    Complex phi2;   // phi_0''(t)
    Real residual;  // |phi_l'(t)|
    int newton_steps = 0;
    long prec_bits = 0;
};

// Newton iteration on phi_l' from the seeds 0.9991, 0.9995-0.0007i,
// 1.0004-0.0007i (l = 0, 1, 2); l < 0 by conjugation. If Newton leaves the
// domain or stalls, a grid over a disk of radius 0.02 about the seed supplies
// a new start.
SaddlePoint find_saddle(long A, int ell, const PrecisionContext& ctx);

// Coefficients u_l of cos(x)^4 = sum_{l=-2}^{2} u_l e^{2ilx}.
std::map<int, Rational> fourier_weights();

// Ratio of a direct quadrature of amp(t) exp(N (phi_l(t) - phi_l(t_l))) along
// the steepest-descent segment through the saddle, oriented with increasing
// imaginary part, to i amp(t_l) sqrt(2 pi / (N phi''(t_l))) with the principal
// square root. Close to +1 when the principal branch is the right one.
Complex branch_check(const SaddlePoint& sp, Which which, double N, const PrecisionContext& ctx);

// The five saddles with validated square-root branch signs.
struct AsymptoticModel {
    long A = 68;
    std::map<int, SaddlePoint> saddles;
    std::map<int, int> branch_sign_plain;
    std::map<int, int> branch_sign_hat;
    PrecisionContext ctx;
};

AsymptoticModel build_model(long A, const PrecisionContext& ctx);

// Contribution i amp(t_l) sqrt(2 pi/(n phi''(t_l))) exp(n phi_l(t_l)) of one saddle.
Complex saddle_contribution(const AsymptoticModel& model, int ell, long n, Which which);

// 2i (2 pi)^{(A-9)/2} n^{-(A+9)/2} sum_l u_l J_l, with an extra factor -1 for hat.
Complex predict_S(const AsymptoticModel& model, long n, Which which);
Complex predict_S(long A, long n, const PrecisionContext& ctx, Which which);

// -log |f_eff(t_2)|
Real kappa(const AsymptoticModel& model);
Real kappa(long A, const PrecisionContext& ctx);

// (A+2) - kappa - 3 delta; for A = 68 this is 70 - kappa - 3 delta.
Real final_exponent(const AsymptoticModel& model, const PrecisionContext& ctx);
Real final_exponent(const PrecisionContext& ctx);

// Even n in [2, n_max] where |sum_l u_l J_l|, normalised by |f_eff(t_2)|^n
// n^{-1/2}, reaches at least half of its running maximum. Diagnostic only.
std::vector<long> sigma_selector(const AsymptoticModel& model, long n_max);

} // namespace zetaforms
