#pragma once

#include <string>

#include "zetaforms/forms.hpp"
#include "zetaforms/rational.hpp"
#include "zetaforms/real.hpp"
#include "zetaforms/rfunc.hpp"

namespace zetaforms {

// Vertical line Re t = c, truncated to |Im t| <= Y. Y = 0 lets contour_S pick
// and extend the height from the sampled decay of the integrand.
struct ContourSpec {
    Rational c{3, 4};
    double Y = 0.0;
    // Target for both the quadrature and the tail bound, relative to |result|.
    double rel_tol = 1e-30;
};

// Gamma-quotient integrand along the line, n!^{A-15} folded in:
//   plain: (2t+n) G(t)^{A+3} G(2t+4n+1)^3 G(2n-2t+1)^3 / G(t+n+1)^{A+3} cos(pi t)^4
//   hat:   (2t+n-1) G(t-1/2)^{A+3} G(2t+4n)^3 G(2n-2t+2)^3 / G(t+n+1/2)^{A+3} cos(pi t)^4
// Throws PoleError within 2^{-prec/4} of a pole of any Gamma factor.
Complex contour_integrand(const Parameters& params, const Complex& t, Which which, const PrecisionContext& ctx);

struct ContourResult {
    Complex value;
    Real tail_bound;      // absolute, both tails together
    Real quad_error;      // |T_h - T_{2h}| at the final step
    double Y = 0.0;
    double step = 0.0;
    long points = 0;
};

// S = -(1/pi) int F(c+iy) dy and S_hat = (1/pi) int G(c+iy) dy over the real
// line, i.e. the line integral from c+i inf down to c-i inf with prefactor
// +-1/(i pi). Nested trapezoid halving; geometric majorant for |y| > Y.
ContourResult contour_S(const Parameters& params, const ContourSpec& spec, const PrecisionContext& ctx, Which which);

struct ContourReport {
    Parameters params;
    Which which = Which::plain;
    Complex contour_value;
    Real series_value;
    Real abs_diff;
    Real tail_bound;
    long quadrature_points = 0;
    int series_prec_bits = 0;
};

// contour_S next to the direct series value.
ContourReport contour_verify(const Parameters& params, const ContourSpec& spec, const PrecisionContext& ctx, Which which);

} // namespace zetaforms
