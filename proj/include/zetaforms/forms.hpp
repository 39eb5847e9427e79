#pragma once

#include <map>
#include <string>

#include "zetaforms/arith.hpp"
#include "zetaforms/rational.hpp"
#include "zetaforms/real.hpp"
#include "zetaforms/rfunc.hpp"

namespace zetaforms {

enum class Which { plain, hat };

const char* to_string(Which w) noexcept;

// S = q0 + sum_j q[j] zeta(j) and S_hat = q0_hat + sum_j q[j] (2^j - 1) zeta(j),
// j odd in [5, A+1].
struct LinearForm {
    Parameters params;
    Rational q0;
    Rational q0_hat;
    std::map<long, Rational> q;
    long omega = 0;
};

// (2^m - 1) S - S_hat = c0 + sum_{j != m} c[j] zeta(j).
struct EliminationForm {
    Parameters params;
    long m = 0;
    Rational c0;
    std::map<long, Rational> c;
};

// The elimination form multiplied by Phi_n^{-3} d_n^{A+2}; every entry is an
// integer by verification, not by rounding.
struct IntegerForm {
    Parameters params;
    long m = 0;
    BigInt Q0;
    std::map<long, BigInt> Q;
    Rational scale;
    std::string scale_description;
};

LinearForm q_coefficients(const PartialFractionTable& table);
// q0_hat through the block sums over m <= omega and m > omega.
Rational q0_hat_alt(const PartialFractionTable& table);

// Outcome of the direct summation over k (or k - 1/2).
struct DirectSum {
    Real value;
    long terms = 0;
    double tail_log2 = 0.0;
    long working_bits = 0;
};

DirectSum S_direct_detailed(const Parameters& params, const PrecisionContext& ctx, Which which);
Real S_direct(const Parameters& params, const PrecisionContext& ctx, Which which);
Real S_via_zeta(const LinearForm& form, const PrecisionContext& ctx, Which which);

EliminationForm eliminate(const LinearForm& form, long m);
// c0 + sum_j c[j] zeta(j)
Real elimination_value(const EliminationForm& ef, const PrecisionContext& ctx);

IntegerForm integerize(const EliminationForm& ef, const DenominatorData& denoms);

// Phi_n^{-3} d_n^{A+2} x is an integer for x = q0, q0_hat and every q[j].
bool linear_form_integral(const LinearForm& form, const DenominatorData& denoms);
// Phi_n^{-3} d_n^{A-j} p[j][m] is an integer for all j, m.
bool table_integral(const PartialFractionTable& table, const DenominatorData& denoms);

} // namespace zetaforms
