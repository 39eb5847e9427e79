#pragma once

#include <span>
#include <string>
#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

// Power series sum_{i<=K} c_i u^i in u = t - center, truncated at order K.
// Operations never change K implicitly; mixing orders or centers is an error.
class TruncatedSeries {
public:
    TruncatedSeries(Rational center, std::vector<Rational> coeffs);
    static TruncatedSeries constant(const Rational& center, const Rational& value, int order);

    const Rational& center() const noexcept { return center_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    Rational center_;
    std::vector<Rational> coeffs_;
};

// A factor (t - root)^exponent.
struct LinearFactor {
    Rational root;
    long exponent = 1;
};

TruncatedSeries series_linear_factor(const Rational& root, const Rational& center, int order);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& s);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Requires a[0] != 0.
TruncatedSeries series_inv(const TruncatedSeries& a);
TruncatedSeries series_pow(const TruncatedSeries& a, long exponent);

// (t - root)^exponent about `center` by the generalized binomial theorem.
TruncatedSeries series_linear_power(const Rational& root, long exponent, const Rational& center, int order);

// constant * prod_i (t - root_i)^{e_i} about `center`; no root may equal the
// center. The logarithm of the product is a sum of power sums of the shifted
// roots, and the exponential is taken in integers after rescaling u so every
// log coefficient is an integer over k. Exact.
TruncatedSeries series_linear_product(const Rational& constant, std::span<const LinearFactor> factors,
                                      const Rational& center, int order);

} // namespace zetaforms
