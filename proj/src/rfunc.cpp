#include "zetaforms/rfunc.hpp"

#include "zetaforms/errors.hpp"
#include "zetaforms/parallel.hpp"

namespace zetaforms {

void Parameters::validate() const
{
    if (A < 15) {
        throw PreconditionError("A must be at least 15 (got " + std::to_string(A) + ")");
    }
    if (n < 0) {
        throw PreconditionError("n must be non-negative (got " + std::to_string(n) + ")");
    }
    if (degree() > -2) {
        throw PreconditionError("degree of R must be at most -2");
    }
}

void Parameters::validate_even() const
{
    validate();
    if (A < 16 || !even_even()) {
        throw PreconditionError("linear forms require A >= 16 and both A and n even (got n=" + std::to_string(n)
                                + ", A=" + std::to_string(A) + ")");
    }
}

FactoredRational::FactoredRational(Rational constant, std::vector<LinearFactor> factors, AffineFactor extra)
    : constant_(std::move(constant)), factors_(std::move(factors)), extra_(std::move(extra))
{
    require(!extra_.slope.is_zero(), "affine factor must have nonzero slope");
    monic_ = constant_ * extra_.slope;
    for (const auto& f : factors_) {
        merged_[f.root] += f.exponent;
    }
    merged_[-extra_.intercept / extra_.slope] += 1;
    std::erase_if(merged_, [](const auto& kv) { return kv.second == 0; });
}

long FactoredRational::degree() const
{
    long d = 1;
    for (const auto& f : factors_) {
        d += f.exponent;
    }
    return d;
}

Rational FactoredRational::evaluate(const Rational& t) const
{
    for (const auto& [root, e] : merged_) {
        if (e < 0 && root == t) {
            throw PoleError("evaluation at a pole of order " + std::to_string(-e) + " at t = " + root.to_string(),
                            root.to_string());
        }
    }
    Rational value = monic_;
    for (const auto& [root, e] : merged_) {
        const Rational d = t - root;
        if (d.is_zero()) {
            return 0;
        }
        value *= d.pow(e);
    }
    return value;
}

TruncatedSeries FactoredRational::expand_times_power(const Rational& center, long extra_power, int order) const
{
    require(order >= 0, "series order must be non-negative");
    long at_center = extra_power;
    std::vector<LinearFactor> others;
    others.reserve(merged_.size());
    for (const auto& [root, e] : merged_) {
        if (root == center) {
            at_center += e;
        } else {
            others.push_back({root, e});
        }
    }
    if (at_center < 0) {
        throw PoleError("expansion center " + center.to_string() + " is a pole of order " + std::to_string(-at_center),
                        center.to_string());
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
    if (at_center <= order) {
        const auto inner = series_linear_product(monic_, others, center, order - static_cast<int>(at_center));
        for (std::size_t i = 0; i < inner.coeffs().size(); ++i) {
            coeffs[i + static_cast<std::size_t>(at_center)] = inner.coeffs()[i];
        }
    }
    return {center, std::move(coeffs)};
}

TruncatedSeries FactoredRational::expand(const Rational& center, int order) const
{
    return expand_times_power(center, 0, order);
}

Rational FactoredRational::second_derivative(const Rational& t) const
{
    return expand(t, 2)[2] * Rational(2);
}

FactoredRational build_R(const Parameters& params, Construction c)
{
    params.validate();
    const long n = params.n;
    const long A = params.A;
    Rational constant(pow(factorial(static_cast<unsigned long>(n)), static_cast<unsigned long>(A - 15)));
    std::vector<LinearFactor> fs;
    if (c == Construction::shifted_pochhammers) {
        constant *= Rational(pow(BigInt(2), static_cast<unsigned long>(18 * n)));
        for (long i = 0; i < n; ++i) {
            fs.push_back({Rational(n - i), 3});      // (t-n)_n
        }
        for (long i = 0; i < n; ++i) {
            fs.push_back({Rational(-n - 1 - i), 3}); // (t+n+1)_n
        }
        for (long i = 0; i < 3 * n; ++i) {
            fs.push_back({Rational(2 * n - 1 - 2 * i, 2), 3}); // (t-n+1/2)_{3n}
        }
        for (long i = 0; i <= n; ++i) {
            fs.push_back({Rational(-i), -A});        // (t)_{n+1}
        }
    } else {
        // (2t-2n+i) = 2 (t - (n - i/2)); the 2^{3(6n+1)} meets the 2^{-3}.
        constant *= Rational(pow(BigInt(2), static_cast<unsigned long>(18 * n)));
        for (long i = 0; i <= 6 * n; ++i) {
            fs.push_back({Rational(2 * n - i, 2), 3});
        }
        for (long i = 0; i <= n; ++i) {
            fs.push_back({Rational(-i), -(A + 3)});
        }
    }
    return {constant, std::move(fs), AffineFactor{Rational(2), Rational(n)}};
}

PartialFractionTable::PartialFractionTable(Parameters params, std::vector<std::vector<Rational>> p)
    : params_(params), p_(std::move(p))
{
    require(p_.size() == static_cast<std::size_t>(params_.A) + 1, "partial fraction table: wrong row count");
    for (const auto& row : p_) {
        require(row.size() == static_cast<std::size_t>(params_.n) + 1, "partial fraction table: wrong column count");
    }
}

const Rational& PartialFractionTable::at(long j, long m) const
{
    if (j < 1 || j > params_.A || m < 0 || m > params_.n) {
        throw PreconditionError("partial fraction index out of range: j=" + std::to_string(j) + ", m=" + std::to_string(m));
    }
    return p_[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
}

Rational& PartialFractionTable::at(long j, long m)
{
    return const_cast<Rational&>(static_cast<const PartialFractionTable&>(*this).at(j, m));
}

Rational PartialFractionTable::evaluate(const Rational& t) const
{
    Rational total;
    for (long m = 0; m <= params_.n; ++m) {
        const Rational shifted = t + Rational(m);
        if (shifted.is_zero()) {
            throw PoleError("evaluation at a pole t = " + Rational(-m).to_string(), Rational(-m).to_string());
        }
        const Rational x = Rational(1) / shifted;
        Rational acc;
        for (long j = params_.A; j >= 1; --j) {
            acc += at(j, m);
            acc *= x;
        }
        total += acc;
    }
    return total;
}

PartialFractionTable partial_fractions(const FactoredRational& fr, const Parameters& params)
{
    params.validate();
    const long n = params.n;
    const long A = params.A;
    if (fr.degree() > -1) {
        throw PreconditionError("partial_fractions: function has a polynomial part");
    }
    for (const auto& [root, e] : fr.merged()) {
        if (e >= 0) {
            continue;
        }
        if (!root.is_integer() || root > Rational(0) || root < Rational(-n) || -e > A) {
            throw PreconditionError("partial_fractions: pole at " + root.to_string()
                                    + " outside {0,...,-n} or of order above A");
        }
    }

    std::vector<std::vector<Rational>> p(static_cast<std::size_t>(A) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    std::vector<TruncatedSeries> expansions(static_cast<std::size_t>(n) + 1,
                                            TruncatedSeries::constant(0, 0, 0));
    // The factor (t+m)^A cancels against the pole at -m on exponents before
    // any series is formed, so no inversion of a vanishing series occurs.
    parallel_for(static_cast<std::size_t>(n) + 1, [&](std::size_t m) {
        expansions[m] = fr.expand_times_power(Rational(-static_cast<long>(m)), A, static_cast<int>(A));
    });
    for (long m = 0; m <= n; ++m) {
        const auto& s = expansions[static_cast<std::size_t>(m)];
        if (s.order() != A) {
            throw ConsistencyError("partial_fractions: expansion has wrong order");
        }
        for (long j = 1; j <= A; ++j) {
            p[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = s[static_cast<std::size_t>(A - j)];
        }
    }
    return {params, std::move(p)};
}

bool verify_reconstruction(const PartialFractionTable& table, const FactoredRational& fr,
                           std::span<const Rational> points)
{
    for (const auto& t : points) {
        if (table.evaluate(t) != fr.evaluate(t)) {
            return false;
        }
    }
    return true;
}

std::vector<Rational> certifying_points(const Parameters& params)
{
    params.validate();
    // Over the common denominator prod_m (t+m)^A the difference of both sides
    // has numerator degree below A(n+1).
    const long count = params.A * (params.n + 1) + std::labs(params.degree()) + 1;
    std::vector<Rational> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) {
        // 7k+3 is never divisible by 7, so no point is an integer.
        pts.emplace_back(k % 2 == 0 ? 7 * k + 3 : -(7 * k + 3), 7);
    }
    return pts;
}

bool vanishing_check(const FactoredRational& fr, long n)
{
    const auto& mult = fr.merged();
    auto order_at = [&](const Rational& r) {
        const auto it = mult.find(r);
        return it == mult.end() ? 0L : it->second;
    };
    for (long k = 1; k <= n; ++k) {
        if (order_at(Rational(k)) < 3 || order_at(Rational(2 * k - 1, 2)) < 3) {
            return false;
        }
    }
    return true;
}

bool residue_at_infinity_vanishes(const PartialFractionTable& t)
{
    Rational s;
    for (long m = 0; m <= t.params().n; ++m) {
        s += t.at(1, m);
    }
    return s.is_zero();
}

bool even_row_sums_vanish(const PartialFractionTable& t)
{
    for (long j = 2; j <= t.params().A; j += 2) {
        Rational s;
        for (long m = 0; m <= t.params().n; ++m) {
            s += t.at(j, m);
        }
        if (!s.is_zero()) {
            return false;
        }
    }
    return true;
}

bool reflection_symmetric(const PartialFractionTable& t)
{
    const long n = t.params().n;
    for (long j = 1; j <= t.params().A; ++j) {
        for (long m = 0; m <= n; ++m) {
            const Rational mirrored = j % 2 == 1 ? t.at(j, n - m) : -t.at(j, n - m);
            if (t.at(j, m) != mirrored) {
                return false;
            }
        }
    }
    return true;
}

} // namespace zetaforms
