#pragma once

#include <string>

#include <json.hpp>

#include "zetaforms/arith.hpp"
#include "zetaforms/contour.hpp"
#include "zetaforms/forms.hpp"
#include "zetaforms/rfunc.hpp"
#include "zetaforms/saddle.hpp"

namespace zetaforms {

// Every number is written as a string: rationals as "num/den", integers in
// decimal, reals in scientific notation with all digits their precision
// justifies. Objects carrying reals also carry "prec_bits".
using Json = nlohmann::ordered_json;

std::string real_string(const Real& x, int prec_bits);
Json complex_json(const Complex& z, int prec_bits);

// {"n", "A", "p"}; p[j-1][m] is the coefficient of (t+m)^{-j}.
Json to_json(const PartialFractionTable& t);
Json to_json(const LinearForm& f);
Json to_json(const EliminationForm& e);
Json to_json(const IntegerForm& f);
Json to_json(const DenominatorData& d);
Json to_json(const SaddlePoint& s, int prec_bits);
Json to_json(const ContourReport& r, int prec_bits);

// Saddle records for l = -2..2 plus kappa, delta and the final exponent.
Json asymptotic_report(const AsymptoticModel& model, const PrecisionContext& ctx);

// Flat "path,value" rows, header "key,value".
std::string to_csv(const Json& j);
// "path = value" lines.
std::string to_text(const Json& j);

} // namespace zetaforms
