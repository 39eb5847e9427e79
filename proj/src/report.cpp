#include "zetaforms/report.hpp"

#include <sstream>

namespace zetaforms {

std::string real_string(const Real& x, int prec_bits)
{
    return x.rounded(prec_bits).to_string();
}

Json complex_json(const Complex& z, int prec_bits)
{
    return Json{{"re", real_string(z.re(), prec_bits)}, {"im", real_string(z.im(), prec_bits)}};
}

Json to_json(const PartialFractionTable& t)
{
    const Parameters& p = t.params();
    Json rows = Json::array();
    for (long j = 1; j <= p.A; ++j) {
        Json row = Json::array();
        for (long m = 0; m <= p.n; ++m) {
            row.push_back(t.at(j, m).to_string());
        }
        rows.push_back(std::move(row));
    }
    return Json{{"n", std::to_string(p.n)}, {"A", std::to_string(p.A)}, {"p", std::move(rows)}};
}

Json to_json(const LinearForm& f)
{
    Json q = Json::object();
    for (const auto& [j, v] : f.q) {
        q[std::to_string(j)] = v.to_string();
    }
    return Json{{"n", std::to_string(f.params.n)}, {"A", std::to_string(f.params.A)}, {"omega", std::to_string(f.omega)}, {"q0", f.q0.to_string()},
                {"q0_hat", f.q0_hat.to_string()}, {"q", std::move(q)}};
}

Json to_json(const EliminationForm& e)
{
    Json c = Json::object();
    for (const auto& [j, v] : e.c) {
        c[std::to_string(j)] = v.to_string();
    }
    return Json{{"n", std::to_string(e.params.n)}, {"A", std::to_string(e.params.A)}, {"m", std::to_string(e.m)}, {"c0", e.c0.to_string()}, {"c", std::move(c)}};
}

Json to_json(const IntegerForm& f)
{
    Json q = Json::object();
    for (const auto& [j, v] : f.Q) {
        q[std::to_string(j)] = to_string(v);
    }
    return Json{{"n", std::to_string(f.params.n)},        {"A", std::to_string(f.params.A)}, {"m", std::to_string(f.m)}, {"scale", f.scale_description},
                {"scale_value", f.scale.to_string()}, {"Q0", to_string(f.Q0)}, {"Q", std::move(q)}};
}

Json to_json(const DenominatorData& d)
{
    Json fac = Json::object();
    for (const auto& [p, e] : d.phi_factorization) {
        fac[std::to_string(p)] = std::to_string(e);
    }
    return Json{{"n", std::to_string(d.n)}, {"d_n", to_string(d.d_n)}, {"phi_n", to_string(d.phi_n)}, {"phi_factorization", std::move(fac)}};
}

Json to_json(const SaddlePoint& s, int prec_bits)
{
    return Json{{"ell", std::to_string(s.ell)},
                {"t", complex_json(s.t, prec_bits)},
                {"f_eff", complex_json(s.f_eff, prec_bits)},
                {"g", complex_json(s.g, prec_bits)},
                {"g_hat", complex_json(s.g_hat, prec_bits)},
                {"phi2", complex_json(s.phi2, prec_bits)},
                {"residual", s.residual.to_string(6)},
                {"newton_steps", std::to_string(s.newton_steps)}};
}

Json to_json(const ContourReport& r, int prec_bits)
{
    return Json{{"n", std::to_string(r.params.n)},
                {"A", std::to_string(r.params.A)},
                {"which", to_string(r.which)},
                {"prec_bits", std::to_string(prec_bits)},
                {"contour_value", complex_json(r.contour_value, prec_bits)},
                {"series_value", real_string(r.series_value, r.series_prec_bits)},
                {"series_prec_bits", std::to_string(r.series_prec_bits)},
                {"abs_diff", r.abs_diff.to_string(6)},
                {"tail_bound", r.tail_bound.to_string(6)},
                {"quadrature_points", std::to_string(r.quadrature_points)}};
}

Json asymptotic_report(const AsymptoticModel& model, const PrecisionContext& ctx)
{
    Json saddles = Json::array();
    for (const auto& [ell, sp] : model.saddles) {
        Json rec = to_json(sp, ctx.prec_bits);
        rec["branch_sign_plain"] = std::to_string(model.branch_sign_plain.at(ell));
        rec["branch_sign_hat"] = std::to_string(model.branch_sign_hat.at(ell));
        saddles.push_back(std::move(rec));
    }
    Json weights = Json::object();
    for (const auto& [ell, u] : fourier_weights()) {
        weights[std::to_string(ell)] = u.to_string();
    }
    const Real d = delta_integral(ctx);
    const Real k = kappa(model);
    const Real fe = (Real::from_int(model.A + 2, ctx.working_bits()) - k - d * 3L).rounded(ctx.prec_bits);
    return Json{{"A", std::to_string(model.A)},
                {"prec_bits", std::to_string(ctx.prec_bits)},
                {"saddles", std::move(saddles)},
                {"fourier_weights", std::move(weights)},
                {"fourier_weights_note", "exact coefficients of cos(x)^4 = (3 + 4 cos 2x + cos 4x)/8; they sum to 1"},
                {"kappa", real_string(k, ctx.prec_bits)},
                {"delta", real_string(d, ctx.prec_bits)},
                {"final_exponent", real_string(fe, ctx.prec_bits)}};
}

namespace {

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], path.empty() ? std::to_string(i) : path + "." + std::to_string(i), out);
        }
    } else if (j.is_string()) {
        out.emplace_back(path, j.get<std::string>());
    } else {
        out.emplace_back(path, j.dump());
    }
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

} // namespace

std::string to_csv(const Json& j)
{
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [k, v] : rows) {
        os << csv_field(k) << ',' << csv_field(v) << '\n';
    }
    return os.str();
}

std::string to_text(const Json& j)
{
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::ostringstream os;
    for (const auto& [k, v] : rows) {
        os << k << " = " << v << '\n';
    }
    return os.str();
}

} // namespace zetaforms
