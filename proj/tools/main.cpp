#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ecfield/expr.hpp"
#include "ecfield/group.hpp"
#include "ecfield/io.hpp"
#include "ecfield/valuation.hpp"

using json = nlohmann::json;
using namespace ecf;

namespace {

json element_json(const FieldElement& e) {
    if (e.field().is_prime_field()) return json(e.residue().get_si());
    return json(e.to_string());
}

json point_json(const ProjectivePoint& p) {
    if (p.is_infinity()) return json{{"infinity", true}};
    return json{{"x", element_json(p.affine_x())}, {"y", element_json(p.affine_y())}};
}

json series_json(const LaurentSeries& s, long terms) {
    if (s.is_structural_zero())
        return json{{"lead", nullptr}, {"coeffs", json::array()}, {"prec", nullptr}};
    long prec = std::min(s.prec(), terms + 1);
    long lead = s.has_leading_term() ? s.lead() : prec;
    json coeffs = json::array();
    for (long j = lead; j < prec; ++j) coeffs.push_back(element_json(s.coeff(j)));
    return json{{"lead", lead}, {"coeffs", coeffs}, {"prec", prec}};
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

struct Args {
    std::string field, curve;
    std::string p, q, r, point, fn, uniformizer;
    long long n = 0;
    long terms = 8;
    bool json_out = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic on Weierstrass curves: group law, function field, "
        "valuations and local expansions"};
    app.require_subcommand(1);
    Args a;

    auto common = [&a](CLI::App* sub) {
        sub->add_option("--field", a.field, "Fp:<p> or Q")->required();
        sub->add_option("--curve", a.curve, "coefficients a1,a2,a3,a4,a6")->required();
        sub->add_flag("--json", a.json_out, "emit JSON instead of text");
    };

    CLI::App* info = app.add_subcommand("info", "discriminant and nonsingularity");
    common(info);
    CLI::App* points = app.add_subcommand("points", "list all points over F_p");
    common(points);
    CLI::App* addv = app.add_subcommand("add", "group sum of two points");
    common(addv);
    addv->add_option("--p", a.p, "first point")->required();
    addv->add_option("--q", a.q, "second point")->required();
    CLI::App* negv = app.add_subcommand("neg", "group inverse");
    common(negv);
    negv->add_option("--p", a.p, "point")->required();
    CLI::App* dblv = app.add_subcommand("dbl", "point duplication");
    common(dblv);
    dblv->add_option("--p", a.p, "point")->required();
    CLI::App* mulv = app.add_subcommand("mul", "scalar multiple n*P");
    common(mulv);
    mulv->add_option("--p", a.p, "point")->required();
    mulv->add_option("-n,--n", a.n, "integer scalar")->required();
    CLI::App* colv = app.add_subcommand("colinear", "test three points for colinearity");
    common(colv);
    colv->add_option("--p", a.p, "first point")->required();
    colv->add_option("--q", a.q, "second point")->required();
    colv->add_option("--r", a.r, "third point")->required();
    CLI::App* valv = app.add_subcommand("val", "valuation of a function at a point");
    common(valv);
    valv->add_option("--point", a.point, "point")->required();
    valv->add_option("--fn", a.fn, "function expression")->required();
    CLI::App* univ = app.add_subcommand("uniformizer", "canonical uniformizer at a point");
    common(univ);
    univ->add_option("--point", a.point, "point")->required();
    CLI::App* expv = app.add_subcommand("expand", "power series expansion at a point");
    common(expv);
    expv->add_option("--point", a.point, "point")->required();
    expv->add_option("--fn", a.fn, "function expression")->required();
    expv->add_option("--uniformizer", a.uniformizer, "expansion parameter (default: canonical)");
    expv->add_option("--terms", a.terms, "expansion order N");
    CLI::App* evalv = app.add_subcommand("eval", "value of a function at a point");
    common(evalv);
    evalv->add_option("--point", a.point, "point")->required();
    evalv->add_option("--fn", a.fn, "function expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        FieldSpec spec = parse_field_spec(a.field);
        WeierstrassCurve curve = parse_curve(spec, a.curve);

        if (info->parsed()) {
            emit(a.json_out, json{{"delta", element_json(curve.delta())}, {"nonsingular", true}},
                 "Delta = " + curve.delta().to_string() + "\nnonsingular");
        } else if (points->parsed()) {
            std::vector<ProjectivePoint> pts = enumerate_points(curve);
            if (a.json_out) {
                json arr = json::array();
                for (const ProjectivePoint& p : pts) arr.push_back(point_json(p));
                std::cout << json{{"points", arr}}.dump() << "\n";
            } else {
                for (const ProjectivePoint& p : pts) std::cout << p.to_string() << "\n";
            }
        } else if (addv->parsed()) {
            ProjectivePoint s =
                add(curve, parse_point(spec, a.p), parse_point(spec, a.q));
            emit(a.json_out, json{{"point", point_json(s)}}, s.to_string());
        } else if (negv->parsed()) {
            ProjectivePoint s = negate(curve, parse_point(spec, a.p));
            emit(a.json_out, json{{"point", point_json(s)}}, s.to_string());
        } else if (dblv->parsed()) {
            ProjectivePoint s = double_point(curve, parse_point(spec, a.p));
            emit(a.json_out, json{{"point", point_json(s)}}, s.to_string());
        } else if (mulv->parsed()) {
            ProjectivePoint s =
                scalar_mul(curve, Integer(static_cast<long>(a.n)), parse_point(spec, a.p));
            emit(a.json_out, json{{"point", point_json(s)}}, s.to_string());
        } else if (colv->parsed()) {
            bool col = is_colinear(parse_point(spec, a.p), parse_point(spec, a.q),
                                   parse_point(spec, a.r));
            emit(a.json_out, json{{"colinear", col}}, col ? "true" : "false");
        } else if (valv->parsed()) {
            ProjectivePoint p = parse_point(spec, a.point);
            CurveFunction f = parse_function(curve, a.fn);
            Valuation v = valuation(curve, p, f);
            json jv = v.is_infinity() ? json("+inf") : json(v.value());
            emit(a.json_out, json{{"valuation", jv}}, v.to_string());
        } else if (univ->parsed()) {
            ProjectivePoint p = parse_point(spec, a.point);
            HomogeneousFraction u = canonical_uniformizer_fraction(curve, p);
            emit(a.json_out, json{{"uniformizer", u.to_string()}}, u.to_string());
        } else if (expv->parsed()) {
            ProjectivePoint p = parse_point(spec, a.point);
            CurveFunction f = parse_function(curve, a.fn);
            CurveFunction u = a.uniformizer.empty() ? canonical_uniformizer(curve, p)
                                                    : parse_function(curve, a.uniformizer);
            LaurentSeries s = psi_expand(curve, p, u, f, a.terms);
            emit(a.json_out, series_json(s, a.terms), s.to_string());
        } else if (evalv->parsed()) {
            ProjectivePoint p = parse_point(spec, a.point);
            CurveFunction f = parse_function(curve, a.fn);
            FieldElement v = value_at(f, p);
            emit(a.json_out, json{{"value", element_json(v)}}, v.to_string());
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
