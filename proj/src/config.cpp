#include "glsnorm/config.hpp"

#include <cmath>
#include <fstream>

namespace glsnorm {

namespace {
double num_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (v.is_string() && v.get<std::string>() == "inf")
        return std::numeric_limits<double>::infinity();
    return v.get<double>();
}

json num_json(double v) {
    if (std::isinf(v)) return json("inf");
    return json(v);
}

[[noreturn]] void bad(const std::string& what) { throw ConfigError("config: " + what); }
}  // namespace

json funcspec_to_json(const FuncSpec& f) {
    json j;
    switch (f.kind()) {
        case FuncSpec::Kind::Power:
            j["kind"] = "power";
            j["c"] = f.power_coeff();
            j["s"] = f.power_expo();
            return j;
        default:
            break;
    }
    throw ConfigError("config: only power-law function descriptors serialize in v1");
}

FuncSpec funcspec_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power") return FuncSpec::power(j.at("c").get<double>(), j.at("s").get<double>());
    if (kind == "constant") return FuncSpec::constant(j.at("c").get<double>());
    if (kind == "indicator")
        return FuncSpec::indicator(j.at("lo").get<double>(), j.at("hi").get<double>());
    if (kind == "piecewise_constant")
        return FuncSpec::piecewise_constant(j.at("edges").get<std::vector<double>>(),
                                            j.at("values").get<std::vector<double>>());
    bad("unknown function kind '" + kind + "'");
}

json measure_to_json(const MeasureSpace& m) {
    json j;
    if (m.is_interval()) {
        j["kind"] = "interval";
        j["a"] = m.lo();
        j["b"] = num_json(m.hi());
        j["density"] = funcspec_to_json(m.density());
    } else {
        j["kind"] = "atoms";
        j["positions"] = m.positions();
        j["weights"] = m.weights();
    }
    return j;
}

MeasureSpace measure_from_json(const json& j) {
    const std::string kind = j.value("kind", "interval");
    if (kind == "interval") {
        double a = num_or(j, "a", 0.0), b = num_or(j, "b", 1.0);
        FuncSpec d = j.contains("density") ? funcspec_from_json(j.at("density"))
                                           : FuncSpec::constant(1.0);
        return MeasureSpace::interval(a, b, std::move(d));
    }
    if (kind == "atoms") {
        auto w = j.at("weights").get<std::vector<double>>();
        if (j.contains("positions"))
            return MeasureSpace::atoms_at(j.at("positions").get<std::vector<double>>(),
                                          std::move(w));
        return MeasureSpace::atoms(std::move(w));
    }
    bad("unknown measure kind '" + kind + "'");
}

json transform_to_json(const Transform& t) {
    json j;
    switch (t.kind()) {
        case Transform::Kind::PowerMap:
            j["kind"] = "power_map";
            j["r"] = t.power_r();
            return j;
        case Transform::Kind::ConstantMap:
            j["kind"] = "constant";
            j["value"] = t(0.0);
            return j;
        default:
            throw ConfigError("config: only power_map/constant transforms serialize in v1");
    }
}

Transform transform_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power_map") return Transform::power_map(j.at("r").get<double>());
    if (kind == "identity") return Transform::identity();
    if (kind == "constant") return Transform::constant_map(j.at("value").get<double>());
    bad("unknown transform kind '" + kind + "'");
}

json operator_to_json(const OperatorSpec& op) {
    json j;
    if (const auto* c = std::get_if<CompositionOp>(&op)) {
        j["kind"] = "composition";
        j["transform"] = transform_to_json(c->xi);
    } else if (const auto* m = std::get_if<MultiplicativeOp>(&op)) {
        j["kind"] = "multiplicative";
        j["g"] = funcspec_to_json(m->g);
    } else if (const auto* p = std::get_if<ProductOp>(&op)) {
        j["kind"] = "product";
        j["g"] = funcspec_to_json(p->g);
        j["transform"] = transform_to_json(p->xi);
        j["independent"] = p->independent;
        if (p->factored_h) j["h_factored"] = funcspec_to_json(*p->factored_h);
    } else if (const auto* l = std::get_if<LinearSubstitutionOp>(&op)) {
        j["kind"] = "linear_substitution";
        j["dim"] = l->dim;
        j["abs_det"] = l->abs_det;
    }
    return j;
}

OperatorSpec operator_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "composition") return CompositionOp{transform_from_json(j.at("transform"))};
    if (kind == "multiplicative") return MultiplicativeOp{funcspec_from_json(j.at("g"))};
    if (kind == "product") {
        ProductOp op{funcspec_from_json(j.at("g")), transform_from_json(j.at("transform"))};
        op.independent = j.value("independent", false);
        if (j.contains("h_factored")) op.factored_h = funcspec_from_json(j.at("h_factored"));
        return op;
    }
    if (kind == "linear_substitution")
        return LinearSubstitutionOp{j.value("dim", 1), j.at("abs_det").get<double>()};
    bad("unknown operator kind '" + kind + "'");
}

PsiFunction build_psi(const PsiSpec& spec) {
    switch (spec.kind) {
        case PsiSpec::Kind::Degenerate:
            return PsiFunction::degenerate(spec.r);
        case PsiSpec::Kind::Power:
            return PsiFunction::power_growth(spec.coeff, spec.expo, spec.lo, spec.hi);
        case PsiSpec::Kind::Natural:
            return natural_psi(spec.f, spec.space, Exponent(spec.lo),
                               std::isinf(spec.hi) ? Exponent::inf() : Exponent(spec.hi));
        case PsiSpec::Kind::Table:
            return PsiFunction::tabulated(spec.grid, spec.values);
    }
    bad("invalid psi spec");
}

json psi_to_json(const PsiSpec& spec) {
    json j;
    switch (spec.kind) {
        case PsiSpec::Kind::Degenerate:
            j["kind"] = "degenerate";
            j["r"] = spec.r;
            return j;
        case PsiSpec::Kind::Power:
            j["kind"] = "power";
            j["coeff"] = spec.coeff;
            j["expo"] = spec.expo;
            j["lo"] = spec.lo;
            j["hi"] = num_json(spec.hi);
            return j;
        case PsiSpec::Kind::Natural:
            j["kind"] = "natural";
            j["f"] = funcspec_to_json(spec.f);
            j["space"] = measure_to_json(spec.space);
            j["lo"] = spec.lo;
            j["hi"] = num_json(spec.hi);
            return j;
        case PsiSpec::Kind::Table:
            j["kind"] = "table";
            j["grid"] = spec.grid;
            j["values"] = spec.values;
            return j;
    }
    bad("invalid psi spec");
}

PsiSpec psi_from_json(const json& j) {
    PsiSpec s;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "degenerate") {
        s.kind = PsiSpec::Kind::Degenerate;
        s.r = j.at("r").get<double>();
    } else if (kind == "power") {
        s.kind = PsiSpec::Kind::Power;
        s.coeff = j.value("coeff", 1.0);
        s.expo = j.value("expo", 0.0);
        s.lo = num_or(j, "lo", 1.0);
        s.hi = num_or(j, "hi", std::numeric_limits<double>::infinity());
    } else if (kind == "natural") {
        s.kind = PsiSpec::Kind::Natural;
        s.f = funcspec_from_json(j.at("f"));
        if (j.contains("space")) s.space = measure_from_json(j.at("space"));
        s.lo = num_or(j, "lo", 1.0);
        s.hi = num_or(j, "hi", std::numeric_limits<double>::infinity());
    } else if (kind == "table") {
        s.kind = PsiSpec::Kind::Table;
        s.grid = j.at("grid").get<std::vector<double>>();
        s.values = j.at("values").get<std::vector<double>>();
    } else {
        bad("unknown psi kind '" + kind + "'");
    }
    return s;
}

namespace {
std::vector<double> grid_from(const json& j) {
    if (j.is_array()) return j.get<std::vector<double>>();
    return {j.get<double>()};
}
}  // namespace

json config_to_json(const JobConfig& c) {
    json j;
    if (c.op) j["operator"] = operator_to_json(*c.op);
    j["spaces"] = {{"mu", measure_to_json(c.mu)}, {"nu", measure_to_json(c.nu)}};
    j["exponents"] = {{"p", c.p_grid}, {"q", c.q_grid}};
    if (c.psi) j["psi"] = psi_to_json(*c.psi);
    if (!c.transform_kind.empty()) {
        json t;
        t["kind"] = c.transform_kind;
        t["r"] = c.transform_r;
        t["t"] = c.transform_t;
        t["delta"] = c.transform_delta;
        if (!c.points.empty()) t["points"] = c.points;
        j["transform"] = t;
    }
    if (!c.suite.empty()) j["suite"] = c.suite;
    j["output"] = {{"format", c.out_format}, {"path", c.out_path}};
    return j;
}

JobConfig config_from_json(const json& j) {
    JobConfig c;
    try {
        if (j.contains("operator")) c.op = operator_from_json(j.at("operator"));
        if (j.contains("spaces")) {
            c.mu = measure_from_json(j.at("spaces").at("mu"));
            c.nu = measure_from_json(j.at("spaces").at("nu"));
        }
        if (j.contains("exponents")) {
            const auto& e = j.at("exponents");
            if (e.contains("p")) c.p_grid = grid_from(e.at("p"));
            if (e.contains("q")) c.q_grid = grid_from(e.at("q"));
        }
        if (j.contains("psi")) c.psi = psi_from_json(j.at("psi"));
        if (j.contains("transform")) {
            const auto& t = j.at("transform");
            c.transform_kind = t.at("kind").get<std::string>();
            c.transform_r = t.value("r", 2.0);
            c.transform_t = t.value("t", 0.1);
            c.transform_delta = t.value("delta", 1.0);
            if (t.contains("points")) c.points = t.at("points").get<std::vector<double>>();
        }
        if (j.contains("suite")) c.suite = j.at("suite").get<std::string>();
        if (j.contains("output")) {
            c.out_format = j.at("output").value("format", "csv");
            c.out_path = j.at("output").value("path", "");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (c.out_format != "csv" && c.out_format != "json")
        throw ConfigError("config: output format must be csv or json");
    return c;
}

JobConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("config: cannot open " + path);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: parse error: ") + e.what());
    }
    return config_from_json(j);
}

}  // namespace glsnorm
