#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "glsnorm/gls_calculus.hpp"
#include "glsnorm/operator_norms.hpp"

namespace glsnorm {

using json = nlohmann::ordered_json;

/// Config-facing descriptor of a generating function. Named variants with
/// numeric parameters only; no expression parsing.
struct PsiSpec {
    enum class Kind { Degenerate, Power, Natural, Table };
    Kind kind = Kind::Power;
    double r = 2.0;                      // Degenerate
    double coeff = 1.0, expo = 0.0;      // Power
    double lo = 1.0, hi = std::numeric_limits<double>::infinity();
    FuncSpec f;                          // Natural
    MeasureSpace space = MeasureSpace::lebesgue(0.0, 1.0);
    std::vector<double> grid, values;    // Table
};

PsiFunction build_psi(const PsiSpec& spec);

json funcspec_to_json(const FuncSpec& f);  // throws for table/opaque variants
FuncSpec funcspec_from_json(const json& j);

json measure_to_json(const MeasureSpace& m);
MeasureSpace measure_from_json(const json& j);

json transform_to_json(const Transform& t);  // power_map / identity / constant only
Transform transform_from_json(const json& j);

json operator_to_json(const OperatorSpec& op);
OperatorSpec operator_from_json(const json& j);

json psi_to_json(const PsiSpec& spec);
PsiSpec psi_from_json(const json& j);

/// One CLI job: an operator with spaces and exponent grids, and/or a
/// generating-function transform, plus output routing.
struct JobConfig {
    std::optional<OperatorSpec> op;
    MeasureSpace mu = MeasureSpace::lebesgue(0.0, 1.0);
    MeasureSpace nu = MeasureSpace::lebesgue(0.0, 1.0);
    std::vector<double> p_grid{2.0};
    std::vector<double> q_grid{4.0};

    std::optional<PsiSpec> psi;
    std::string transform_kind;  // sigma | tau | theta | fundamental | orlicz
    double transform_r = 2.0;
    double transform_t = 0.1;
    double transform_delta = 1.0;
    std::vector<double> points;  // explicit evaluation points (optional)

    std::string suite;  // verification suite name (optional)
    std::string out_format = "csv";
    std::string out_path;  // empty = stdout
};

json config_to_json(const JobConfig& c);
JobConfig config_from_json(const json& j);
JobConfig load_config(const std::string& path);

/// Raised for malformed configs; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace glsnorm
