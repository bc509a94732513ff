#include "sprd/config.hpp"

#include <cmath>
#include <fstream>

#include "sprd/errors.hpp"
#include "sprd/expr.hpp"

namespace sprd {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* block, const char* key) {
    if (!obj.contains(key)) throw ConfigError(std::string(block) + "." + key + ": missing required field");
    return obj.at(key);
}

std::string get_string(const json& obj, const char* block, const char* key) {
    const json& v = require(obj, block, key);
    if (!v.is_string()) throw ConfigError(std::string(block) + "." + key + ": expected a string");
    return v.get<std::string>();
}

double get_number(const json& obj, const char* block, const char* key) {
    const json& v = require(obj, block, key);
    if (!v.is_number()) throw ConfigError(std::string(block) + "." + key + ": expected a number");
    return v.get<double>();
}

int get_int(const json& obj, const char* block, const char* key) {
    const json& v = require(obj, block, key);
    if (!v.is_number_integer()) throw ConfigError(std::string(block) + "." + key + ": expected an integer");
    return v.get<int>();
}

const json& get_object(const json& obj, const char* key) {
    if (!obj.contains(key)) throw ConfigError(std::string(key) + ": missing required block");
    const json& v = obj.at(key);
    if (!v.is_object()) throw ConfigError(std::string(key) + ": expected an object");
    return v;
}

expr::Expr compile(const std::string& field, const std::string& source) {
    try {
        return expr::parse(source);
    } catch (const Error& e) {
        throw ConfigError("problem." + field + ": " + e.what());
    }
}

void check_positive(double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0)) throw ConfigError(std::string(name) + ": must be positive and finite");
}

}  // namespace

void check_config(const RunConfig& cfg) {
    const auto& p = cfg.problem;
    compile("a", p.a);
    compile("f", p.f);
    compile("phi_L", p.phi_L);
    compile("phi_R", p.phi_R);
    compile("phi_B", p.phi_B);
    check_positive(p.epsilon, "problem.epsilon");
    check_positive(p.alpha, "problem.alpha");
    check_positive(p.T, "problem.T");

    if (cfg.mesh) {
        if (cfg.mesh->N < 8 || cfg.mesh->N % 4 != 0) {
            throw ConfigError("mesh.N: must be divisible by 4 and at least 8 (got " + std::to_string(cfg.mesh->N) + ")");
        }
        if (cfg.mesh->M < 1) throw ConfigError("mesh.M: must be at least 1");
    }
    if (cfg.sweep) {
        SweepConfig sc;
        sc.axis = cfg.sweep->axis;
        sc.fixed = cfg.sweep->fixed;
        sc.refine_values = cfg.sweep->refine_values;
        sc.epsilons = cfg.sweep->epsilons;
        try {
            check_sweep_config(sc);
        } catch (const ArgumentError& e) {
            throw ConfigError(e.what());
        }
    }
    const auto& o = cfg.output;
    if (o.format != "text" && o.format != "csv") throw ConfigError("output.format: expected text or csv");
    if (o.what != "solution" && o.what != "derivative" && o.what != "table") {
        throw ConfigError("output.what: expected solution, derivative or table");
    }
}

RunConfig config_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("configuration root must be a JSON object");
    RunConfig cfg;

    const json& pb = get_object(j, "problem");
    cfg.problem.a = get_string(pb, "problem", "a");
    cfg.problem.f = get_string(pb, "problem", "f");
    cfg.problem.phi_L = get_string(pb, "problem", "phi_L");
    cfg.problem.phi_R = get_string(pb, "problem", "phi_R");
    cfg.problem.phi_B = get_string(pb, "problem", "phi_B");
    cfg.problem.epsilon = get_number(pb, "problem", "epsilon");
    cfg.problem.alpha = get_number(pb, "problem", "alpha");
    cfg.problem.T = get_number(pb, "problem", "T");

    if (j.contains("mesh")) {
        const json& mb = get_object(j, "mesh");
        cfg.mesh = MeshSpec{get_int(mb, "mesh", "N"), get_int(mb, "mesh", "M")};
    }
    if (j.contains("sweep")) {
        const json& sb = get_object(j, "sweep");
        SweepSpec s;
        try {
            s.axis = parse_axis(get_string(sb, "sweep", "axis"));
        } catch (const ArgumentError& e) {
            throw ConfigError(std::string("sweep.axis: ") + e.what());
        }
        if (s.axis != Axis::Both) s.fixed = get_int(sb, "sweep", "fixed");
        const json& rv = require(sb, "sweep", "refine_values");
        const json& ev = require(sb, "sweep", "epsilons");
        if (!rv.is_array() || !ev.is_array()) throw ConfigError("sweep: refine_values and epsilons must be arrays");
        for (const auto& v : rv) {
            if (!v.is_number_integer()) throw ConfigError("sweep.refine_values: expected integers");
            s.refine_values.push_back(v.get<int>());
        }
        for (const auto& v : ev) {
            if (!v.is_number()) throw ConfigError("sweep.epsilons: expected numbers");
            s.epsilons.push_back(v.get<double>());
        }
        cfg.sweep = std::move(s);
    }
    if (j.contains("output")) {
        const json& ob = get_object(j, "output");
        if (ob.contains("format")) cfg.output.format = get_string(ob, "output", "format");
        if (ob.contains("path")) cfg.output.path = get_string(ob, "output", "path");
        if (ob.contains("what")) cfg.output.what = get_string(ob, "output", "what");
    }
    check_config(cfg);
    return cfg;
}

json config_to_json(const RunConfig& cfg) {
    json j;
    const auto& p = cfg.problem;
    j["problem"] = {{"a", p.a},         {"f", p.f},         {"phi_L", p.phi_L}, {"phi_R", p.phi_R},
                    {"phi_B", p.phi_B}, {"epsilon", p.epsilon}, {"alpha", p.alpha}, {"T", p.T}};
    if (cfg.mesh) j["mesh"] = {{"N", cfg.mesh->N}, {"M", cfg.mesh->M}};
    if (cfg.sweep) {
        json s = {{"axis", axis_name(cfg.sweep->axis)},
                  {"refine_values", cfg.sweep->refine_values},
                  {"epsilons", cfg.sweep->epsilons}};
        if (cfg.sweep->axis != Axis::Both) s["fixed"] = cfg.sweep->fixed;
        j["sweep"] = std::move(s);
    }
    json o = {{"format", cfg.output.format}, {"what", cfg.output.what}};
    if (!cfg.output.path.empty()) o["path"] = cfg.output.path;
    j["output"] = std::move(o);
    return j;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return config_from_json(j);
}

Problem build_problem(const ProblemSpec& spec) {
    auto a = compile("a", spec.a);
    auto f = compile("f", spec.f);
    auto phi_L = compile("phi_L", spec.phi_L);
    auto phi_R = compile("phi_R", spec.phi_R);
    auto phi_B = compile("phi_B", spec.phi_B);

    Problem p;
    p.a = [a](double x, double t) { return expr::eval(a, x, t); };
    p.f = [f](double x, double t) { return expr::eval(f, x, t); };
    p.phi_L = [phi_L](double t) { return expr::eval(phi_L, 0.0, t); };
    p.phi_R = [phi_R](double t) { return expr::eval(phi_R, 1.0, t); };
    p.phi_B = [phi_B](double x) { return expr::eval(phi_B, x, 0.0); };
    p.epsilon = spec.epsilon;
    p.alpha = spec.alpha;
    p.T = spec.T;
    return p;
}

ProblemSpec example_problem_spec(double epsilon) {
    ProblemSpec s;
    s.a = "1+3*t";
    s.f = "exp(3*t)";
    s.phi_L = "1+t^5";
    s.phi_R = "1+t^5";
    s.phi_B = "1";
    s.epsilon = epsilon;
    s.alpha = 0.9;
    s.T = 1.0;
    return s;
}

}  // namespace sprd
