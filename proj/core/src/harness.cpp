#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fsl/harness.hpp"

namespace fsl {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

FitResult fit_slope(std::span<const double> s, std::span<const double> r) {
    if (s.size() != r.size())
        throw DimensionMismatchError("slope fit got " + std::to_string(s.size()) +
                                     " abscissae and " + std::to_string(r.size()) + " ratios");
    const std::size_t m = s.size();
    if (m < 3) throw InvalidArgumentError("slope fit needs at least 3 points");
    std::vector<double> x(m), y(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(s[i] > 0.0) || !std::isfinite(s[i]) || !(r[i] > 0.0) || !std::isfinite(r[i]))
            throw InvalidArgumentError("slope fit needs positive finite data");
        x[i] = std::log(s[i]);
        y[i] = std::log(r[i]);
    }
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        xbar += x[i];
        ybar += y[i];
    }
    xbar /= double(m);
    ybar /= double(m);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (x[i] - xbar) * (x[i] - xbar);
        sxy += (x[i] - xbar) * (y[i] - ybar);
    }
    if (!(sxx > 0.0)) throw InvalidArgumentError("slope fit needs distinct abscissae");
    FitResult out;
    out.slope = sxy / sxx;
    const double intercept = ybar - out.slope * xbar;
    double ssr = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double resid = y[i] - (intercept + out.slope * x[i]);
        ssr += resid * resid;
    }
    out.slope_stderr = std::sqrt(ssr / (double(m - 2) * sxx));
    return out;
}

RegionVerdict classify_point(const ExponentPair& pq) {
    constexpr double tol = 1e-12;
    RegionVerdict v;
    v.pq = pq;
    const double ip = pq.inv_p();
    const double iq = pq.inv_q();
    v.bounded_domain_admissible = (ip + iq >= 1.0 - tol) && (ip >= 0.5 - tol);
    v.hy_line_admissible = pq.on_duality_line(tol) && (ip >= 0.5 - tol);
    for (FamilyId id : {FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D, FamilyId::E})
        if (family_defeats(id, pq)) v.defeated_by.push_back(id);
    return v;
}

std::vector<RegionVerdict> classify_grid(double step) {
    if (!(step > 0.0 && step <= 1.0))
        throw InvalidArgumentError("lattice step must lie in (0, 1], got " +
                                   fmt("%.10g", step));
    std::vector<double> values;
    for (int i = 0; double(i) * step <= 1.0 + 1e-12; ++i)
        values.push_back(std::min(double(i) * step, 1.0));
    std::vector<RegionVerdict> out;
    out.reserve(values.size() * values.size());
    for (double ip : values)
        for (double iq : values)
            out.push_back(classify_point(ExponentPair::from_reciprocals(ip, iq)));
    return out;
}

VerifyVerdict verify_sweep(const SweepResult& result, double tolerance) {
    VerifyVerdict v;
    const double fitted = result.fitted_slope;
    const double predicted = result.predicted_slope;
    std::ostringstream msg;
    if (result.config.family == FamilyId::S) {
        v.pass = fitted >= predicted - tolerance;
        msg << "fitted slope " << fmt("%.4f", fitted) << " >= predicted " << fmt("%.4f", predicted)
            << " - " << fmt("%.2f", tolerance) << ": " << (v.pass ? "PASS" : "FAIL");
    } else {
        v.pass = std::abs(fitted - predicted) <= tolerance;
        msg << "fitted slope " << fmt("%.4f", fitted) << " vs predicted " << fmt("%.4f", predicted)
            << " (tolerance " << fmt("%.2f", tolerance) << "): " << (v.pass ? "PASS" : "FAIL");
    }
    v.message = msg.str();
    return v;
}

double default_tolerance(TransformMethod method) {
    return method == TransformMethod::ClosedForm ? 0.15 : 0.25;
}

namespace {

LebesgueExponent exponent_from_json(const nlohmann::json& j, const char* key) {
    if (j.is_string()) return parse_exponent(j.get<std::string>());
    if (j.is_number()) return LebesgueExponent::from_p(j.get<double>());
    throw InvalidArgumentError(std::string("config key '") + key +
                               "' must be a number or \"inf\"");
}

nlohmann::json exponent_to_json(LebesgueExponent e) {
    if (e.is_infinite()) return "inf";
    return e.p();
}

}  // namespace

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidArgumentError("sweep config must be a JSON object");
    static const char* known[] = {"family", "d",      "p",           "q",  "sweep",
                                  "delta",  "method", "grid_budget", "out"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || (it.key() == k);
        if (!ok) throw InvalidArgumentError("unknown config key '" + it.key() + "'");
    }
    for (const char* k : {"family", "d", "p", "q", "sweep"})
        if (!j.contains(k))
            throw InvalidArgumentError(std::string("config is missing key '") + k + "'");

    SweepConfig cfg;
    if (!j.at("family").is_string())
        throw InvalidArgumentError("config key 'family' must be a string");
    cfg.family = parse_family(j.at("family").get<std::string>());
    if (!j.at("d").is_number_integer())
        throw InvalidArgumentError("config key 'd' must be an integer");
    cfg.d = j.at("d").get<int>();
    cfg.pq.p = exponent_from_json(j.at("p"), "p");
    cfg.pq.q = exponent_from_json(j.at("q"), "q");
    if (!j.at("sweep").is_array())
        throw InvalidArgumentError("config key 'sweep' must be an array of numbers");
    for (const auto& v : j.at("sweep")) {
        if (!v.is_number())
            throw InvalidArgumentError("config key 'sweep' must be an array of numbers");
        cfg.sweep.push_back(v.get<double>());
    }
    if (j.contains("delta")) {
        if (!j.at("delta").is_number())
            throw InvalidArgumentError("config key 'delta' must be a number");
        cfg.delta = j.at("delta").get<double>();
    }
    if (j.contains("method")) {
        if (!j.at("method").is_string())
            throw InvalidArgumentError("config key 'method' must be a string");
        cfg.method = parse_method(j.at("method").get<std::string>());
    }
    if (j.contains("grid_budget")) {
        if (!j.at("grid_budget").is_number_unsigned())
            throw InvalidArgumentError("config key 'grid_budget' must be a non-negative integer");
        cfg.policy.budget = j.at("grid_budget").get<std::size_t>();
    }
    if (j.contains("out")) {
        if (!j.at("out").is_string())
            throw InvalidArgumentError("config key 'out' must be a string");
        cfg.out_dir = j.at("out").get<std::string>();
    }
    cfg.validate();
    return cfg;
}

nlohmann::json sweep_config_to_json(const SweepConfig& cfg) {
    nlohmann::json j;
    j["family"] = format_family(cfg.family);
    j["d"] = cfg.d;
    j["p"] = exponent_to_json(cfg.pq.p);
    j["q"] = exponent_to_json(cfg.pq.q);
    j["sweep"] = cfg.sweep;
    j["delta"] = cfg.delta;
    if (cfg.method) j["method"] = format_method(*cfg.method);
    if (cfg.policy.budget != 0) j["grid_budget"] = cfg.policy.budget;
    j["out"] = cfg.out_dir;
    return j;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgumentError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgumentError("config parse error in " + path + ": " + e.what());
    }
    return sweep_config_from_json(j);
}

std::string sweep_basename(const SweepConfig& cfg) {
    return "sweep_" + format_family(cfg.family) + "_d" + std::to_string(cfg.d) + "_p" +
           format_exponent(cfg.pq.p) + "_q" + format_exponent(cfg.pq.q);
}

SweepPaths write_sweep_outputs(const SweepResult& result, double tolerance) {
    namespace fs = std::filesystem;
    const SweepConfig& cfg = result.config;
    fs::create_directories(cfg.out_dir);
    const std::string base = sweep_basename(cfg);
    SweepPaths paths;
    paths.csv = (fs::path(cfg.out_dir) / (base + ".csv")).string();
    paths.sidecar = (fs::path(cfg.out_dir) / (base + ".json")).string();

    std::ofstream csv(paths.csv);
    if (!csv) throw Error("cannot write " + paths.csv);
    csv << "family,d,p,q,N,norm_f_p,norm_Ff_q,ratio\n";
    const std::string prefix = format_family(cfg.family) + "," + std::to_string(cfg.d) + "," +
                               format_exponent(cfg.pq.p) + "," + format_exponent(cfg.pq.q) + ",";
    for (const SweepRow& row : result.rows) {
        csv << prefix << fmt("%.10g", row.sweep_value) << "," << fmt("%.17g", row.norm_f_p) << ","
            << fmt("%.17g", row.norm_Ff_q) << "," << fmt("%.17g", row.ratio) << "\n";
    }
    if (!csv.flush()) throw Error("cannot write " + paths.csv);

    nlohmann::json sidecar;
    sidecar["fitted_slope"] = result.fitted_slope;
    sidecar["stderr"] = result.slope_stderr;
    sidecar["predicted_slope"] = result.predicted_slope;
    sidecar["verdict"] = verify_sweep(result, tolerance).pass ? "PASS" : "FAIL";
    std::ofstream side(paths.sidecar);
    if (!side) throw Error("cannot write " + paths.sidecar);
    side << sidecar.dump(2) << "\n";
    if (!side.flush()) throw Error("cannot write " + paths.sidecar);
    return paths;
}

std::string classification_csv_line(const RegionVerdict& v) {
    std::string defeated;
    for (std::size_t i = 0; i < v.defeated_by.size(); ++i) {
        if (i) defeated += "|";
        defeated += format_family(v.defeated_by[i]);
    }
    return fmt("%.10g", v.pq.inv_p()) + "," + fmt("%.10g", v.pq.inv_q()) + "," +
           (v.bounded_domain_admissible ? "true" : "false") + "," + defeated;
}

void write_classification_csv(std::span<const RegionVerdict> verdicts, const std::string& path) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "inv_p,inv_q,bounded_admissible,defeated_by\n";
    for (const RegionVerdict& v : verdicts) out << classification_csv_line(v) << "\n";
    if (!out.flush()) throw Error("cannot write " + path);
}

}  // namespace fsl
