#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fsl/harness.hpp"
#include "fsl/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

struct SweepArgs {
    std::string config_path;
    std::string family;
    int d = 1;
    std::string p = "2";
    std::string q = "2";
    std::vector<double> sweep;
    double delta = 0.05;
    std::string method;
    std::string out_dir = "results";
};

int cmd_sweep(const SweepArgs& args, const CLI::App& cmd) {
    fsl::SweepConfig cfg;
    if (!args.config_path.empty()) {
        for (const char* flag : {"--family", "--d", "--p", "--q", "--sweep", "--delta",
                                 "--method", "--out"})
            if (cmd.count(flag) > 0)
                throw fsl::InvalidArgumentError(std::string("--config replaces ") + flag);
        cfg = fsl::load_sweep_config(args.config_path);
    } else {
        if (cmd.count("--family") == 0 || cmd.count("--sweep") == 0)
            throw fsl::InvalidArgumentError("sweep needs --family and --sweep (or --config)");
        cfg.family = fsl::parse_family(args.family);
        cfg.d = args.d;
        cfg.pq.p = fsl::parse_exponent(args.p);
        cfg.pq.q = fsl::parse_exponent(args.q);
        cfg.sweep = args.sweep;
        cfg.delta = args.delta;
        if (!args.method.empty()) cfg.method = fsl::parse_method(args.method);
        cfg.out_dir = args.out_dir;
    }
    cfg.validate();

    const fsl::TransformMethod method = fsl::resolved_method(cfg);
    std::cout << "family " << fsl::format_family(cfg.family) << ", d=" << cfg.d << ", (p,q)=("
              << fsl::format_exponent(cfg.pq.p) << "," << fsl::format_exponent(cfg.pq.q)
              << "), method " << fsl::format_method(method) << ", " << cfg.sweep.size()
              << " sweep values" << std::endl;

    fsl::SweepResult result = fsl::run_sweep(cfg);
    const double tolerance = fsl::default_tolerance(method);
    fsl::SweepPaths paths = fsl::write_sweep_outputs(result, tolerance);
    fsl::VerifyVerdict verdict = fsl::verify_sweep(result, tolerance);

    std::cout << "fitted slope " << result.fitted_slope << " (stderr " << result.slope_stderr
              << "), predicted " << result.predicted_slope << "\n"
              << verdict.message << "\n"
              << "wrote " << paths.csv << " and " << paths.sidecar << std::endl;
    return verdict.pass ? kExitOk : kExitFail;
}

int cmd_classify(double grid_step, const std::string& point_text, const std::string& out_path,
                 const CLI::App& cmd) {
    std::vector<fsl::RegionVerdict> rows;
    if (cmd.count("--point") > 0) {
        if (cmd.count("--grid") > 0)
            throw fsl::InvalidArgumentError("classify takes --grid or --point, not both");
        std::istringstream ss(point_text);
        double inv_p = 0.0, inv_q = 0.0;
        char comma = '\0';
        if (!(ss >> inv_p >> comma >> inv_q) || comma != ',' || !ss.eof())
            throw fsl::InvalidArgumentError("--point wants \"1/p,1/q\", got '" + point_text +
                                            "'");
        rows.push_back(fsl::classify_point(fsl::ExponentPair::from_reciprocals(inv_p, inv_q)));
    } else if (cmd.count("--grid") > 0) {
        rows = fsl::classify_grid(grid_step);
    } else {
        throw fsl::InvalidArgumentError("classify needs --grid <step> or --point <1/p,1/q>");
    }

    if (!out_path.empty()) {
        fsl::write_classification_csv(rows, out_path);
        std::cout << "wrote " << out_path << " (" << rows.size() << " rows)" << std::endl;
    } else {
        std::cout << "inv_p,inv_q,bounded_admissible,defeated_by\n";
        for (const fsl::RegionVerdict& v : rows)
            std::cout << fsl::classification_csv_line(v) << "\n";
        std::cout.flush();
    }
    return kExitOk;
}

int cmd_verify(bool quick, bool tamper) {
    fsl::AcceptanceOptions options;
    options.quick = quick;
    options.tamper = tamper;
    std::vector<fsl::CriterionResult> results = fsl::run_acceptance(options, std::cout);
    int passed = 0;
    for (const fsl::CriterionResult& r : results) passed += r.pass ? 1 : 0;
    std::cout << "verify: " << passed << "/" << results.size() << " criteria passed"
              << (quick ? " (quick mode)" : "") << std::endl;
    return fsl::all_passed(results) ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted Fourier norm growth experiments"};
    app.require_subcommand(1);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Run one family sweep and fit the exponent");
    sweep->add_option("--config", sweep_args.config_path, "JSON sweep config file");
    sweep->add_option("--family", sweep_args.family, "Family id: A, B, C, D, E or S");
    sweep->add_option("--d", sweep_args.d, "Dimension");
    sweep->add_option("--p", sweep_args.p, "Input exponent p in [1, inf], 'inf' allowed");
    sweep->add_option("--q", sweep_args.q, "Transform exponent q in [1, inf], 'inf' allowed");
    sweep->add_option("--sweep", sweep_args.sweep, "Sweep values, comma separated")
        ->delimiter(',');
    sweep->add_option("--delta", sweep_args.delta, "Window parameter for families A and B");
    sweep->add_option("--method", sweep_args.method, "closed, quad or fast");
    sweep->add_option("--out", sweep_args.out_dir, "Output directory");

    double grid_step = 0.25;
    std::string point_text;
    std::string classify_out;
    CLI::App* classify = app.add_subcommand("classify", "Classify (1/p, 1/q) points");
    classify->add_option("--grid", grid_step, "Lattice step in (0, 1]");
    classify->add_option("--point", point_text, "Single point as 1/p,1/q");
    classify->add_option("--out", classify_out, "Write CSV here instead of stdout");

    bool quick = false;
    bool tamper = false;
    CLI::App* verify = app.add_subcommand("verify", "Run the built-in acceptance suite");
    verify->add_flag("--quick", quick, "Smaller sweeps, informative only");
    verify->add_flag("--tamper", tamper, "Corrupt the slope fixture (the suite must fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_args, *sweep);
        if (classify->parsed()) return cmd_classify(grid_step, point_text, classify_out, *classify);
        if (verify->parsed()) return cmd_verify(quick, tamper);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitError;
    }
    return kExitError;
}
