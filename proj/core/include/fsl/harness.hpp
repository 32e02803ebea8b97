#ifndef FSL_HARNESS_HPP
#define FSL_HARNESS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fsl/exponents.hpp"
#include "fsl/families.hpp"
#include "fsl/transform.hpp"

namespace fsl {

/// Grid sizing knobs shared by the quadrature paths. `budget` = 0 keeps the
/// global default (FSL_BUDGET_NODES or 10^7); `oversample` is samples per
/// period of the worst-case total phase, >= 8 by the sampling rule.
struct GridPolicy {
    std::size_t budget = 0;
    double oversample = 10.0;
};

struct SweepConfig {
    FamilyId family = FamilyId::A;
    int d = 1;
    ExponentPair pq = ExponentPair::from_pq(1, 1);
    std::vector<double> sweep;  // N values (A..E, increasing) or lambdas (S, decreasing)
    double delta = 0.05;
    std::optional<TransformMethod> method;  // family default when unset
    GridPolicy policy;
    std::string out_dir = "results";

    void validate() const;
};

TransformMethod resolved_method(const SweepConfig& cfg);

struct SweepRow {
    double sweep_value;  // N, or lambda for family S
    double norm_f_p;
    double norm_Ff_q;
    double ratio;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
    double fitted_slope = 0.0;
    double slope_stderr = 0.0;
    double predicted_slope = 0.0;
};

struct FitResult {
    double slope;
    double slope_stderr;
};

/// Ordinary least squares of log r against log s. Needs >= 3 points, all
/// positive. slope_stderr is sqrt(SSR / ((m-2) sum (x - xbar)^2)).
FitResult fit_slope(std::span<const double> s, std::span<const double> r);

/// Runs the sweep: per sweep value, build the family input, evaluate the
/// transform by the resolved method, compute both norms, record the ratio;
/// then fit the log-log slope (abscissa N, or 1/lambda for S).
/// Undersampling/budget errors are rethrown with the offending sweep value
/// attached.
SweepResult run_sweep(const SweepConfig& cfg);

/// Same sweep evaluated at several (p,q) pairs at once; the per-N fields and
/// transforms are computed once and shared, so this costs one run_sweep.
/// cfg.pq is ignored in favor of `pqs`.
std::vector<SweepResult> run_sweep_shared(const SweepConfig& cfg,
                                          std::span<const ExponentPair> pqs);

struct RegionVerdict {
    ExponentPair pq;
    bool bounded_domain_admissible = false;
    bool hy_line_admissible = false;
    std::vector<FamilyId> defeated_by;
};

/// bounded_domain_admissible per the trapezoid {1/p + 1/q >= 1, 1/2 <= 1/p};
/// hy_line_admissible iff 1/p + 1/q = 1 (tolerance 1e-12) and 1/p >= 1/2;
/// defeated_by lists every family (A..E) with predicted_exponent > 0 at pq.
RegionVerdict classify_point(const ExponentPair& pq);

/// Verdicts on the lattice {0, step, 2 step, ...} ∩ [0,1] squared.
std::vector<RegionVerdict> classify_grid(double step);

struct VerifyVerdict {
    bool pass = false;
    std::string message;
};

/// PASS iff |fitted - predicted| <= tolerance, except family S where the
/// fitted slope only bounds the prediction from below:
/// fitted >= predicted - tolerance.
VerifyVerdict verify_sweep(const SweepResult& result, double tolerance);

/// Pinned slope tolerances: 0.15 for ClosedForm, 0.25 otherwise.
double default_tolerance(TransformMethod method);

// -- persistence ------------------------------------------------------------

SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json sweep_config_to_json(const SweepConfig& cfg);
SweepConfig load_sweep_config(const std::string& path);

/// "sweep_<family>_d<d>_p<p>_q<q>" (exponents formatted as in CSV columns).
std::string sweep_basename(const SweepConfig& cfg);

/// Writes <out_dir>/<basename>.csv with header
/// `family,d,p,q,N,norm_f_p,norm_Ff_q,ratio` and the JSON sidecar
/// <basename>.json with keys {fitted_slope, stderr, predicted_slope,
/// verdict}; the verdict uses `tolerance`. Returns the two paths.
struct SweepPaths {
    std::string csv;
    std::string sidecar;
};
SweepPaths write_sweep_outputs(const SweepResult& result, double tolerance);

/// CSV rows `inv_p,inv_q,bounded_admissible,defeated_by` (booleans as
/// true/false, defeated_by pipe-joined family letters).
void write_classification_csv(std::span<const RegionVerdict> verdicts,
                              const std::string& path);
std::string classification_csv_line(const RegionVerdict& v);

}  // namespace fsl

#endif  // FSL_HARNESS_HPP
