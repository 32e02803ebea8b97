#ifndef FSL_VERIFICATION_HPP
#define FSL_VERIFICATION_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fsl {

/// The built-in acceptance suite. Every tolerance is pinned in the
/// implementation; quick mode shrinks the sweeps (reduced N ranges) and is
/// informative only, the full mode is the gate.
struct AcceptanceOptions {
    bool quick = false;
    /// Corrupts the internal slope fixture; the suite must then fail.
    /// Exists so the gate itself can be shown to be falsifiable.
    bool tamper = false;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

/// Parses [--quick] [--tamper], runs the suite, prints one PASS/FAIL line per
/// criterion plus a summary; returns 0 if all pass, 2 otherwise.
int acceptance_main(int argc, const char* const* argv);

}  // namespace fsl

#endif  // FSL_VERIFICATION_HPP
