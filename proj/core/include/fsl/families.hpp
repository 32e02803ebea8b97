#ifndef FSL_FAMILIES_HPP
#define FSL_FAMILIES_HPP

#include <functional>
#include <optional>
#include <string>

#include "fsl/exponents.hpp"
#include "fsl/grid.hpp"
#include "fsl/region.hpp"
#include "fsl/transform.hpp"

namespace fsl {

enum class FamilyId { A, B, C, D, E, S };

FamilyId parse_family(const std::string& text);
std::string format_family(FamilyId id);

/// Parameters shared by all families. N is the frequency/scale parameter for
/// A..E; lambda is the dilation factor for S (1 is allowed only as the
/// trivial identity case; sweeps use lambda < 1).
struct FamilyParams {
    FamilyId id = FamilyId::A;
    int d = 1;
    double N = 8.0;
    double delta = 0.05;
    double lambda = 0.5;

    void validate() const;
};

/// One test family: input, best-available transform route, norm regions, and
/// analytic norm shortcuts where the modulus structure gives them for free.
struct FamilySpec {
    FamilyParams params;

    /// Pointwise input f(x). Null for C (its input is itself an oscillatory
    /// integral, evaluated by the harness) and S (whose input is a field).
    std::function<cd(std::span<const double>)> input;

    /// Pointwise transform Ff(xi) when a closed/analytic form exists
    /// (A, B: closed form; C: analytic datum). Null for D, E, S.
    std::function<cd(std::span<const double>)> transform;

    /// For S only: the dilated base field.
    std::optional<SampledField> input_field;

    /// Support of the input (for C: the truncation ball used for its norm).
    Region input_norm_region;
    /// Region where ||Ff||_q is measured.
    Region target_region;

    /// Analytic ||f||_p when |f| is an indicator modulus (A, B, D, E).
    std::function<double(LebesgueExponent)> input_norm;
    /// Analytic ||Ff||_{L^q(target)} (C only: |B(1)|^{1/q}).
    std::function<double(LebesgueExponent)> transform_norm;

    /// Transform route the family uses when the config does not override it.
    TransformMethod default_method = TransformMethod::DirectQuadrature;

    /// S proves a lower bound on the ratio growth, not an equality.
    bool lower_bound_semantics = false;
};

FamilySpec family_A(const FamilyParams& params);
FamilySpec family_B(const FamilyParams& params);
FamilySpec family_C(const FamilyParams& params);
FamilySpec family_D(const FamilyParams& params);
FamilySpec family_E(const FamilyParams& params);
FamilySpec family_S(const FamilyParams& params, const SampledField& base);

/// Dispatch on params.id; family S gets the default Gaussian base.
FamilySpec make_family(const FamilyParams& params);

/// Gaussian e^{-|x|^2/2} sampled on [-20,20]^d (4096 nodes per axis for d=1,
/// 512 for d=2): the default base field for family S.
SampledField default_scaling_base(int d);

/// Predicted growth exponent of ratio(N) ~ N^e (for S: ratio(1/lambda)):
///   A: d(1/p + 1/q - 1)     B: d(1 - 1/p - 1/q)
///   C: d(1 - 2/p)/2         D: d(2/q - 1)
///   E: d(1/q - 1/p)         S: d(1 - 1/p - 1/q)
double predicted_exponent(FamilyId id, int d, const ExponentPair& pq);

/// True when predicted_exponent > 0 (in any d; the sign is d-independent).
bool family_defeats(FamilyId id, const ExponentPair& pq);

}  // namespace fsl

#endif  // FSL_FAMILIES_HPP
