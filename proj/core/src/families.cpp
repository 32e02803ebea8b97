#include "fsl/families.hpp"

#include <cmath>

namespace fsl {

namespace {

double norm_sq(std::span<const double> v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return s;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgumentError(message);
}

FamilySpec base_spec(const FamilyParams& params) {
    FamilySpec spec;
    spec.params = params;
    return spec;
}

/// The A/B skeleton: e^{i M (x_1+...+x_d)} on the box [a,b]^d, with the
/// closed-form transform. ||f||_p = (b-a)^{d/p} because |f| is the indicator.
FamilySpec modulated_box(const FamilyParams& params, double a, double b, double m,
                         Region target) {
    FamilySpec spec = base_spec(params);
    const int d = params.d;
    spec.input = [a, b, m](std::span<const double> x) {
        double phase = 0.0;
        for (double c : x) {
            if (c < a || c >= b) return cd(0.0);
            phase += c;
        }
        return std::polar(1.0, m * phase);
    };
    spec.transform = [a, b, m](std::span<const double> xi) {
        return closed_form_box_chirp(a, b, m, xi);
    };
    spec.input_norm_region = Region::cube(d, a, b);
    spec.target_region = std::move(target);
    const double len = b - a;
    spec.input_norm = [len, d](LebesgueExponent p) {
        return std::pow(len, double(d) * p.reciprocal());
    };
    spec.default_method = TransformMethod::ClosedForm;
    return spec;
}

}  // namespace

FamilyId parse_family(const std::string& text) {
    if (text.size() == 1) {
        switch (text[0]) {
            case 'A': case 'a': return FamilyId::A;
            case 'B': case 'b': return FamilyId::B;
            case 'C': case 'c': return FamilyId::C;
            case 'D': case 'd': return FamilyId::D;
            case 'E': case 'e': return FamilyId::E;
            case 'S': case 's': return FamilyId::S;
        }
    }
    throw InvalidArgumentError("unknown family '" + text + "' (expected A|B|C|D|E|S)");
}

std::string format_family(FamilyId id) {
    switch (id) {
        case FamilyId::A: return "A";
        case FamilyId::B: return "B";
        case FamilyId::C: return "C";
        case FamilyId::D: return "D";
        case FamilyId::E: return "E";
        case FamilyId::S: return "S";
    }
    return "?";
}

void FamilyParams::validate() const {
    require(d >= 1, "family dimension must be >= 1");
    switch (id) {
        case FamilyId::A:
        case FamilyId::B:
            require(std::isfinite(N) && N >= 2.0, "families A and B need N >= 2");
            require(std::isfinite(delta) && delta > 0.0 && delta <= 0.1,
                    "box width parameter must lie in (0, 0.1]");
            break;
        case FamilyId::C:
            require(std::isfinite(N) && N >= 4.0, "family C needs N >= 4");
            break;
        case FamilyId::D:
        case FamilyId::E:
            require(std::isfinite(N) && N >= 3.0, "families D and E need N >= 3");
            break;
        case FamilyId::S:
            require(std::isfinite(lambda) && lambda > 0.0 && lambda <= 1.0,
                    "dilation factor must lie in (0, 1]");
            require(d <= 2, "the scaling family ships base fields for d <= 2 only");
            break;
    }
}

FamilySpec family_A(const FamilyParams& params) {
    require(params.id == FamilyId::A, "params built for a different family");
    params.validate();
    const double m = params.N * params.N;
    return modulated_box(params, 0.0, params.delta / params.N, m,
                         Region::cube(params.d, m + params.N, m + 2.0 * params.N));
}

FamilySpec family_B(const FamilyParams& params) {
    require(params.id == FamilyId::B, "params built for a different family");
    params.validate();
    const double m = params.N * params.N;
    const double w = params.delta / params.N;
    return modulated_box(params, params.N, 2.0 * params.N, m,
                         Region::cube(params.d, m + w, m + 2.0 * w));
}

FamilySpec family_C(const FamilyParams& params) {
    require(params.id == FamilyId::C, "params built for a different family");
    params.validate();
    FamilySpec spec = base_spec(params);
    const int d = params.d;
    const double N = params.N;
    Region ball = Region::ball(d, 1.0);
    spec.transform = [N, ball](std::span<const double> xi) {
        if (!ball.contains(xi)) return cd(0.0);
        return std::polar(1.0, -0.5 * N * norm_sq(xi));
    };
    spec.input_norm_region = Region::ball(d, 2.0 * N);
    spec.target_region = ball;
    spec.transform_norm = [d](LebesgueExponent q) {
        return std::pow(unit_ball_volume(d), q.reciprocal());
    };
    spec.default_method = TransformMethod::DirectQuadrature;
    return spec;
}

FamilySpec family_D(const FamilyParams& params) {
    require(params.id == FamilyId::D, "params built for a different family");
    params.validate();
    FamilySpec spec = base_spec(params);
    const int d = params.d;
    const double c = params.N * params.N;
    Region support = Region::shell(d, 2.0, 5.0);
    spec.input = [c, support](std::span<const double> x) {
        if (!support.contains(x)) return cd(0.0);
        return std::polar(1.0, 0.5 * c * norm_sq(x));
    };
    spec.input_norm_region = support;
    spec.target_region = Region::shell(d, 3.0 * c, 4.0 * c);
    const double vol = region_volume(support);
    spec.input_norm = [vol](LebesgueExponent p) { return std::pow(vol, p.reciprocal()); };
    spec.default_method = TransformMethod::DirectQuadrature;
    return spec;
}

FamilySpec family_E(const FamilyParams& params) {
    require(params.id == FamilyId::E, "params built for a different family");
    params.validate();
    FamilySpec spec = base_spec(params);
    const int d = params.d;
    const double N = params.N;
    Region support = Region::shell(d, 2.0 * N, 5.0 * N);
    spec.input = [support](std::span<const double> x) {
        if (!support.contains(x)) return cd(0.0);
        return std::polar(1.0, 0.5 * norm_sq(x));
    };
    spec.input_norm_region = support;
    spec.target_region = Region::shell(d, 3.0 * N, 4.0 * N);
    const double vol = region_volume(support);
    spec.input_norm = [vol](LebesgueExponent p) { return std::pow(vol, p.reciprocal()); };
    spec.default_method = TransformMethod::DirectQuadrature;
    return spec;
}

FamilySpec family_S(const FamilyParams& params, const SampledField& base) {
    require(params.id == FamilyId::S, "params built for a different family");
    params.validate();
    if (base.grid.d != params.d)
        throw DimensionMismatchError("scaling base field dimension does not match the family");
    base.validate();

    FamilySpec spec = base_spec(params);
    spec.input_field = dilate(base, params.lambda);
    spec.input_norm_region = Region::box(spec.input_field->grid.lo, spec.input_field->grid.hi);
    spec.target_region = Region::ball(params.d, 1.0);
    spec.default_method = TransformMethod::FastTransform;
    spec.lower_bound_semantics = true;
    return spec;
}

SampledField default_scaling_base(int d) {
    if (d < 1 || d > 2)
        throw InvalidArgumentError("the default scaling base is available for d = 1 and d = 2");
    const std::size_t per_axis = (d == 1) ? 4096 : 512;
    std::vector<double> lo(std::size_t(d), -20.0), hi(std::size_t(d), 20.0);
    std::vector<std::size_t> n(std::size_t(d), per_axis);
    auto grid = GridSpec::make(std::move(lo), std::move(hi), std::move(n));
    return make_field(grid, [](std::span<const double> x) {
        return cd(std::exp(-0.5 * norm_sq(x)));
    });
}

FamilySpec make_family(const FamilyParams& params) {
    switch (params.id) {
        case FamilyId::A: return family_A(params);
        case FamilyId::B: return family_B(params);
        case FamilyId::C: return family_C(params);
        case FamilyId::D: return family_D(params);
        case FamilyId::E: return family_E(params);
        case FamilyId::S: return family_S(params, default_scaling_base(params.d));
    }
    throw InvalidArgumentError("unknown family id");
}

double predicted_exponent(FamilyId id, int d, const ExponentPair& pq) {
    if (d < 1) throw InvalidArgumentError("dimension must be >= 1");
    const double ip = pq.inv_p();
    const double iq = pq.inv_q();
    double unit = 0.0;
    switch (id) {
        case FamilyId::A: unit = ip + iq - 1.0; break;
        case FamilyId::B: unit = 1.0 - ip - iq; break;
        case FamilyId::C: unit = 0.5 - ip; break;
        case FamilyId::D: unit = 2.0 * iq - 1.0; break;
        case FamilyId::E: unit = iq - ip; break;
        case FamilyId::S: unit = 1.0 - ip - iq; break;
    }
    return double(d) * unit;
}

bool family_defeats(FamilyId id, const ExponentPair& pq) {
    return predicted_exponent(id, 1, pq) > 1e-12;
}

}  // namespace fsl
