#ifndef FSL_REGION_HPP
#define FSL_REGION_HPP

#include <span>
#include <vector>

#include "fsl/errors.hpp"

namespace fsl {

enum class RegionKind { Box, Ball, Shell, BallComplement, BoxComplement };

/// A measurable subset of R^d used for restricting norms and masking grids.
///
/// Membership conventions:
///   Box:            lo_k <= x_k < hi_k for every axis
///   Ball:           |x| < r
///   Shell:          r_inner < |x| < r_outer
///   BallComplement: |x| >= r
///   BoxComplement:  complement of the Box rule
class Region {
public:
    /// Zero-dimensional empty box; a real region comes from the factories.
    Region() = default;

    static Region box(std::vector<double> lo, std::vector<double> hi);
    /// Axis-aligned cube [lo, hi)^d.
    static Region cube(int d, double lo, double hi);
    static Region ball(int d, double radius);
    static Region shell(int d, double r_inner, double r_outer);
    static Region ball_complement(int d, double radius);
    static Region box_complement(std::vector<double> lo, std::vector<double> hi);

    RegionKind kind() const { return kind_; }
    int dim() const { return d_; }
    bool bounded() const {
        return kind_ == RegionKind::Box || kind_ == RegionKind::Ball ||
               kind_ == RegionKind::Shell;
    }

    bool contains(std::span<const double> x) const;

    // Box accessors (valid for Box/BoxComplement).
    const std::vector<double>& lo() const { return lo_; }
    const std::vector<double>& hi() const { return hi_; }
    // Radial accessors (valid for Ball/Shell/BallComplement).
    double r_inner() const { return r_inner_; }
    double r_outer() const { return r_outer_; }

    /// Smallest axis-aligned box [lo, hi) containing the region.
    /// Throws UnboundedRegionError for complements.
    Region bounding_box() const;

private:
    RegionKind kind_ = RegionKind::Box;
    int d_ = 0;
    std::vector<double> lo_, hi_;     // boxes
    double r_inner_ = 0.0;            // shells
    double r_outer_ = 0.0;            // balls, shells
};

/// Exact Lebesgue volume. Boxes use the product formula; balls and shells use
/// omega_d r^d with omega_1 = 2 and omega_2 = pi written out exactly and the
/// gamma-function formula for d >= 3. Shell volume is computed as the
/// difference of the two ball volumes. Throws UnboundedRegionError for
/// complement regions.
double region_volume(const Region& region);

/// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

bool region_contains(const Region& region, std::span<const double> x);

}  // namespace fsl

#endif  // FSL_REGION_HPP
