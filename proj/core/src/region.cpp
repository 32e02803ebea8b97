#include "fsl/region.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fsl {

namespace {

void check_dim(int d) {
    if (d < 1) throw InvalidArgumentError("region dimension must be >= 1, got " + std::to_string(d));
}

void check_box(const std::vector<double>& lo, const std::vector<double>& hi) {
    if (lo.empty() || lo.size() != hi.size())
        throw DimensionMismatchError("box bounds have sizes " + std::to_string(lo.size()) +
                                     " and " + std::to_string(hi.size()));
    for (std::size_t k = 0; k < lo.size(); ++k) {
        if (!std::isfinite(lo[k]) || !std::isfinite(hi[k]) || !(lo[k] < hi[k]))
            throw InvalidArgumentError("box needs finite lo < hi on every axis");
    }
}

double radius_sq(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

}  // namespace

Region Region::box(std::vector<double> lo, std::vector<double> hi) {
    check_box(lo, hi);
    Region r;
    r.kind_ = RegionKind::Box;
    r.d_ = int(lo.size());
    r.lo_ = std::move(lo);
    r.hi_ = std::move(hi);
    return r;
}

Region Region::cube(int d, double lo, double hi) {
    check_dim(d);
    return box(std::vector<double>(std::size_t(d), lo), std::vector<double>(std::size_t(d), hi));
}

Region Region::ball(int d, double radius) {
    check_dim(d);
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidArgumentError("ball radius must be positive and finite");
    Region r;
    r.kind_ = RegionKind::Ball;
    r.d_ = d;
    r.r_outer_ = radius;
    return r;
}

Region Region::shell(int d, double r_inner, double r_outer) {
    check_dim(d);
    if (!(r_inner >= 0.0) || !(r_inner < r_outer) || !std::isfinite(r_outer))
        throw InvalidArgumentError("shell needs 0 <= r_inner < r_outer < inf");
    Region r;
    r.kind_ = RegionKind::Shell;
    r.d_ = d;
    r.r_inner_ = r_inner;
    r.r_outer_ = r_outer;
    return r;
}

Region Region::ball_complement(int d, double radius) {
    Region r = ball(d, radius);
    r.kind_ = RegionKind::BallComplement;
    r.r_inner_ = radius;
    return r;
}

Region Region::box_complement(std::vector<double> lo, std::vector<double> hi) {
    Region r = box(std::move(lo), std::move(hi));
    r.kind_ = RegionKind::BoxComplement;
    return r;
}

bool Region::contains(std::span<const double> x) const {
    if (int(x.size()) != d_)
        throw DimensionMismatchError("point has dimension " + std::to_string(x.size()) +
                                     ", region has " + std::to_string(d_));
    switch (kind_) {
        case RegionKind::Box:
            for (int k = 0; k < d_; ++k)
                if (!(lo_[std::size_t(k)] <= x[std::size_t(k)] &&
                      x[std::size_t(k)] < hi_[std::size_t(k)]))
                    return false;
            return true;
        case RegionKind::BoxComplement:
            for (int k = 0; k < d_; ++k)
                if (!(lo_[std::size_t(k)] <= x[std::size_t(k)] &&
                      x[std::size_t(k)] < hi_[std::size_t(k)]))
                    return true;
            return false;
        case RegionKind::Ball:
            return radius_sq(x) < r_outer_ * r_outer_;
        case RegionKind::Shell: {
            const double s = radius_sq(x);
            return r_inner_ * r_inner_ < s && s < r_outer_ * r_outer_;
        }
        case RegionKind::BallComplement:
            return radius_sq(x) >= r_inner_ * r_inner_;
    }
    return false;
}

Region Region::bounding_box() const {
    switch (kind_) {
        case RegionKind::Box:
            return *this;
        case RegionKind::Ball:
        case RegionKind::Shell:
            return Region::cube(d_, -r_outer_, r_outer_);
        default:
            throw UnboundedRegionError("bounding box of a complement region");
    }
}

double unit_ball_volume(int d) {
    check_dim(d);
    if (d == 1) return 2.0;
    if (d == 2) return std::numbers::pi;
    return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double region_volume(const Region& region) {
    switch (region.kind()) {
        case RegionKind::Box: {
            double v = 1.0;
            for (int k = 0; k < region.dim(); ++k)
                v *= region.hi()[std::size_t(k)] - region.lo()[std::size_t(k)];
            return v;
        }
        case RegionKind::Ball:
            return unit_ball_volume(region.dim()) *
                   std::pow(region.r_outer(), double(region.dim()));
        case RegionKind::Shell: {
            const double w = unit_ball_volume(region.dim());
            return w * std::pow(region.r_outer(), double(region.dim())) -
                   w * std::pow(region.r_inner(), double(region.dim()));
        }
        default:
            throw UnboundedRegionError("volume of a complement region");
    }
}

bool region_contains(const Region& region, std::span<const double> x) {
    return region.contains(x);
}

}  // namespace fsl
