#pragma once

#include "geocurves/space.hpp"

namespace geocurves {

/// Unit sphere S^2 in R^3. Valid pairs are non-antipodal; weighted means
/// additionally need all points in an open ball of radius < pi/4.
class SphereSpace final : public Space {
public:
    SphereSpace();

    void check_mean_domain(std::span<const SpacePoint> points) const override;

protected:
    double do_distance(const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_affine(double t, const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_geodesic(double t, const SpacePoint& x, const SpacePoint& y) const override;
    TangentVector do_log(const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_exp(const TangentVector& v) const override;
    void do_validate(const SpacePoint& p) const override;
    void do_validate_tangent(const TangentVector& v) const override;
};

} // namespace geocurves
