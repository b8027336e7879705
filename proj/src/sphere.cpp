#include "geocurves/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geocurves {

namespace {

constexpr double kAntipodalGuard = 1e-9;

double clamped_inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return std::clamp(a.dot(b), -1.0, 1.0);
}

// well-conditioned at both ends of [0, pi], unlike acos of the inner product
double angle_between(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return 2.0 * std::atan2((a - b).norm(), (a + b).norm());
}

} // namespace

SphereSpace::SphereSpace()
    : Space(SpaceKind::sphere, 3,
            SpaceCaps{.has_log_exp = true, .is_unique_geodesic = true, .satisfies_condition_1 = false},
            "non-antipodal pairs; weighted means need an open ball of radius < pi/4") {}

void SphereSpace::do_validate(const SpacePoint& p) const {
    if (std::abs(p.coords.norm() - 1.0) > 1e-12)
        throw ValidationError("sphere point is not unit norm (|x| = " +
                              std::to_string(p.coords.norm()) + ")");
}

void SphereSpace::do_validate_tangent(const TangentVector& v) const {
    Space::do_validate_tangent(v);
    const double residual = std::abs(v.base.coords.dot(v.vec));
    if (residual > 1e-10 * std::max(1.0, v.vec.norm()))
        throw ValidationError("sphere tangent vector is not orthogonal to its base point");
}

double SphereSpace::do_distance(const SpacePoint& x, const SpacePoint& y) const {
    return angle_between(x.coords, y.coords);
}

SpacePoint SphereSpace::do_affine(double t, const SpacePoint& x, const SpacePoint& y) const {
    return do_geodesic(t, x, y);
}

SpacePoint SphereSpace::do_geodesic(double t, const SpacePoint& x, const SpacePoint& y) const {
    const double ip = clamped_inner(x.coords, y.coords);
    if (ip <= -1.0 + kAntipodalGuard)
        throw DomainError("sphere: antipodal (or nearly antipodal) pair has no unique geodesic");
    const double phi = angle_between(x.coords, y.coords);
    Eigen::VectorXd p;
    if (phi < 1e-12) {
        // nearly coincident: slerp degenerates to normalized lerp, error O(phi^2)
        p = (1.0 - t) * x.coords + t * y.coords;
    } else {
        const double s = std::sin(phi);
        p = (std::sin((1.0 - t) * phi) / s) * x.coords + (std::sin(t * phi) / s) * y.coords;
    }
    p.normalize();
    return {kind(), std::move(p)};
}

TangentVector SphereSpace::do_log(const SpacePoint& x, const SpacePoint& y) const {
    const double ip = clamped_inner(x.coords, y.coords);
    if (ip <= -1.0 + kAntipodalGuard)
        throw DomainError("sphere: log undefined for antipodal (or nearly antipodal) pair");
    const double phi = angle_between(x.coords, y.coords);
    Eigen::VectorXd perp = y.coords - ip * x.coords;
    const double pn = perp.norm();
    if (pn < 1e-15 || phi == 0.0)
        return {x, Eigen::VectorXd::Zero(3)};
    return {x, (phi / pn) * perp};
}

SpacePoint SphereSpace::do_exp(const TangentVector& v) const {
    const double theta = v.vec.norm();
    if (theta >= std::numbers::pi)
        throw DomainError("sphere: tangent vector norm exceeds the injectivity radius pi");
    if (theta < 1e-15) return v.base;
    Eigen::VectorXd p = std::cos(theta) * v.base.coords + (std::sin(theta) / theta) * v.vec;
    p.normalize();
    return {kind(), std::move(p)};
}

void SphereSpace::check_mean_domain(std::span<const SpacePoint> points) const {
    // Necessary condition for containment in an open ball of radius < pi/4:
    // every pairwise distance below pi/2.
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (do_distance(points[i], points[j]) >= std::numbers::pi / 2.0)
                throw DomainError("sphere: point set too spread for a unique weighted mean "
                                  "(pairwise distance >= pi/2)");
}

} // namespace geocurves
