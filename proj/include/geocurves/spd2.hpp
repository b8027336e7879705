#pragma once

#include "geocurves/space.hpp"

namespace geocurves {

/// Symmetric positive definite 2x2 matrices of determinant one, with the
/// affine-invariant metric d(x,y) = |log(x^-1/2 y x^-1/2)|_F. Geodesics have
/// the closed form x (x^-1 y)^s; the midpoint is the geometric mean
/// (x + y) / sqrt(det(x + y)). Points are stored flattened row-major.
class Spd2Space final : public Space {
public:
    Spd2Space();

protected:
    double do_distance(const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_affine(double t, const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_geodesic(double t, const SpacePoint& x, const SpacePoint& y) const override;
    TangentVector do_log(const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_exp(const TangentVector& v) const override;
    double do_tangent_norm(const TangentVector& v) const override;
    void do_validate(const SpacePoint& p) const override;
    void do_validate_tangent(const TangentVector& v) const override;
};

SpacePoint spd2_point(const Eigen::Matrix2d& m);
Eigen::Matrix2d spd2_matrix(const SpacePoint& p);

/// Geometric mean in closed form, (x + y) / sqrt(det(x + y)).
Eigen::Matrix2d spd2_mean_closed_form(const Eigen::Matrix2d& x, const Eigen::Matrix2d& y);

} // namespace geocurves
