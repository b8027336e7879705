#pragma once

#include "geocurves/space.hpp"

namespace geocurves {

/// Euclidean motion group of rigid-body poses, stored as 4x4 matrices in the
/// block form
///
///     | 1  0 |
///     | b  R |        R in SO(3), b in R^3,
///
/// flattened row-major into 16 coordinates. Geodesics are the left-translated
/// one-parameter subgroups t -> x exp(t log(x^-1 y)); the distance is the
/// norm sqrt(theta^2 + |u|^2) of the principal log, with theta the rotation
/// angle and u the translation block of the log.
class MotionGroupSpace final : public Space {
public:
    MotionGroupSpace();

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

// pose/matrix helpers shared with the CLI and bindings

SpacePoint e3_point(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation);
Eigen::Matrix4d e3_matrix(const SpacePoint& p);
SpacePoint e3_from_matrix(const Eigen::Matrix4d& m);
Eigen::Matrix3d e3_rotation(const SpacePoint& p);
Eigen::Vector3d e3_translation(const SpacePoint& p);
SpacePoint e3_compose(const SpacePoint& a, const SpacePoint& b);
SpacePoint e3_inverse(const SpacePoint& a);

/// exp/log between the group and its Lie algebra, both in the block form above.
Eigen::Matrix4d se3_exp(const Eigen::Matrix4d& alg);
Eigen::Matrix4d se3_log(const Eigen::Matrix4d& grp);

} // namespace geocurves
