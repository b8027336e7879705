#include "geocurves/e3.hpp"

#include <cmath>
#include <numbers>

#include "geocurves/lie.hpp"

namespace geocurves {

namespace {

Eigen::Matrix4d unflatten(const Eigen::VectorXd& coords) {
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m(r, c) = coords[4 * r + c];
    return m;
}

Eigen::VectorXd flatten(const Eigen::Matrix4d& m) {
    Eigen::VectorXd coords(16);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            coords[4 * r + c] = m(r, c);
    return coords;
}

Eigen::Matrix3d rot_block(const Eigen::Matrix4d& m) { return m.block<3, 3>(1, 1); }
Eigen::Vector3d trans_block(const Eigen::Matrix4d& m) { return m.block<3, 1>(1, 0); }

Eigen::Matrix4d group_inverse(const Eigen::Matrix4d& m) {
    Eigen::Matrix4d inv = Eigen::Matrix4d::Zero();
    inv(0, 0) = 1.0;
    const Eigen::Matrix3d rt = rot_block(m).transpose();
    inv.block<3, 3>(1, 1) = rt;
    inv.block<3, 1>(1, 0) = -rt * trans_block(m);
    return inv;
}

} // namespace

SpacePoint e3_point(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 1.0;
    m.block<3, 3>(1, 1) = rotation;
    m.block<3, 1>(1, 0) = translation;
    return {SpaceKind::e3, flatten(m)};
}

Eigen::Matrix4d e3_matrix(const SpacePoint& p) { return unflatten(p.coords); }

SpacePoint e3_from_matrix(const Eigen::Matrix4d& m) { return {SpaceKind::e3, flatten(m)}; }

Eigen::Matrix3d e3_rotation(const SpacePoint& p) { return rot_block(unflatten(p.coords)); }

Eigen::Vector3d e3_translation(const SpacePoint& p) { return trans_block(unflatten(p.coords)); }

SpacePoint e3_compose(const SpacePoint& a, const SpacePoint& b) {
    const Eigen::Matrix4d ma = unflatten(a.coords), mb = unflatten(b.coords);
    const Eigen::Matrix3d rot = rot_block(ma) * rot_block(mb);
    const Eigen::Vector3d trans = trans_block(ma) + rot_block(ma) * trans_block(mb);
    return e3_point(rot, trans);
}

SpacePoint e3_inverse(const SpacePoint& a) {
    return e3_from_matrix(group_inverse(unflatten(a.coords)));
}

Eigen::Matrix4d se3_exp(const Eigen::Matrix4d& alg) {
    const Eigen::Vector3d w = lie::unhat(alg.block<3, 3>(1, 1));
    const Eigen::Vector3d u = alg.block<3, 1>(1, 0);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 1.0;
    m.block<3, 3>(1, 1) = lie::so3_exp(w);
    m.block<3, 1>(1, 0) = lie::se3_v_matrix(w) * u;
    return m;
}

Eigen::Matrix4d se3_log(const Eigen::Matrix4d& grp) {
    const Eigen::Vector3d w = lie::so3_log(rot_block(grp));
    const Eigen::Vector3d u = lie::se3_v_inverse(w) * trans_block(grp);
    Eigen::Matrix4d alg = Eigen::Matrix4d::Zero();
    alg.block<3, 3>(1, 1) = lie::hat(w);
    alg.block<3, 1>(1, 0) = u;
    return alg;
}

MotionGroupSpace::MotionGroupSpace()
    : Space(SpaceKind::e3, 16,
            SpaceCaps{.has_log_exp = true, .is_unique_geodesic = true, .satisfies_condition_1 = false},
            "relative rotation angle strictly below pi") {}

void MotionGroupSpace::do_validate(const SpacePoint& p) const {
    const Eigen::Matrix4d m = unflatten(p.coords);
    if (m(0, 0) != 1.0 || m(0, 1) != 0.0 || m(0, 2) != 0.0 || m(0, 3) != 0.0)
        throw ValidationError("e3 pose: first row must be exactly (1, 0, 0, 0)");
    const Eigen::Matrix3d rot = rot_block(m);
    if ((rot.transpose() * rot - Eigen::Matrix3d::Identity()).norm() > 1e-10)
        throw ValidationError("e3 pose: rotation block is not orthogonal");
    if (std::abs(rot.determinant() - 1.0) > 1e-10)
        throw ValidationError("e3 pose: rotation block determinant is not +1");
}

void MotionGroupSpace::do_validate_tangent(const TangentVector& v) const {
    Space::do_validate_tangent(v);
    const Eigen::Matrix4d alg = unflatten(v.vec);
    const double tol = 1e-10 * std::max(1.0, v.vec.norm());
    if (alg.row(0).norm() > tol)
        throw ValidationError("e3 tangent: first row of the Lie-algebra matrix must vanish");
    const Eigen::Matrix3d s = alg.block<3, 3>(1, 1) + alg.block<3, 3>(1, 1).transpose();
    if (s.norm() > tol)
        throw ValidationError("e3 tangent: rotation block must be skew-symmetric");
}

double MotionGroupSpace::do_distance(const SpacePoint& x, const SpacePoint& y) const {
    const Eigen::Matrix4d rel = group_inverse(unflatten(x.coords)) * unflatten(y.coords);
    const Eigen::Matrix4d alg = se3_log(rel);
    const Eigen::Vector3d w = lie::unhat(alg.block<3, 3>(1, 1));
    const Eigen::Vector3d u = alg.block<3, 1>(1, 0);
    return std::sqrt(w.squaredNorm() + u.squaredNorm());
}

SpacePoint MotionGroupSpace::do_affine(double t, const SpacePoint& x, const SpacePoint& y) const {
    return do_geodesic(t, x, y);
}

SpacePoint MotionGroupSpace::do_geodesic(double t, const SpacePoint& x, const SpacePoint& y) const {
    const Eigen::Matrix4d mx = unflatten(x.coords);
    const Eigen::Matrix4d alg = se3_log(group_inverse(mx) * unflatten(y.coords));
    return e3_from_matrix(mx * se3_exp(t * alg));
}

TangentVector MotionGroupSpace::do_log(const SpacePoint& x, const SpacePoint& y) const {
    const Eigen::Matrix4d alg =
        se3_log(group_inverse(unflatten(x.coords)) * unflatten(y.coords));
    return {x, flatten(alg)};
}

SpacePoint MotionGroupSpace::do_exp(const TangentVector& v) const {
    const Eigen::Matrix4d alg = unflatten(v.vec);
    const Eigen::Vector3d w = lie::unhat(alg.block<3, 3>(1, 1));
    if (w.norm() >= std::numbers::pi - 1e-8)
        throw DomainError("e3 exp: rotation part at or beyond the principal-log domain");
    return e3_from_matrix(unflatten(v.base.coords) * se3_exp(alg));
}

double MotionGroupSpace::do_tangent_norm(const TangentVector& v) const {
    const Eigen::Matrix4d alg = unflatten(v.vec);
    const Eigen::Vector3d w = lie::unhat(alg.block<3, 3>(1, 1));
    const Eigen::Vector3d u = alg.block<3, 1>(1, 0);
    return std::sqrt(w.squaredNorm() + u.squaredNorm());
}

} // namespace geocurves
