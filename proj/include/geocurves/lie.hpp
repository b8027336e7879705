#pragma once

#include <Eigen/Dense>

namespace geocurves::lie {

Eigen::Matrix3d hat(const Eigen::Vector3d& w);
Eigen::Vector3d unhat(const Eigen::Matrix3d& skew);

/// Rodrigues formula: exp of the axis-angle vector w.
Eigen::Matrix3d so3_exp(const Eigen::Vector3d& w);

/// Principal log as an axis-angle vector. Rejects rotation angles within
/// 1e-8 of pi, where the axis from the skew part is ill-conditioned; above
/// the switch angle the axis is taken from the symmetric part with the
/// sign fixed by the skew part.
Eigen::Vector3d so3_log(const Eigen::Matrix3d& rot);

double rotation_angle(const Eigen::Matrix3d& rot);

/// V(w) with exp([w]x, u) having translation block V(w) u.
Eigen::Matrix3d se3_v_matrix(const Eigen::Vector3d& w);
Eigen::Matrix3d se3_v_inverse(const Eigen::Vector3d& w);

// --- symmetric 2x2 kernels -------------------------------------------------

struct SymEig2 {
    Eigen::Vector2d values;
    Eigen::Matrix2d vectors; // columns
};

SymEig2 sym_eig2(const Eigen::Matrix2d& s);

/// f applied to the eigenvalues of a symmetric matrix.
Eigen::Matrix2d sym_apply(const Eigen::Matrix2d& s, double (*f)(double));

Eigen::Matrix2d spd_pow(const Eigen::Matrix2d& s, double p);
Eigen::Matrix2d spd_log(const Eigen::Matrix2d& s);
Eigen::Matrix2d sym_exp(const Eigen::Matrix2d& s);
Eigen::Matrix2d spd_sqrt(const Eigen::Matrix2d& s);
Eigen::Matrix2d spd_inv_sqrt(const Eigen::Matrix2d& s);

} // namespace geocurves::lie
