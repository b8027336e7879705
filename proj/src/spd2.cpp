#include "geocurves/spd2.hpp"

#include <cmath>

#include "geocurves/lie.hpp"

namespace geocurves {

namespace {

Eigen::Matrix2d unflatten(const Eigen::VectorXd& coords) {
    Eigen::Matrix2d m;
    m << coords[0], coords[1], coords[2], coords[3];
    return m;
}

Eigen::VectorXd flatten(const Eigen::Matrix2d& m) {
    Eigen::VectorXd coords(4);
    coords << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
    return coords;
}

Eigen::Matrix2d sym(const Eigen::Matrix2d& m) { return 0.5 * (m + m.transpose()); }

} // namespace

SpacePoint spd2_point(const Eigen::Matrix2d& m) { return {SpaceKind::spd2, flatten(m)}; }

Eigen::Matrix2d spd2_matrix(const SpacePoint& p) { return unflatten(p.coords); }

Eigen::Matrix2d spd2_mean_closed_form(const Eigen::Matrix2d& x, const Eigen::Matrix2d& y) {
    const Eigen::Matrix2d s = x + y;
    return s / std::sqrt(s.determinant());
}

Spd2Space::Spd2Space()
    : Space(SpaceKind::spd2, 4,
            SpaceCaps{.has_log_exp = true, .is_unique_geodesic = true, .satisfies_condition_1 = false},
            "symmetric positive definite with determinant one") {}

void Spd2Space::do_validate(const SpacePoint& p) const {
    const Eigen::Matrix2d m = unflatten(p.coords);
    if (std::abs(m(0, 1) - m(1, 0)) > 1e-12)
        throw ValidationError("spd2 point: matrix is not symmetric");
    const auto eig = lie::sym_eig2(m);
    if (!(eig.values[0] > 0.0))
        throw ValidationError("spd2 point: matrix is not positive definite");
    if (std::abs(m.determinant() - 1.0) > 1e-10)
        throw ValidationError("spd2 point: determinant differs from one");
}

void Spd2Space::do_validate_tangent(const TangentVector& v) const {
    Space::do_validate_tangent(v);
    const Eigen::Matrix2d m = unflatten(v.vec);
    const double scale = std::max(1.0, m.norm());
    if (std::abs(m(0, 1) - m(1, 0)) > 1e-10 * scale)
        throw ValidationError("spd2 tangent: matrix is not symmetric");
    const Eigen::Matrix2d base = unflatten(v.base.coords);
    // tangent to the det-one sheet: trace(x^-1 v) = 0
    if (std::abs((base.inverse() * m).trace()) > 1e-10 * scale)
        throw ValidationError("spd2 tangent: not tangent to the determinant-one sheet");
}

double Spd2Space::do_distance(const SpacePoint& x, const SpacePoint& y) const {
    const Eigen::Matrix2d xis = lie::spd_inv_sqrt(unflatten(x.coords));
    const Eigen::Matrix2d m = sym(xis * unflatten(y.coords) * xis);
    return lie::spd_log(m).norm();
}

SpacePoint Spd2Space::do_affine(double t, const SpacePoint& x, const SpacePoint& y) const {
    return do_geodesic(t, x, y);
}

SpacePoint Spd2Space::do_geodesic(double t, const SpacePoint& x, const SpacePoint& y) const {
    const Eigen::Matrix2d xs = lie::spd_sqrt(unflatten(x.coords));
    const Eigen::Matrix2d xis = lie::spd_inv_sqrt(unflatten(x.coords));
    const Eigen::Matrix2d m = sym(xis * unflatten(y.coords) * xis);
    return {kind(), flatten(sym(xs * lie::spd_pow(m, t) * xs))};
}

TangentVector Spd2Space::do_log(const SpacePoint& x, const SpacePoint& y) const {
    const Eigen::Matrix2d xs = lie::spd_sqrt(unflatten(x.coords));
    const Eigen::Matrix2d xis = lie::spd_inv_sqrt(unflatten(x.coords));
    const Eigen::Matrix2d m = sym(xis * unflatten(y.coords) * xis);
    return {x, flatten(sym(xs * lie::spd_log(m) * xs))};
}

SpacePoint Spd2Space::do_exp(const TangentVector& v) const {
    const Eigen::Matrix2d xs = lie::spd_sqrt(unflatten(v.base.coords));
    const Eigen::Matrix2d xis = lie::spd_inv_sqrt(unflatten(v.base.coords));
    const Eigen::Matrix2d m = sym(xis * unflatten(v.vec) * xis);
    return {kind(), flatten(sym(xs * lie::sym_exp(m) * xs))};
}

double Spd2Space::do_tangent_norm(const TangentVector& v) const {
    const Eigen::Matrix2d xis = lie::spd_inv_sqrt(unflatten(v.base.coords));
    return sym(xis * unflatten(v.vec) * xis).norm();
}

} // namespace geocurves
