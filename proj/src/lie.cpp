#include "geocurves/lie.hpp"

#include <cmath>
#include <numbers>

#include "geocurves/errors.hpp"

namespace geocurves::lie {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPiGuard = 1e-8;

// sin(t)/t and the V-matrix coefficients, series-stabilized near zero
double sinc(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

double one_minus_cos_over_t2(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
    }
    return (1.0 - std::cos(t)) / (t * t);
}

double t_minus_sin_over_t3(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0;
    }
    return (t - std::sin(t)) / (t * t * t);
}

} // namespace

Eigen::Matrix3d hat(const Eigen::Vector3d& w) {
    Eigen::Matrix3d m;
    m << 0.0, -w.z(), w.y(),
         w.z(), 0.0, -w.x(),
        -w.y(), w.x(), 0.0;
    return m;
}

Eigen::Vector3d unhat(const Eigen::Matrix3d& skew) {
    return {skew(2, 1), skew(0, 2), skew(1, 0)};
}

Eigen::Matrix3d so3_exp(const Eigen::Vector3d& w) {
    const double theta = w.norm();
    const Eigen::Matrix3d wx = hat(w);
    return Eigen::Matrix3d::Identity() + sinc(theta) * wx +
           one_minus_cos_over_t2(theta) * (wx * wx);
}

double rotation_angle(const Eigen::Matrix3d& rot) {
    const double s = 0.5 * unhat(rot - rot.transpose()).norm(); // sin(theta)
    const double c = (rot.trace() - 1.0) / 2.0;                 // cos(theta)
    return std::atan2(s, c);
}

Eigen::Vector3d so3_log(const Eigen::Matrix3d& rot) {
    const double theta = rotation_angle(rot);
    if (theta >= kPi - kPiGuard)
        throw DomainError("rotation angle within 1e-8 of pi: principal log rejected");
    const Eigen::Vector3d skew_axis = unhat(rot - rot.transpose()); // 2 sin(theta) * axis
    if (theta < 2.8)
        return (0.5 / sinc(theta)) * skew_axis;
    // near pi: axis magnitudes from the symmetric part, signs from the skew part
    const Eigen::Matrix3d sym = 0.5 * (rot + rot.transpose());
    const double c = std::cos(theta);
    Eigen::Vector3d axis;
    for (int i = 0; i < 3; ++i)
        axis[i] = std::sqrt(std::max(0.0, (sym(i, i) - c) / (1.0 - c)));
    for (int i = 0; i < 3; ++i)
        if (skew_axis[i] < 0.0) axis[i] = -axis[i];
    axis.normalize();
    return theta * axis;
}

Eigen::Matrix3d se3_v_matrix(const Eigen::Vector3d& w) {
    const double theta = w.norm();
    const Eigen::Matrix3d wx = hat(w);
    return Eigen::Matrix3d::Identity() + one_minus_cos_over_t2(theta) * wx +
           t_minus_sin_over_t3(theta) * (wx * wx);
}

Eigen::Matrix3d se3_v_inverse(const Eigen::Vector3d& w) {
    const double theta = w.norm();
    const Eigen::Matrix3d wx = hat(w);
    double coeff;
    if (theta < 1e-4) {
        const double t2 = theta * theta;
        coeff = 1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0;
    } else {
        coeff = 1.0 / (theta * theta) -
                (1.0 + std::cos(theta)) / (2.0 * theta * std::sin(theta));
    }
    return Eigen::Matrix3d::Identity() - 0.5 * wx + coeff * (wx * wx);
}

SymEig2 sym_eig2(const Eigen::Matrix2d& s) {
    const double a = s(0, 0), b = 0.5 * (s(0, 1) + s(1, 0)), c = s(1, 1);
    const double half_trace = 0.5 * (a + c);
    const double delta = std::hypot(0.5 * (a - c), b);
    SymEig2 e;
    e.values = {half_trace - delta, half_trace + delta};
    if (delta < 1e-300) {
        e.vectors = Eigen::Matrix2d::Identity();
        return e;
    }
    // eigenvector for the larger eigenvalue, picked from the better-conditioned row
    Eigen::Vector2d v1;
    if (std::abs(b) > 1e-300) {
        v1 = (std::abs(a - e.values[1]) > std::abs(c - e.values[1]))
                 ? Eigen::Vector2d(b, e.values[1] - a)
                 : Eigen::Vector2d(e.values[1] - c, b);
        v1.normalize();
    } else {
        v1 = (a >= c) ? Eigen::Vector2d(1, 0) : Eigen::Vector2d(0, 1);
    }
    e.vectors.col(1) = v1;
    e.vectors.col(0) = Eigen::Vector2d(-v1.y(), v1.x());
    return e;
}

Eigen::Matrix2d sym_apply(const Eigen::Matrix2d& s, double (*f)(double)) {
    const SymEig2 e = sym_eig2(s);
    Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
    d(0, 0) = f(e.values[0]);
    d(1, 1) = f(e.values[1]);
    Eigen::Matrix2d r = e.vectors * d * e.vectors.transpose();
    return 0.5 * (r + r.transpose());
}

namespace {
void require_spd(const Eigen::Matrix2d& s, const char* what) {
    const SymEig2 e = sym_eig2(s);
    if (!(e.values[0] > 0.0))
        throw DomainError(std::string(what) + " of a matrix that is not positive definite");
}
} // namespace

Eigen::Matrix2d spd_pow(const Eigen::Matrix2d& s, double p) {
    require_spd(s, "fractional power");
    const SymEig2 e = sym_eig2(s);
    Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
    d(0, 0) = std::pow(e.values[0], p);
    d(1, 1) = std::pow(e.values[1], p);
    Eigen::Matrix2d r = e.vectors * d * e.vectors.transpose();
    return 0.5 * (r + r.transpose());
}

Eigen::Matrix2d spd_log(const Eigen::Matrix2d& s) {
    require_spd(s, "logarithm");
    return sym_apply(s, [](double x) { return std::log(x); });
}

Eigen::Matrix2d sym_exp(const Eigen::Matrix2d& s) {
    return sym_apply(s, [](double x) { return std::exp(x); });
}

Eigen::Matrix2d spd_sqrt(const Eigen::Matrix2d& s) {
    return spd_pow(s, 0.5);
}

Eigen::Matrix2d spd_inv_sqrt(const Eigen::Matrix2d& s) {
    return spd_pow(s, -0.5);
}

} // namespace geocurves::lie
