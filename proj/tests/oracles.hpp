#pragma once

// Independent reference implementations the tests check the library
// against. Everything here deliberately avoids the code paths under test:
// Bernstein values come from the binomial formula, spline values from the
// Cox-de Boor basis recursion, matrix exponentials from a truncated series
// with scaling and squaring.

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

namespace oracles {

inline double binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int j = 0; j < k; ++j) c = c * static_cast<double>(n - j) / static_cast<double>(j + 1);
    return std::round(c);
}

inline double bernstein_formula(int i, int n, double t) {
    return binomial_exact(n, i) * std::pow(t, i) * std::pow(1.0 - t, n - i);
}

// classical Bezier value as the Bernstein-weighted point average
inline Eigen::VectorXd bezier_bernstein_form(const std::vector<Eigen::VectorXd>& pts, double t) {
    const int n = static_cast<int>(pts.size()) - 1;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(pts.front().size());
    for (int i = 0; i <= n; ++i) acc += bernstein_formula(i, n, t) * pts[static_cast<size_t>(i)];
    return acc;
}

// classical rational Bezier quotient
inline Eigen::VectorXd rational_quotient_form(const std::vector<Eigen::VectorXd>& pts,
                                              const std::vector<double>& w, double t) {
    const int n = static_cast<int>(pts.size()) - 1;
    Eigen::VectorXd num = Eigen::VectorXd::Zero(pts.front().size());
    double den = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double c = w[static_cast<size_t>(i)] * bernstein_formula(i, n, t);
        num += c * pts[static_cast<size_t>(i)];
        den += c;
    }
    return num / den;
}

// Lagrange interpolation through (nodes[i], pts[i])
inline Eigen::VectorXd lagrange_form(const std::vector<double>& nodes,
                                     const std::vector<Eigen::VectorXd>& pts, double t) {
    const size_t n = nodes.size();
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(pts.front().size());
    for (size_t i = 0; i < n; ++i) {
        double basis = 1.0;
        for (size_t j = 0; j < n; ++j)
            if (j != i) basis *= (t - nodes[j]) / (nodes[i] - nodes[j]);
        acc += basis * pts[i];
    }
    return acc;
}

// Cox-de Boor basis functions N_{i,m}(t) over the given knots, with the
// last parameter value treated as part of the final nonempty span.
inline std::vector<double> bspline_basis(const std::vector<double>& knots, int degree,
                                         int control_count, double t) {
    const int n = control_count - 1;
    std::vector<double> basis(static_cast<size_t>(control_count), 0.0);

    int span = degree;
    if (t >= knots[static_cast<size_t>(n) + 1]) {
        span = n;
        while (span > degree && knots[static_cast<size_t>(span)] == knots[static_cast<size_t>(span) + 1]) --span;
    } else {
        while (span < n && t >= knots[static_cast<size_t>(span) + 1]) ++span;
    }

    std::vector<double> local(static_cast<size_t>(degree) + 1, 0.0);
    std::vector<double> left(static_cast<size_t>(degree) + 1, 0.0);
    std::vector<double> right(static_cast<size_t>(degree) + 1, 0.0);
    local[0] = 1.0;
    for (int j = 1; j <= degree; ++j) {
        left[static_cast<size_t>(j)] = t - knots[static_cast<size_t>(span + 1 - j)];
        right[static_cast<size_t>(j)] = knots[static_cast<size_t>(span + j)] - t;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double den = right[static_cast<size_t>(r) + 1] + left[static_cast<size_t>(j - r)];
            const double tmp = (den != 0.0) ? local[static_cast<size_t>(r)] / den : 0.0;
            local[static_cast<size_t>(r)] = saved + right[static_cast<size_t>(r) + 1] * tmp;
            saved = left[static_cast<size_t>(j - r)] * tmp;
        }
        local[static_cast<size_t>(j)] = saved;
    }
    for (int i = 0; i <= degree; ++i)
        basis[static_cast<size_t>(span - degree + i)] = local[static_cast<size_t>(i)];
    return basis;
}

inline Eigen::VectorXd bspline_basis_form(const std::vector<double>& knots, int degree,
                                          const std::vector<Eigen::VectorXd>& pts, double t) {
    const std::vector<double> basis =
        bspline_basis(knots, degree, static_cast<int>(pts.size()), t);
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(pts.front().size());
    for (size_t i = 0; i < pts.size(); ++i) acc += basis[i] * pts[i];
    return acc;
}

// matrix exponential by Taylor series with scaling and squaring
inline Eigen::MatrixXd expm_series(const Eigen::MatrixXd& a) {
    int squarings = 0;
    double norm = a.norm();
    Eigen::MatrixXd scaled = a;
    while (norm > 0.25) {
        scaled /= 2.0;
        norm /= 2.0;
        ++squarings;
    }
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

// ---------------------------------------------------------------------------
// deterministic random data

class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

    double gauss() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }

    Eigen::VectorXd vector(int dim, double scale = 1.0) {
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) v[i] = scale * gauss();
        return v;
    }

    Eigen::Vector3d unit3() {
        Eigen::Vector3d v;
        do {
            v = {gauss(), gauss(), gauss()};
        } while (v.norm() < 1e-6);
        return v.normalized();
    }

    /// unit vector within geodesic distance `radius` of `center`
    Eigen::Vector3d sphere_point_near(const Eigen::Vector3d& center, double radius) {
        Eigen::Vector3d tangent;
        do {
            tangent = unit3();
            tangent -= tangent.dot(center) * center;
        } while (tangent.norm() < 1e-6);
        tangent.normalize();
        const double theta = uniform(0.0, radius);
        return std::cos(theta) * center + std::sin(theta) * tangent;
    }

    Eigen::Matrix3d rotation() {
        const Eigen::Vector3d axis = unit3();
        const double angle = uniform(0.0, 3.0);
        return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
    }

    /// random symmetric positive definite 2x2 with determinant one
    Eigen::Matrix2d spd2(double spread = 1.0) {
        Eigen::Matrix2d g;
        const double a = spread * gauss(), b = spread * gauss();
        g << a, b, b, -a; // traceless symmetric => det(exp) = 1
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(g);
        Eigen::Vector2d expvals = eig.eigenvalues().array().exp();
        return eig.eigenvectors() * expvals.asDiagonal() * eig.eigenvectors().transpose();
    }

    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

} // namespace oracles
