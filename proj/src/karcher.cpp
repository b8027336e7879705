#include "geocurves/karcher.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>

#include "geocurves/bernstein.hpp"
#include "geocurves/bezier.hpp"
#include "geocurves/sphere.hpp"

namespace geocurves {

namespace {

void require_riemannian(const Space& space) {
    if (!space.caps().has_log_exp)
        throw ValidationError(std::string(space.name()) +
                              ": weighted means need log/exp maps");
}

ControlPolygon to_polygon(std::span<const SpacePoint> points) {
    return ControlPolygon{{points.begin(), points.end()}, std::nullopt};
}

} // namespace

WeightedMeanProblem make_problem(const Space& space, std::vector<SpacePoint> points,
                                 std::vector<double> weights) {
    require_riemannian(space);
    if (points.empty()) throw ValidationError("weighted mean needs at least one point");
    if (points.size() != weights.size())
        throw ValidationError("weight count differs from point count");
    for (const auto& p : points) space.validate_point(p);
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw ValidationError("mean weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw ValidationError("mean weights must sum to one (got " + std::to_string(sum) + ")");
    space.check_mean_domain(points);
    return {std::move(points), std::move(weights)};
}

double mean_cost(const Space& space, const WeightedMeanProblem& problem, const SpacePoint& q) {
    double cost = 0.0;
    for (size_t i = 0; i < problem.points.size(); ++i) {
        if (problem.weights[i] == 0.0) continue;
        const double d = space.distance(q, problem.points[i]);
        cost += problem.weights[i] * d * d;
    }
    return cost;
}

KarcherSolution karcher_mean(const Space& space, const WeightedMeanProblem& problem,
                             const std::optional<SpacePoint>& init,
                             const KarcherOptions& options) {
    require_riemannian(space);
    if (problem.points.size() != problem.weights.size())
        throw ValidationError("weight count differs from point count");

    std::vector<size_t> active;
    for (size_t i = 0; i < problem.weights.size(); ++i)
        if (problem.weights[i] != 0.0) active.push_back(i);
    if (active.empty()) throw ValidationError("all mean weights are zero");

    if (active.size() == 1) {
        const SpacePoint& p = problem.points[active.front()];
        return {p, 0.0, 0, 0.0};
    }

    SpacePoint q = [&] {
        if (init) {
            space.validate_point(*init);
            return *init;
        }
        size_t best = active.front();
        for (size_t i : active)
            if (problem.weights[i] > problem.weights[best]) best = i;
        return problem.points[best];
    }();

    const int dim = space.ambient_dim();
    for (int iter = 0; iter <= options.max_iterations; ++iter) {
        Eigen::VectorXd step = Eigen::VectorXd::Zero(dim);
        for (size_t i : active)
            step += problem.weights[i] * space.log(q, problem.points[i]).vec;
        const double residual = space.tangent_norm({q, step});
        if (residual <= options.tolerance)
            return {q, residual, iter, mean_cost(space, problem, q)};
        if (iter == options.max_iterations) break;
        q = space.exp({q, step});
    }
    char msg[128];
    std::snprintf(msg, sizeof(msg), "Karcher iteration did not reach tolerance %g within %d iterations",
                  options.tolerance, options.max_iterations);
    throw SolverError(msg);
}

SpacePoint centroid_curve(const Space& space, std::span<const SpacePoint> points, double t,
                          const std::optional<SpacePoint>& warm) {
    require_riemannian(space);
    if (points.size() < 2) throw ValidationError("centroid curve needs at least two points");
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("centroid parameter must lie in [0,1], got " + std::to_string(t));
    if (t == 0.0) return points.front();
    if (t == 1.0) return points.back();

    const int n = static_cast<int>(points.size()) - 1;
    WeightedMeanProblem problem =
        make_problem(space, {points.begin(), points.end()}, bernstein_row(n, t));
    const SpacePoint seed = warm ? *warm : de_casteljau(space, to_polygon(points), t);
    return karcher_mean(space, problem, seed).point;
}

std::vector<CurveSample> sample_centroid(const Space& space, std::span<const SpacePoint> points,
                                         int m, bool warm_start) {
    std::optional<SpacePoint> previous;
    return sample_curve(
        [&](double t) {
            SpacePoint q = centroid_curve(space, points, t, warm_start ? previous : std::nullopt);
            if (warm_start) previous = q;
            return q;
        },
        m);
}

EndpointTangentCheck endpoint_tangent_check(const Space& space,
                                            std::span<const SpacePoint> points, double h,
                                            bool at_end) {
    if (!(h > 0.0 && h <= 0.1))
        throw ValidationError("finite-difference step must lie in (0, 0.1]");
    if (points.size() < 2) throw ValidationError("tangent check needs at least two points");
    const int n = static_cast<int>(points.size()) - 1;

    EndpointTangentCheck check;
    if (!at_end) {
        const SpacePoint& q0 = points.front();
        const SpacePoint qh = centroid_curve(space, points, h);
        check.fd = {q0, space.log(q0, qh).vec / h};
        check.exact = {q0, static_cast<double>(n) * space.log(points[0], points[1]).vec};
    } else {
        const SpacePoint& q1 = points.back();
        const SpacePoint qh = centroid_curve(space, points, 1.0 - h);
        check.fd = {q1, -space.log(q1, qh).vec / h};
        check.exact = {q1, -static_cast<double>(n) *
                               space.log(points[static_cast<size_t>(n)],
                                         points[static_cast<size_t>(n) - 1])
                                   .vec};
    }
    check.defect = space.tangent_norm({check.fd.base, check.fd.vec - check.exact.vec});
    return check;
}

CasteljauLowerBounds casteljau_lower_bounds(const Space& space,
                                            std::span<const SpacePoint> points, double t,
                                            const SpacePoint& x) {
    if (points.size() < 2) throw ValidationError("lower bounds need at least two points");
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("parameter must lie in [0,1], got " + std::to_string(t));
    space.validate_point(x);
    const int n = static_cast<int>(points.size()) - 1;
    const std::vector<double> b = bernstein_row(n, t);

    CasteljauLowerBounds out;
    double sum1 = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double d = space.distance(x, points[static_cast<size_t>(i)]);
        out.energy += b[static_cast<size_t>(i)] * d * d;
        sum1 += binomial(n, i) * d;
    }
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i)
        sum2 += binomial(n - 1, i) *
                space.distance(points[static_cast<size_t>(i)], points[static_cast<size_t>(i) + 1]);

    const double factor = std::pow(t * (1.0 - t), n);
    out.bound1 = factor * sum1 * sum1;
    out.bound2 = factor * sum2 * sum2;
    return out;
}

std::vector<double> stagewise_energies(const Space& space, std::span<const SpacePoint> points,
                                       double t) {
    require_riemannian(space);
    if (points.size() < 2) throw ValidationError("stagewise energies need at least two points");
    DeCasteljauTrace trace;
    de_casteljau(space, to_polygon(points), t, &trace);
    const int n = static_cast<int>(points.size()) - 1;

    std::vector<double> energies;
    energies.reserve(static_cast<size_t>(n));
    for (int r = 1; r <= n; ++r) {
        // stage-r data: the de Casteljau points of level n-r, Bernstein weights of degree r
        const auto& stage_points = trace.points[static_cast<size_t>(n - r)];
        WeightedMeanProblem problem = make_problem(space, stage_points, bernstein_row(r, t));
        energies.push_back(karcher_mean(space, problem).cost);
    }
    return energies;
}

SpacePoint segment_median(const Space& space, const SpacePoint& p0, const SpacePoint& p1,
                          double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("median parameter must lie in [0,1], got " + std::to_string(t));
    if (std::abs(t - 0.5) <= 1e-12) return space.affine(0.5, p0, p1);
    return (t < 0.5) ? p0 : p1;
}

SphereMidpointReport sphere_counterexample(double alpha) {
    constexpr double kPi = std::numbers::pi;
    if (!(alpha > 0.0 && alpha <= kPi / 2.0))
        throw ValidationError("triangle side must lie in (0, pi/2], got " + std::to_string(alpha));

    const SphereSpace sphere;
    SphereMidpointReport report;
    report.alpha = alpha;

    // vertices with common pairwise angle alpha, symmetric about the z-axis
    const double sin2rho = 2.0 * (1.0 - std::cos(alpha)) / 3.0;
    const double sin_rho = std::sqrt(sin2rho);
    const double cos_rho = std::sqrt(1.0 - sin2rho);
    for (int i = 0; i < 3; ++i) {
        const double az = 2.0 * kPi * i / 3.0;
        Eigen::Vector3d v(sin_rho * std::cos(az), sin_rho * std::sin(az), cos_rho);
        report.control_points.push_back(sphere.make_point(v));
    }
    const Eigen::Vector3d p0 = report.control_points[0].coords;
    const Eigen::Vector3d p1 = report.control_points[1].coords;
    const Eigen::Vector3d p2 = report.control_points[2].coords;

    report.cos_theta = (1.0 + 3.0 * std::cos(alpha)) / (2.0 + 2.0 * std::cos(alpha));
    const double theta = std::acos(std::clamp(report.cos_theta, -1.0, 1.0));
    const double scale = 4.0 * std::cos(theta / 2.0) * std::cos(alpha / 2.0);
    const Eigen::Vector3d half = (p0 + 2.0 * p1 + p2) / scale;
    report.p_half = {SpaceKind::sphere, half};

    const SpacePoint mid =
        de_casteljau(sphere, ControlPolygon{report.control_points, std::nullopt}, 0.5);
    report.casteljau_defect = (mid.coords - half).norm();

    const double cos_psi1 = std::clamp(p1.dot(half), -1.0, 1.0);
    const double cos_psi0 = std::clamp(p0.dot(half), -1.0, 1.0);
    const double psi1 = std::acos(cos_psi1);
    const double psi0 = std::acos(cos_psi0);
    report.z = psi1 * std::sin(psi0) / (psi0 * std::sin(psi1));

    // gradient of the weighted-mean cost at the Bezier midpoint, paired
    // against the normal of the mirror plane
    const Eigen::Vector3d normal = p2.cross(p0);
    const double psi2 = std::acos(std::clamp(p2.dot(half), -1.0, 1.0));
    const std::array<double, 3> psis{psi0, psi1, psi2};
    const std::array<Eigen::Vector3d, 3> verts{p0, p1, p2};
    const std::array<double, 3> cosines{cos_psi0, cos_psi1, std::cos(psi2)};

    report.min_abs_inner = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= 1000; ++j) {
        const double s = static_cast<double>(j) / 1000.0;
        const std::vector<double> b = bernstein_row(2, s);
        Eigen::Vector3d grad = Eigen::Vector3d::Zero();
        for (int i = 0; i < 3; ++i)
            grad += b[static_cast<size_t>(i)] * (psis[static_cast<size_t>(i)] /
                                                 std::sin(psis[static_cast<size_t>(i)])) *
                    (verts[static_cast<size_t>(i)] - cosines[static_cast<size_t>(i)] * half);
        report.min_abs_inner = std::min(report.min_abs_inner, std::abs(grad.dot(normal)));
    }

    const double prefactor = report.cos_theta * p1.dot(p0.cross(p2)) * psi0 /
                             ((1.0 + report.cos_theta) * std::sin(psi0));
    report.lower_bound = 0.25 * (1.0 - report.z) * std::abs(prefactor);

    report.verdict = report.casteljau_defect <= 1e-10 && report.z < 1.0 &&
                     report.min_abs_inner > 1e-8 &&
                     report.min_abs_inner >= report.lower_bound - 1e-12;
    return report;
}

} // namespace geocurves
