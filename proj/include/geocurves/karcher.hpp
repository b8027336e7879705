#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geocurves/sample.hpp"
#include "geocurves/space.hpp"

namespace geocurves {

/// Points with nonnegative weights summing to one; the data of the weighted
/// least-squares-of-distance minimization.
struct WeightedMeanProblem {
    std::vector<SpacePoint> points;
    std::vector<double> weights;
};

WeightedMeanProblem make_problem(const Space& space, std::vector<SpacePoint> points,
                                 std::vector<double> weights);

struct KarcherSolution {
    SpacePoint point;
    double residual = 0.0; // norm of the weighted sum of logs at the solution
    int iterations = 0;
    double cost = 0.0; // weighted sum of squared distances at the solution
};

struct KarcherOptions {
    double tolerance = 1e-12;
    int max_iterations = 200;
};

/// Fixed-point iteration q <- exp_q(sum_i w_i log_q p_i) down to the
/// residual tolerance. Zero-weight points are dropped; a single surviving
/// point short-circuits. Throws SolverError on non-convergence.
KarcherSolution karcher_mean(const Space& space, const WeightedMeanProblem& problem,
                             const std::optional<SpacePoint>& init = std::nullopt,
                             const KarcherOptions& options = {});

double mean_cost(const Space& space, const WeightedMeanProblem& problem, const SpacePoint& q);

/// Weighted mean with Bernstein weights B_i^n(t): the centroid curve of the
/// control points. Interpolates the endpoints exactly (degenerate weight
/// rows short-circuit without solving). `warm` seeds the solver; the
/// default cold start is the de Casteljau point at the same t.
SpacePoint centroid_curve(const Space& space, std::span<const SpacePoint> points, double t,
                          const std::optional<SpacePoint>& warm = std::nullopt);

/// Uniform samples of the centroid curve. Cold starts are independent per
/// parameter (safe to parallelize); warm starts chain the previous solution
/// and are inherently sequential.
std::vector<CurveSample> sample_centroid(const Space& space, std::span<const SpacePoint> points,
                                         int m, bool warm_start = true);

struct EndpointTangentCheck {
    TangentVector fd;    // one-sided finite difference mapped through log at the endpoint
    TangentVector exact; // n log_{p0} p1, resp. -n log_{pn} p_{n-1}
    double defect = 0.0;
};

/// First-order check of the centroid curve's endpoint velocity against the
/// closed form; the defect decays like h.
EndpointTangentCheck endpoint_tangent_check(const Space& space,
                                            std::span<const SpacePoint> points, double h,
                                            bool at_end = false);

struct CasteljauLowerBounds {
    double energy = 0.0; // weighted cost at x with Bernstein weights
    double bound1 = 0.0; // (t(1-t))^n (sum_i C(n,i) d(x,p_i))^2
    double bound2 = 0.0; // (t(1-t))^n (sum_i C(n-1,i) d(p_i,p_{i+1}))^2
};

CasteljauLowerBounds casteljau_lower_bounds(const Space& space,
                                            std::span<const SpacePoint> points, double t,
                                            const SpacePoint& x);

/// Minimum of the stage-r energy over the de Casteljau intermediate points,
/// for r = 1..n; the sequence is nondecreasing in r.
std::vector<double> stagewise_energies(const Space& space, std::span<const SpacePoint> points,
                                       double t);

/// Minimizer of the weighted sum of plain (unsquared) distances on a
/// segment: p0 below t = 1/2, the midpoint at t = 1/2, p1 above.
SpacePoint segment_median(const Space& space, const SpacePoint& p0, const SpacePoint& p1,
                          double t);

/// Quadratic on an equilateral spherical triangle of side alpha: the Bezier
/// midpoint in closed form, and the weighted-mean gradient component that
/// stays bounded away from zero along the whole centroid curve, showing the
/// two curves have different images.
struct SphereMidpointReport {
    double alpha = 0.0;
    SpacePoint p_half;            // closed-form Bezier midpoint
    double cos_theta = 0.0;       // (1 + 3 cos a) / (2 + 2 cos a)
    double z = 0.0;               // psi1 sin psi0 / (psi0 sin psi1), < 1
    double min_abs_inner = 0.0;   // min over the s-grid of |<L(s), p2 x p0>|
    double lower_bound = 0.0;     // (1 - z)/4 times the closed-form prefactor
    double casteljau_defect = 0.0;
    bool verdict = false;
    std::vector<SpacePoint> control_points;
};

SphereMidpointReport sphere_counterexample(double alpha);

} // namespace geocurves
