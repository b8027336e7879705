#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geocurves/space.hpp"

namespace geocurves {

/// Ordered control points, all in one space, with optional positive weights.
struct ControlPolygon {
    std::vector<SpacePoint> points;
    std::optional<std::vector<double>> weights;

    int degree() const { return static_cast<int>(points.size()) - 1; }
};

ControlPolygon make_polygon(const Space& space, std::vector<SpacePoint> points,
                            std::optional<std::vector<double>> weights = std::nullopt);
void validate_polygon(const Space& space, const ControlPolygon& poly);

/// Full triangular scheme of one evaluation; row 0 is the control polygon,
/// row r has n-r+1 entries, the last row holds the curve point. Rational
/// evaluations additionally record the blended weights and the modified
/// parameters of every step.
struct DeCasteljauTrace {
    std::vector<std::vector<SpacePoint>> points;
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> params;
};

/// Iterated affine maps over the triangular scheme; the degree-n curve point
/// at t. Interpolates the endpoints exactly.
SpacePoint de_casteljau(const Space& space, const ControlPolygon& poly, double t,
                        DeCasteljauTrace* trace = nullptr);

/// Weighted scheme: each step blends the weights affinely and walks to the
/// modified parameter t * w_next / w_blend. Equal weights reduce to the
/// plain scheme.
SpacePoint rational_de_casteljau(const Space& space, const ControlPolygon& poly, double t,
                                 DeCasteljauTrace* trace = nullptr);

/// Split at s in (0,1) into two polygons tracing the same curve on [0,s]
/// and [s,1] (exactly so wherever the affine map satisfies the subdivision
/// commutation condition).
std::pair<ControlPolygon, ControlPolygon> split(const Space& space, const ControlPolygon& poly,
                                                double s);

/// d(lhs, rhs) of the subdivision commutation identity
/// Phi_s(Phi_tau(x,y), Phi_tau(y,z)) = Phi_tau(Phi_s(x,y), Phi_s(y,z));
/// zero in Euclidean space.
double condition1_defect(const Space& space, const SpacePoint& x, const SpacePoint& y,
                         const SpacePoint& z, double s, double tau);

/// Geodesic Aitken-Neville interpolation of points at strictly increasing
/// nodes 0 = t_0 < ... < t_n = 1. Spaces whose geodesics do not extend
/// beyond [0,1] reject the extrapolating steps this recursion needs.
SpacePoint aitken_neville(const Space& space, std::span<const double> nodes,
                          std::span<const SpacePoint> points, double t);

struct Ball {
    SpacePoint center;
    double radius = 0.0;
};

enum class WeightMode { attract, avoid };

/// Weights from distances to an obstacle ball: reciprocal distance for
/// attract (rejecting points inside the ball), distance plus a floor for
/// avoid. The floor epsilon is 1e-9.
std::vector<double> distance_weights(const Space& space, std::span<const SpacePoint> points,
                                     const Ball& obstacle, WeightMode mode);

} // namespace geocurves
