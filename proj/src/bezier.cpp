#include "geocurves/bezier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace geocurves {

namespace {
constexpr double kDistanceFloor = 1e-9;

void require_param(double t, const char* name) {
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError(std::string(name) + " must lie in [0,1], got " + std::to_string(t));
}
} // namespace

void validate_polygon(const Space& space, const ControlPolygon& poly) {
    if (poly.points.size() < 2)
        throw ValidationError("control polygon needs at least two points, got " +
                              std::to_string(poly.points.size()));
    for (const auto& p : poly.points) space.validate_point(p);
    if (poly.weights) {
        if (poly.weights->size() != poly.points.size())
            throw ValidationError("weight count differs from control point count");
        for (double w : *poly.weights)
            if (!(w > 0.0)) throw ValidationError("control weights must be strictly positive");
    }
    // pairwise uniqueness domain; the metric itself rejects bad pairs
    for (size_t i = 0; i < poly.points.size(); ++i)
        for (size_t j = i + 1; j < poly.points.size(); ++j)
            space.distance(poly.points[i], poly.points[j]);
}

ControlPolygon make_polygon(const Space& space, std::vector<SpacePoint> points,
                            std::optional<std::vector<double>> weights) {
    ControlPolygon poly{std::move(points), std::move(weights)};
    validate_polygon(space, poly);
    return poly;
}

SpacePoint de_casteljau(const Space& space, const ControlPolygon& poly, double t,
                        DeCasteljauTrace* trace) {
    require_param(t, "de Casteljau parameter");
    if (poly.points.size() < 2)
        throw ValidationError("control polygon needs at least two points");
    if (poly.weights)
        throw ValidationError("plain de Casteljau expects an unweighted polygon");

    std::vector<SpacePoint> row = poly.points;
    if (trace) {
        *trace = {};
        trace->points.push_back(row);
    }
    while (row.size() > 1) {
        for (size_t i = 0; i + 1 < row.size(); ++i)
            row[i] = space.affine(t, row[i], row[i + 1]);
        row.pop_back();
        if (trace) trace->points.push_back(row);
    }
    return row.front();
}

SpacePoint rational_de_casteljau(const Space& space, const ControlPolygon& poly, double t,
                                 DeCasteljauTrace* trace) {
    require_param(t, "rational de Casteljau parameter");
    if (poly.points.size() < 2)
        throw ValidationError("control polygon needs at least two points");
    if (!poly.weights)
        throw ValidationError("rational de Casteljau needs control weights");
    if (poly.weights->size() != poly.points.size())
        throw ValidationError("weight count differs from control point count");
    for (double w : *poly.weights)
        if (!(w > 0.0)) throw ValidationError("control weights must be strictly positive");

    std::vector<SpacePoint> row = poly.points;
    std::vector<double> wrow = *poly.weights;
    if (trace) {
        *trace = {};
        trace->points.push_back(row);
        trace->weights.push_back(wrow);
        trace->params.emplace_back();
    }
    while (row.size() > 1) {
        std::vector<double> tparams;
        for (size_t i = 0; i + 1 < row.size(); ++i) {
            const double wblend = (1.0 - t) * wrow[i] + t * wrow[i + 1];
            // the ratio is <= 1 exactly; min() only absorbs last-ulp rounding
            const double ti = std::min(1.0, t * wrow[i + 1] / wblend);
            row[i] = space.affine(ti, row[i], row[i + 1]);
            wrow[i] = wblend;
            tparams.push_back(ti);
        }
        row.pop_back();
        wrow.pop_back();
        if (trace) {
            trace->points.push_back(row);
            trace->weights.push_back(wrow);
            trace->params.push_back(std::move(tparams));
        }
    }
    return row.front();
}

std::pair<ControlPolygon, ControlPolygon> split(const Space& space, const ControlPolygon& poly,
                                                double s) {
    if (!(s > 0.0 && s < 1.0))
        throw DomainError("split parameter must lie strictly inside (0,1), got " +
                          std::to_string(s));
    if (poly.weights)
        throw ValidationError("split is defined for unweighted polygons");

    DeCasteljauTrace trace;
    de_casteljau(space, poly, s, &trace);
    const size_t n = poly.points.size() - 1;

    ControlPolygon left, right;
    left.points.reserve(n + 1);
    right.points.reserve(n + 1);
    for (size_t r = 0; r <= n; ++r) left.points.push_back(trace.points[r].front());
    for (size_t i = 0; i <= n; ++i) right.points.push_back(trace.points[n - i][i]);
    return {std::move(left), std::move(right)};
}

double condition1_defect(const Space& space, const SpacePoint& x, const SpacePoint& y,
                         const SpacePoint& z, double s, double tau) {
    require_param(s, "condition-1 parameter s");
    require_param(tau, "condition-1 parameter tau");
    const SpacePoint lhs =
        space.affine(s, space.affine(tau, x, y), space.affine(tau, y, z));
    const SpacePoint rhs =
        space.affine(tau, space.affine(s, x, y), space.affine(s, y, z));
    return space.distance(lhs, rhs);
}

SpacePoint aitken_neville(const Space& space, std::span<const double> nodes,
                          std::span<const SpacePoint> points, double t) {
    if (nodes.size() != points.size())
        throw ValidationError("node count differs from point count");
    if (nodes.size() < 2) throw ValidationError("interpolation needs at least two nodes");
    for (size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!(nodes[i] < nodes[i + 1])) throw ValidationError("nodes must be strictly increasing");
    if (nodes.front() != 0.0 || nodes.back() != 1.0)
        throw ValidationError("nodes must span [0,1] with t_0 = 0 and t_n = 1");
    require_param(t, "interpolation parameter");
    for (const auto& p : points) space.validate_point(p);

    std::vector<SpacePoint> row(points.begin(), points.end());
    const size_t n = row.size() - 1;
    for (size_t r = 1; r <= n; ++r) {
        for (size_t i = 0; i + r <= n; ++i) {
            const double local = (t - nodes[i]) / (nodes[i + r] - nodes[i]);
            row[i] = space.geodesic(local, row[i], row[i + 1]);
        }
        row.pop_back();
    }
    return row.front();
}

std::vector<double> distance_weights(const Space& space, std::span<const SpacePoint> points,
                                     const Ball& obstacle, WeightMode mode) {
    if (points.empty()) throw ValidationError("distance weights need at least one point");
    if (!(obstacle.radius > 0.0)) throw ValidationError("obstacle radius must be positive");
    space.validate_point(obstacle.center);

    std::vector<double> weights;
    weights.reserve(points.size());
    for (const auto& p : points) {
        const double dc = space.distance(p, obstacle.center);
        if (mode == WeightMode::attract) {
            if (dc < obstacle.radius)
                throw ValidationError("attract weights: control point lies inside the obstacle");
            weights.push_back(1.0 / std::max(dc - obstacle.radius, kDistanceFloor));
        } else {
            weights.push_back(std::max(dc - obstacle.radius, 0.0) + kDistanceFloor);
        }
    }
    return weights;
}

} // namespace geocurves
