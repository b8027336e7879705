#include "geocurves/spline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace geocurves {

KnotVector::KnotVector(std::vector<double> knots, int degree)
    : knots_(std::move(knots)), degree_(degree),
      control_count_(static_cast<int>(knots_.size()) - degree - 1) {
    if (degree_ < 1) throw ValidationError("spline degree must be >= 1");
    if (control_count_ < degree_ + 1)
        throw ValidationError("knot vector too short: need at least " +
                              std::to_string(2 * degree_ + 2) + " knots for degree " +
                              std::to_string(degree_));
    for (size_t i = 0; i + 1 < knots_.size(); ++i)
        if (!(knots_[i] <= knots_[i + 1]))
            throw ValidationError("knots must be nondecreasing");
    for (double k : knots_)
        if (!std::isfinite(k)) throw ValidationError("knots must be finite");
    // multiplicity at most m+1
    for (size_t i = 0; i + static_cast<size_t>(degree_) + 1 < knots_.size(); ++i)
        if (!(knots_[i] < knots_[i + static_cast<size_t>(degree_) + 1]))
            throw ValidationError("knot multiplicity exceeds degree + 1");
    const auto m = static_cast<size_t>(degree_);
    const auto n = static_cast<size_t>(control_count_) - 1;
    if (!(knots_[m] < knots_[m + 1]) || !(knots_[n] < knots_[n + 1]))
        throw ValidationError("end spans of the parameter interval must be nonempty");
}

int KnotVector::locate_span(double t) const {
    if (!(t >= param_begin() && t <= param_end()))
        throw DomainError("parameter " + std::to_string(t) + " outside the spline interval [" +
                          std::to_string(param_begin()) + ", " + std::to_string(param_end()) + "]");
    const int m = degree_;
    const int n = control_count_ - 1;
    if (t == param_end()) {
        for (int l = n; l >= m; --l)
            if (knots_[static_cast<size_t>(l)] < knots_[static_cast<size_t>(l) + 1]) return l;
    }
    int l = m;
    while (l < n && t >= knots_[static_cast<size_t>(l) + 1]) ++l;
    return l;
}

int KnotVector::multiplicity(double t) const {
    return static_cast<int>(std::count(knots_.begin(), knots_.end(), t));
}

SplineDef make_spline(const Space& space, ControlPolygon controls, KnotVector knots) {
    if (controls.weights) throw ValidationError("splines take unweighted control polygons");
    if (static_cast<int>(controls.points.size()) != knots.control_count())
        throw ValidationError("control count " + std::to_string(controls.points.size()) +
                              " inconsistent with knot vector (expects " +
                              std::to_string(knots.control_count()) + ")");
    validate_polygon(space, controls);
    return {std::move(knots), std::move(controls), false};
}

SplineDef close_spline(const Space& space, std::vector<SpacePoint> controls, int degree) {
    if (degree < 1) throw ValidationError("spline degree must be >= 1");
    const int n_base = static_cast<int>(controls.size());
    if (n_base < degree + 1)
        throw ValidationError("closed spline of degree " + std::to_string(degree) +
                              " needs at least " + std::to_string(degree + 1) + " controls");
    // wrap the first m controls and use uniform knots of spacing one
    std::vector<SpacePoint> extended = controls;
    for (int i = 0; i < degree; ++i) extended.push_back(controls[static_cast<size_t>(i)]);
    std::vector<double> knots(extended.size() + static_cast<size_t>(degree) + 1);
    for (size_t i = 0; i < knots.size(); ++i) knots[i] = static_cast<double>(i);
    ControlPolygon poly{std::move(extended), std::nullopt};
    validate_polygon(space, poly);
    return {KnotVector(std::move(knots), degree), std::move(poly), true};
}

SpacePoint de_boor(const Space& space, const SplineDef& spline, double t, DeBoorScheme scheme) {
    const KnotVector& kv = spline.knots;
    if (static_cast<int>(spline.controls.points.size()) != kv.control_count())
        throw ValidationError("spline control count inconsistent with its knot vector");
    const int m = kv.degree();
    const int l = kv.locate_span(t);
    const auto& tau = kv.knots();
    const auto& ctrl = spline.controls.points;

    if (scheme == DeBoorScheme::printed_index) {
        // denominator tau_{i+m-r}; hits 0/0 at repeated knots
        std::vector<SpacePoint> d(ctrl.begin() + (l - m), ctrl.begin() + (l + 1));
        for (int r = 1; r <= m; ++r) {
            for (int j = m; j >= r; --j) {
                const int i = l - m + j;
                const double den = tau[static_cast<size_t>(i + m - r)] - tau[static_cast<size_t>(i)];
                if (den == 0.0)
                    throw DomainError("printed-index scheme divides by zero at this knot layout");
                const double alpha = (t - tau[static_cast<size_t>(i)]) / den;
                d[static_cast<size_t>(j)] =
                    space.geodesic(alpha, d[static_cast<size_t>(j) - 1], d[static_cast<size_t>(j)]);
            }
        }
        return d[static_cast<size_t>(m)];
    }

    int mu = 0;
    if (scheme == DeBoorScheme::shortened) mu = std::min(kv.multiplicity(t), m);
    // at a mu-fold knot the scheme drops mu stages: the top mu window entries
    // when t is the span's left knot, the bottom mu at the closed right end
    const bool right_end = mu > 0 && t != tau[static_cast<size_t>(l)];
    const int lo = l - m + (right_end ? mu : 0);
    const int hi = l - (right_end ? 0 : mu);

    // d[j] holds p_{lo+j}; the recursion consumes the left neighbour in place
    std::vector<SpacePoint> d(ctrl.begin() + lo, ctrl.begin() + (hi + 1));
    for (int r = 1; r <= m - mu; ++r) {
        for (int j = hi - lo; j >= r; --j) {
            const int i = lo + j;
            const double den = tau[static_cast<size_t>(i + m - r) + 1] - tau[static_cast<size_t>(i)];
            const double alpha = std::min(1.0, (t - tau[static_cast<size_t>(i)]) / den);
            d[static_cast<size_t>(j)] =
                space.affine(alpha, d[static_cast<size_t>(j) - 1], d[static_cast<size_t>(j)]);
        }
    }
    return d[static_cast<size_t>(hi - lo)];
}

} // namespace geocurves
