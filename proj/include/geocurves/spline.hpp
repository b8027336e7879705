#pragma once

#include <vector>

#include "geocurves/bezier.hpp"
#include "geocurves/space.hpp"

namespace geocurves {

/// Nondecreasing knots tau_0 <= ... <= tau_{m+n+1} for degree m and n+1
/// control points; knot multiplicities at most m+1, the end spans of the
/// parameter interval [tau_m, tau_{n+1}] nonempty.
class KnotVector {
public:
    KnotVector(std::vector<double> knots, int degree);

    int degree() const { return degree_; }               // m
    int control_count() const { return control_count_; } // n+1
    double param_begin() const { return knots_[static_cast<size_t>(degree_)]; }
    double param_end() const { return knots_[static_cast<size_t>(control_count_)]; }
    const std::vector<double>& knots() const { return knots_; }

    /// Index l with tau_l <= t < tau_{l+1}; the right end of the parameter
    /// interval maps to the last nonempty span.
    int locate_span(double t) const;

    /// Number of knots exactly equal to t.
    int multiplicity(double t) const;

private:
    std::vector<double> knots_;
    int degree_;
    int control_count_;
};

struct SplineDef {
    KnotVector knots;
    ControlPolygon controls; // unweighted; periodically extended when closed
    bool closed = false;
};

SplineDef make_spline(const Space& space, ControlPolygon controls, KnotVector knots);

/// Closed spline of degree m: control points wrapped by m and uniform knots
/// of spacing one; the evaluated curve is periodic over the parameter
/// interval.
SplineDef close_spline(const Space& space, std::vector<SpacePoint> controls, int degree);

enum class DeBoorScheme {
    full,          // triangular scheme over the full local window
    shortened,     // mu-fold knots drop mu stages (p_{l-mu}^{m-mu} at a left knot)
    printed_index, // denominator index tau_{i+m-r}; kept for comparison only
};

/// Localized triangular recursion of affine maps over the knot window of t.
/// Equals de Casteljau on fully clamped (Bezier) knot vectors and Cox-de
/// Boor basis evaluation in Euclidean space.
SpacePoint de_boor(const Space& space, const SplineDef& spline, double t,
                   DeBoorScheme scheme = DeBoorScheme::full);

} // namespace geocurves
