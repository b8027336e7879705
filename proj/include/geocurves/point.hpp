#pragma once

#include <Eigen/Dense>
#include <string_view>

namespace geocurves {

enum class SpaceKind {
    euclidean,
    sphere,
    manhattan,
    paris,
    spd2,
    e3,
};

std::string_view to_string(SpaceKind kind);

/// A point of a concrete geodesic space: a coordinate vector tagged with the
/// kind of space that interprets it. Matrix-valued points (spd2, e3) store
/// their matrix flattened row-major.
struct SpacePoint {
    SpaceKind space = SpaceKind::euclidean;
    Eigen::VectorXd coords;
};

/// An element of the tangent space at `base`. The coordinate convention is
/// per space: ambient vectors orthogonal to the base point on the sphere,
/// flattened symmetric 2x2 matrices for spd2, flattened 4x4 Lie-algebra
/// matrices (body frame) for e3.
struct TangentVector {
    SpacePoint base;
    Eigen::VectorXd vec;
};

inline bool same_coords(const SpacePoint& a, const SpacePoint& b) {
    return a.space == b.space && a.coords.size() == b.coords.size() && a.coords == b.coords;
}

} // namespace geocurves
