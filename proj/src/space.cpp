#include "geocurves/space.hpp"

#include <cmath>
#include <sstream>

namespace geocurves {

std::string_view to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::euclidean: return "euclidean";
        case SpaceKind::sphere: return "sphere";
        case SpaceKind::manhattan: return "manhattan";
        case SpaceKind::paris: return "paris";
        case SpaceKind::spd2: return "spd2";
        case SpaceKind::e3: return "e3";
    }
    return "unknown";
}

void Space::require_pair(const SpacePoint& x, const SpacePoint& y) const {
    if (x.space != kind_ || y.space != kind_) {
        std::ostringstream msg;
        msg << "mismatched space: expected " << name() << ", got "
            << to_string(x.space) << " and " << to_string(y.space);
        throw ValidationError(msg.str());
    }
    validate_point(x);
    validate_point(y);
}

double Space::distance(const SpacePoint& x, const SpacePoint& y) const {
    require_pair(x, y);
    return do_distance(x, y);
}

SpacePoint Space::affine(double t, const SpacePoint& x, const SpacePoint& y) const {
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("affine parameter t must lie in [0,1], got " + std::to_string(t));
    require_pair(x, y);
    if (t == 0.0 || same_coords(x, y)) return x;
    if (t == 1.0) return y;
    return do_affine(t, x, y);
}

SpacePoint Space::geodesic(double t, const SpacePoint& x, const SpacePoint& y) const {
    require_pair(x, y);
    if (t == 0.0 || same_coords(x, y)) return x;
    if (t == 1.0) return y;
    if (t > 0.0 && t < 1.0) return do_affine(t, x, y);
    return do_geodesic(t, x, y);
}

SpacePoint Space::do_geodesic(double t, const SpacePoint&, const SpacePoint&) const {
    throw DomainError(std::string(name()) +
                      ": geodesic parameter outside [0,1] is not supported (t = " +
                      std::to_string(t) + ")");
}

TangentVector Space::log(const SpacePoint& x, const SpacePoint& y) const {
    if (!caps_.has_log_exp)
        throw ValidationError(std::string(name()) + " has no log/exp maps");
    require_pair(x, y);
    return do_log(x, y);
}

SpacePoint Space::exp(const TangentVector& v) const {
    if (!caps_.has_log_exp)
        throw ValidationError(std::string(name()) + " has no log/exp maps");
    if (v.base.space != kind_)
        throw ValidationError("tangent vector based in a different space");
    validate_point(v.base);
    do_validate_tangent(v);
    return do_exp(v);
}

double Space::tangent_norm(const TangentVector& v) const {
    if (v.base.space != kind_)
        throw ValidationError("tangent vector based in a different space");
    return do_tangent_norm(v);
}

TangentVector Space::do_log(const SpacePoint&, const SpacePoint&) const {
    throw ValidationError(std::string(name()) + " has no log/exp maps");
}

SpacePoint Space::do_exp(const TangentVector&) const {
    throw ValidationError(std::string(name()) + " has no log/exp maps");
}

double Space::do_tangent_norm(const TangentVector& v) const {
    return v.vec.norm();
}

void Space::do_validate_tangent(const TangentVector& v) const {
    if (v.vec.size() != ambient_dim_)
        throw ValidationError("tangent vector has wrong dimension");
    if (!v.vec.allFinite())
        throw ValidationError("tangent vector has non-finite entries");
}

void Space::validate_point(const SpacePoint& p) const {
    if (p.space != kind_)
        throw ValidationError("point belongs to " + std::string(to_string(p.space)) +
                              ", expected " + std::string(name()));
    if (p.coords.size() != ambient_dim_)
        throw ValidationError("point has dimension " + std::to_string(p.coords.size()) +
                              ", expected " + std::to_string(ambient_dim_));
    if (!p.coords.allFinite())
        throw ValidationError("point has non-finite coordinates");
    do_validate(p);
}

bool Space::is_valid_point(const SpacePoint& p) const {
    try {
        validate_point(p);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

SpacePoint Space::make_point(Eigen::VectorXd coords) const {
    SpacePoint p{kind_, std::move(coords)};
    validate_point(p);
    return p;
}

void Space::check_mean_domain(std::span<const SpacePoint>) const {}

// ---------------------------------------------------------------------------
// Euclidean model space

EuclideanSpace::EuclideanSpace(int dim)
    : Space(SpaceKind::euclidean, dim,
            SpaceCaps{.has_log_exp = true, .is_unique_geodesic = true, .satisfies_condition_1 = true},
            "all of R^n") {
    if (dim < 1) throw ValidationError("euclidean dimension must be >= 1");
}

double EuclideanSpace::do_distance(const SpacePoint& x, const SpacePoint& y) const {
    return (x.coords - y.coords).norm();
}

SpacePoint EuclideanSpace::do_affine(double t, const SpacePoint& x, const SpacePoint& y) const {
    return {kind(), (1.0 - t) * x.coords + t * y.coords};
}

SpacePoint EuclideanSpace::do_geodesic(double t, const SpacePoint& x, const SpacePoint& y) const {
    return do_affine(t, x, y);
}

TangentVector EuclideanSpace::do_log(const SpacePoint& x, const SpacePoint& y) const {
    return {x, y.coords - x.coords};
}

SpacePoint EuclideanSpace::do_exp(const TangentVector& v) const {
    return {kind(), v.base.coords + v.vec};
}

void EuclideanSpace::do_validate(const SpacePoint&) const {}

} // namespace geocurves
