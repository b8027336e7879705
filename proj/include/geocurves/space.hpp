#pragma once

#include <memory>
#include <span>
#include <string>

#include "geocurves/errors.hpp"
#include "geocurves/point.hpp"

namespace geocurves {

struct SpaceCaps {
    bool has_log_exp = false;         // Riemannian-capable: log/exp maps available
    bool is_unique_geodesic = false;  // shortest geodesics unique on the valid domain
    bool satisfies_condition_1 = false; // the affine-map commutation needed for exact subdivision
};

/// A geodesic space: a metric together with the affine map that walks the
/// unique shortest geodesic between two points. All operations validate
/// their inputs and throw ValidationError / DomainError on bad ones.
///
/// Instances are immutable after construction and safe to share across
/// threads; every operation is a pure function of its arguments.
class Space {
public:
    virtual ~Space() = default;

    SpaceKind kind() const { return kind_; }
    int ambient_dim() const { return ambient_dim_; }
    const SpaceCaps& caps() const { return caps_; }
    const std::string& domain_constraint() const { return domain_constraint_; }
    std::string_view name() const { return to_string(kind_); }

    /// Metric of the space. Symmetric, zero iff the points coincide.
    double distance(const SpacePoint& x, const SpacePoint& y) const;

    /// The point at parameter fraction t in [0,1] along the shortest
    /// geodesic from x to y; d(x, affine(t,x,y)) = t * d(x,y).
    SpacePoint affine(double t, const SpacePoint& x, const SpacePoint& y) const;

    /// Geodesic through x and y evaluated at any parameter the space can
    /// extend to (equals affine on [0,1]). Spaces without a natural
    /// extension reject t outside [0,1].
    SpacePoint geodesic(double t, const SpacePoint& x, const SpacePoint& y) const;

    /// Inverse exponential map; requires has_log_exp. The returned vector
    /// has norm d(x,y) and exp(log(x,y)) == y on the injectivity domain.
    TangentVector log(const SpacePoint& x, const SpacePoint& y) const;

    /// Exponential map at v.base; requires has_log_exp.
    SpacePoint exp(const TangentVector& v) const;

    /// Norm of a tangent vector in the metric at its base point.
    double tangent_norm(const TangentVector& v) const;

    void validate_point(const SpacePoint& p) const;
    bool is_valid_point(const SpacePoint& p) const;

    /// Tag and validate a coordinate vector as a point of this space.
    SpacePoint make_point(Eigen::VectorXd coords) const;

    /// Reject point sets outside the domain where weighted means are
    /// guaranteed unique (no-op for Hadamard-like spaces).
    virtual void check_mean_domain(std::span<const SpacePoint> points) const;

protected:
    Space(SpaceKind kind, int ambient_dim, SpaceCaps caps, std::string domain_constraint)
        : kind_(kind), ambient_dim_(ambient_dim), caps_(caps),
          domain_constraint_(std::move(domain_constraint)) {}

    virtual double do_distance(const SpacePoint& x, const SpacePoint& y) const = 0;
    virtual SpacePoint do_affine(double t, const SpacePoint& x, const SpacePoint& y) const = 0;
    // default: affine on [0,1], DomainError outside
    virtual SpacePoint do_geodesic(double t, const SpacePoint& x, const SpacePoint& y) const;
    virtual TangentVector do_log(const SpacePoint& x, const SpacePoint& y) const;
    virtual SpacePoint do_exp(const TangentVector& v) const;
    virtual double do_tangent_norm(const TangentVector& v) const;
    virtual void do_validate(const SpacePoint& p) const = 0;
    virtual void do_validate_tangent(const TangentVector& v) const;

    void require_pair(const SpacePoint& x, const SpacePoint& y) const;

private:
    SpaceKind kind_;
    int ambient_dim_;
    SpaceCaps caps_;
    std::string domain_constraint_;
};

/// Flat model space R^dim; the baseline every construction reduces to.
class EuclideanSpace final : public Space {
public:
    explicit EuclideanSpace(int dim);

protected:
    double do_distance(const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_affine(double t, const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_geodesic(double t, const SpacePoint& x, const SpacePoint& y) const override;
    TangentVector do_log(const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_exp(const TangentVector& v) const override;
    void do_validate(const SpacePoint& p) const override;
};

} // namespace geocurves
