#pragma once

#include "geocurves/space.hpp"

namespace geocurves {

/// The plane with the taxicab metric. Geodesics are not unique, so the
/// affine map follows one fixed representative per pair: the three-segment
/// path through the orthogonal projections of x and y onto the line of
/// slope k through their midpoint, parameterized by taxicab arc length.
class ManhattanSpace final : public Space {
public:
    explicit ManhattanSpace(double slope);

    double slope() const { return slope_; }

protected:
    double do_distance(const SpacePoint& x, const SpacePoint& y) const override;
    SpacePoint do_affine(double t, const SpacePoint& x, const SpacePoint& y) const override;
    void do_validate(const SpacePoint& p) const override;

private:
    double slope_;
};

} // namespace geocurves
