#include <doctest.h>

#include <cmath>
#include <numbers>

#include "geocurves/bernstein.hpp"
#include "geocurves/e3.hpp"
#include "geocurves/karcher.hpp"
#include "geocurves/manhattan.hpp"
#include "geocurves/spd2.hpp"
#include "geocurves/sphere.hpp"

#include "support.hpp"

using namespace geocurves;
using support::euc;
using support::poly_of;
using support::sph;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<double> normalized_weights(oracles::Rng& rng, size_t count) {
    std::vector<double> w(count);
    double sum = 0.0;
    for (double& x : w) sum += (x = rng.uniform(0.1, 1.0));
    for (double& x : w) x /= sum;
    return w;
}

std::vector<SpacePoint> sphere_cluster(oracles::Rng& rng, int count, double radius) {
    const Eigen::Vector3d center = rng.unit3();
    std::vector<SpacePoint> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back({SpaceKind::sphere, Eigen::VectorXd(rng.sphere_point_near(center, radius))});
    return pts;
}

std::vector<SpacePoint> equilateral_triangle(double alpha) {
    return sphere_counterexample(alpha).control_points;
}
} // namespace

TEST_CASE("karcher mean basics") {
    SUBCASE("euclidean weighted mean is the arithmetic mean") {
        EuclideanSpace r3(3);
        oracles::Rng rng(301);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<SpacePoint> pts;
            for (int i = 0; i < 5; ++i) pts.push_back({SpaceKind::euclidean, rng.vector(3, 2.0)});
            const auto w = normalized_weights(rng, pts.size());
            Eigen::VectorXd expected = Eigen::VectorXd::Zero(3);
            for (size_t i = 0; i < pts.size(); ++i) expected += w[i] * pts[i].coords;

            const KarcherSolution sol = karcher_mean(r3, make_problem(r3, pts, w));
            CHECK((sol.point.coords - expected).norm() <= 1e-12);
            CHECK(sol.residual <= 1e-11);
        }
    }

    SUBCASE("spd2 midpoint matches the closed-form geometric mean") {
        Spd2Space spd2;
        Eigen::Matrix2d xm, ym;
        xm << 2.0, 0.0, 0.0, 0.5;
        ym << 0.5, 0.0, 0.0, 2.0;
        const KarcherSolution sol = karcher_mean(
            spd2, make_problem(spd2, {spd2_point(xm), spd2_point(ym)}, {0.5, 0.5}));
        CHECK((spd2_matrix(sol.point) - Eigen::Matrix2d::Identity()).norm() <= 1e-11);

        oracles::Rng rng(307);
        for (int trial = 0; trial < 25; ++trial) {
            const Eigen::Matrix2d a = rng.spd2(), b = rng.spd2();
            const KarcherSolution s = karcher_mean(
                spd2, make_problem(spd2, {spd2_point(a), spd2_point(b)}, {0.5, 0.5}));
            CHECK((spd2_matrix(s.point) - spd2_mean_closed_form(a, b)).norm() <= 1e-9);
        }
    }

    SUBCASE("sphere two-point means walk the great circle") {
        SphereSpace sphere;
        oracles::Rng rng(311);
        for (int trial = 0; trial < 20; ++trial) {
            const Eigen::Vector3d c = rng.unit3();
            const SpacePoint x{SpaceKind::sphere, Eigen::VectorXd(rng.sphere_point_near(c, kPi / 4))};
            const SpacePoint y{SpaceKind::sphere, Eigen::VectorXd(rng.sphere_point_near(c, kPi / 4))};
            for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const KarcherSolution sol =
                    karcher_mean(sphere, make_problem(sphere, {x, y}, {1.0 - t, t}));
                CHECK(support::coord_dist(sol.point, sphere.affine(t, x, y)) <= 1e-9);
                CHECK(sol.residual <= 1e-11);
            }
        }
    }

    SUBCASE("motion group two-point means follow the one-parameter subgroup") {
        MotionGroupSpace e3;
        oracles::Rng rng(313);
        for (int trial = 0; trial < 10; ++trial) {
            const SpacePoint x = support::random_pose(rng);
            const SpacePoint y = support::random_pose(rng);
            for (double t : {0.25, 0.5, 0.75}) {
                const KarcherSolution sol =
                    karcher_mean(e3, make_problem(e3, {x, y}, {1.0 - t, t}));
                CHECK(support::coord_dist(sol.point, e3.affine(t, x, y)) <= 1e-9);
            }
        }
    }

    SUBCASE("solutions are local minima") {
        SphereSpace sphere;
        oracles::Rng rng(317);
        const auto pts = sphere_cluster(rng, 4, kPi / 8);
        const auto w = normalized_weights(rng, pts.size());
        const WeightedMeanProblem problem = make_problem(sphere, pts, w);
        const KarcherSolution sol = karcher_mean(sphere, problem);
        const double at_solution = mean_cost(sphere, problem, sol.point);
        for (int k = 0; k < 20; ++k) {
            Eigen::Vector3d dir = rng.unit3();
            dir -= dir.dot(sol.point.coords) * sol.point.coords;
            dir.normalize();
            const SpacePoint nearby = sphere.exp({sol.point, Eigen::VectorXd(1e-3 * dir)});
            CHECK(at_solution <= mean_cost(sphere, problem, nearby));
        }
    }

    SUBCASE("degenerate weights short-circuit") {
        EuclideanSpace r2(2);
        const std::vector<SpacePoint> pts{euc({0, 0}), euc({1, 0}), euc({2, 3})};
        const KarcherSolution sol = karcher_mean(r2, make_problem(r2, pts, {0.0, 1.0, 0.0}));
        CHECK(support::coord_dist(sol.point, pts[1]) == 0.0);
        CHECK(sol.iterations == 0);
    }

    SUBCASE("validation") {
        EuclideanSpace r2(2);
        SphereSpace sphere;
        ManhattanSpace taxi(0.0);
        const std::vector<SpacePoint> pts{euc({0, 0}), euc({1, 0})};
        CHECK_THROWS_AS(make_problem(r2, pts, {0.5, 0.6}), ValidationError);
        CHECK_THROWS_AS(make_problem(r2, pts, {0.5}), ValidationError);
        CHECK_THROWS_AS(make_problem(r2, pts, {1.5, -0.5}), ValidationError);
        CHECK_THROWS_AS(
            make_problem(taxi, {support::pt(SpaceKind::manhattan, {0, 0}),
                                support::pt(SpaceKind::manhattan, {1, 1})}, {0.5, 0.5}),
            ValidationError);
        // spread beyond the mean domain
        CHECK_THROWS_AS(make_problem(sphere, {sph(1, 0, 0), sph(-0.9, 0.1, 0)}, {0.5, 0.5}),
                        DomainError);
    }
}

TEST_CASE("centroid curves") {
    SUBCASE("endpoints are exact") {
        SphereSpace sphere;
        oracles::Rng rng(331);
        const auto pts = sphere_cluster(rng, 4, kPi / 8);
        CHECK(support::coord_dist(centroid_curve(sphere, pts, 0.0), pts.front()) == 0.0);
        CHECK(support::coord_dist(centroid_curve(sphere, pts, 1.0), pts.back()) == 0.0);
    }

    SUBCASE("euclidean centroid curve coincides with the bezier curve") {
        EuclideanSpace r2(2);
        oracles::Rng rng(337);
        std::vector<SpacePoint> pts;
        for (int i = 0; i < 4; ++i) pts.push_back({SpaceKind::euclidean, rng.vector(2, 2.0)});
        for (int j = 0; j <= 10; ++j) {
            const double t = j / 10.0;
            CHECK(support::coord_dist(centroid_curve(r2, pts, t),
                                      de_casteljau(r2, poly_of(pts), t)) <= 1e-9);
        }
    }

    SUBCASE("spherical quadratic differs from the bezier curve between endpoints") {
        SphereSpace sphere;
        const auto pts = equilateral_triangle(kPi / 3);
        const SpacePoint q = centroid_curve(sphere, pts, 0.5);
        const SpacePoint p = de_casteljau(sphere, poly_of(pts), 0.5);
        const double gap = sphere.distance(q, p);
        CHECK(gap > 1e-6); // measured ~1.3e-2
        CHECK(gap < 0.1);  // but the curves stay close
    }

    SUBCASE("warm and cold started sampling agree") {
        SphereSpace sphere;
        oracles::Rng rng(347);
        const auto pts = sphere_cluster(rng, 4, kPi / 8);
        const auto warm = sample_centroid(sphere, pts, 21, true);
        const auto cold = sample_centroid(sphere, pts, 21, false);
        REQUIRE(warm.size() == cold.size());
        for (size_t i = 0; i < warm.size(); ++i)
            CHECK(support::coord_dist(warm[i].point, cold[i].point) <= 1e-9);
    }

    SUBCASE("rotation equivariance") {
        SphereSpace sphere;
        oracles::Rng rng(349);
        for (int trial = 0; trial < 10; ++trial) {
            const auto pts = sphere_cluster(rng, 3, kPi / 8);
            const Eigen::Matrix3d rot = rng.rotation();
            std::vector<SpacePoint> rotated;
            for (const auto& p : pts)
                rotated.push_back({SpaceKind::sphere, Eigen::VectorXd((rot * p.coords).normalized())});
            for (double t : {0.3, 0.5, 0.8}) {
                const Eigen::VectorXd lhs = rot * centroid_curve(sphere, pts, t).coords;
                CHECK((lhs - centroid_curve(sphere, rotated, t).coords).norm() <= 1e-9);
            }
        }
    }
}

TEST_CASE("endpoint tangents of the centroid curve") {
    SUBCASE("euclidean cubic has the classical derivative") {
        EuclideanSpace r2(2);
        const std::vector<SpacePoint> pts{euc({0, 0}), euc({0, 1}), euc({1, 1}), euc({1, 0})};
        const EndpointTangentCheck check = endpoint_tangent_check(r2, pts, 1e-3);
        CHECK((check.exact.vec - Eigen::Vector2d(0, 3).eval()).norm() <= 1e-13);
        CHECK(check.defect <= 1e-2);

        double prev = endpoint_tangent_check(r2, pts, 1e-2).defect;
        for (double h : {5e-3, 2.5e-3}) {
            const double cur = endpoint_tangent_check(r2, pts, h).defect;
            CHECK(cur / prev <= 0.75);
            prev = cur;
        }
    }

    SUBCASE("a geodesic segment has tangent log p0 p1") {
        SphereSpace sphere;
        const std::vector<SpacePoint> pts{sph(1, 0, 0.1), sph(0.6, 0.75, 0.2)};
        const EndpointTangentCheck check = endpoint_tangent_check(sphere, pts, 1e-3);
        CHECK((check.exact.vec - sphere.log(pts[0], pts[1]).vec).norm() <= 1e-13);
        CHECK(check.defect <= 1e-3);
    }

    SUBCASE("first-order convergence at both ends on the sphere") {
        SphereSpace sphere;
        const auto pts = equilateral_triangle(kPi / 3);
        for (bool at_end : {false, true}) {
            double prev = endpoint_tangent_check(sphere, pts, 1e-2, at_end).defect;
            for (double h : {5e-3, 2.5e-3}) {
                const double cur = endpoint_tangent_check(sphere, pts, h, at_end).defect;
                CHECK(cur / prev <= 0.75);
                prev = cur;
            }
        }
    }

    CHECK_THROWS_AS(endpoint_tangent_check(EuclideanSpace(2),
                                           std::vector<SpacePoint>{euc({0, 0}), euc({1, 0})}, 0.5),
                    ValidationError);
}

TEST_CASE("energy lower bounds") {
    SphereSpace sphere;
    EuclideanSpace r2(2);

    SUBCASE("degree-one chain, frozen algebra") {
        const SpacePoint p0 = euc({0, 0}), p1 = euc({2, 0});
        const SpacePoint x = euc({0.5, 1.0});
        const double t = 0.3;
        const std::vector<SpacePoint> pts{p0, p1};
        const CasteljauLowerBounds lb = casteljau_lower_bounds(r2, pts, t, x);
        const double a = r2.distance(x, p0), b = r2.distance(x, p1);
        CHECK(lb.energy == doctest::Approx((1 - t) * a * a + t * b * b).epsilon(1e-14));
        CHECK(lb.bound1 == doctest::Approx(t * (1 - t) * (a + b) * (a + b)).epsilon(1e-14));
        CHECK(lb.bound2 == doctest::Approx(t * (1 - t) * 4.0).epsilon(1e-14));
        CHECK(lb.energy >= lb.bound1);
        CHECK(lb.bound1 >= lb.bound2);
    }

    SUBCASE("vanishes at the parameter endpoints") {
        oracles::Rng rng(353);
        const auto pts = sphere_cluster(rng, 4, kPi / 8);
        for (double t : {0.0, 1.0}) {
            const CasteljauLowerBounds lb = casteljau_lower_bounds(sphere, pts, t, pts[0]);
            CHECK(lb.bound1 == 0.0);
            CHECK(lb.bound2 == 0.0);
        }
    }

    SUBCASE("equality for collinear euclidean points at the interpolant") {
        const std::vector<SpacePoint> pts{euc({0, 0}), euc({2, 0})};
        const SpacePoint x = euc({1, 0}); // the degree-one curve point at t = 1/2
        const CasteljauLowerBounds lb = casteljau_lower_bounds(r2, pts, 0.5, x);
        CHECK(std::abs(lb.energy - lb.bound1) <= 1e-12);
        CHECK(std::abs(lb.bound1 - lb.bound2) <= 1e-12);
    }

    SUBCASE("chain holds on random sphere draws, strictly in general position") {
        oracles::Rng rng(359);
        for (int trial = 0; trial < 150; ++trial) {
            const int degree = 2 + trial % 3;
            const auto pts = sphere_cluster(rng, degree + 1, kPi / 6);
            const SpacePoint x{SpaceKind::sphere,
                               Eigen::VectorXd(rng.sphere_point_near(pts[0].coords, kPi / 6))};
            const double t = rng.uniform(0.05, 0.95);
            const CasteljauLowerBounds lb = casteljau_lower_bounds(sphere, pts, t, x);
            CHECK(lb.energy >= lb.bound1 - 1e-12);
            CHECK(lb.bound1 >= lb.bound2 - 1e-12);
            if (!support::on_common_geodesic(sphere, pts))
                CHECK(lb.energy - lb.bound1 > 1e-12);
        }
    }
}

TEST_CASE("stagewise energies increase") {
    SphereSpace sphere;

    SUBCASE("degree one gives a single value") {
        const std::vector<SpacePoint> pts{sph(1, 0, 0.2), sph(0.8, 0.6, 0.3)};
        const auto energies = stagewise_energies(sphere, pts, 0.4);
        CHECK(energies.size() == 1);
    }

    SUBCASE("degenerate weights at t = 0") {
        oracles::Rng rng(367);
        const auto pts = sphere_cluster(rng, 4, kPi / 8);
        for (double e : stagewise_energies(sphere, pts, 0.0)) CHECK(e <= 1e-20);
    }

    SUBCASE("strictly increasing for general-position spherical triples") {
        oracles::Rng rng(373);
        const auto pts = sphere_cluster(rng, 3, kPi / 8);
        REQUIRE(!support::on_common_geodesic(sphere, pts));
        const auto energies = stagewise_energies(sphere, pts, 0.5);
        REQUIRE(energies.size() == 2);
        CHECK(energies[1] - energies[0] > 1e-10);
    }

    SUBCASE("collinear controls stay monotone without strictness") {
        SphereSpace s;
        const SpacePoint a = sph(1, 0, 0);
        const SpacePoint c = sph(0.6, 0.8, 0);
        const std::vector<SpacePoint> pts{a, s.affine(0.5, a, c), c};
        REQUIRE(support::on_common_geodesic(s, pts));
        const auto energies = stagewise_energies(s, pts, 0.5);
        REQUIRE(energies.size() == 2);
        CHECK(energies[1] >= energies[0] - 1e-10);
    }

    SUBCASE("nondecreasing on random configurations") {
        oracles::Rng rng(379);
        for (int trial = 0; trial < 30; ++trial) {
            const auto pts = sphere_cluster(rng, 3 + trial % 2, kPi / 8);
            const auto energies = stagewise_energies(sphere, pts, rng.uniform(0.0, 1.0));
            for (size_t r = 1; r < energies.size(); ++r)
                CHECK(energies[r] >= energies[r - 1] - 1e-10);
        }
    }
}

TEST_CASE("segment median breakdown") {
    EuclideanSpace r2(2);
    const SpacePoint p0 = euc({0, 0}), p1 = euc({1, 0});

    CHECK(support::coord_dist(segment_median(r2, p0, p1, 0.3), p0) == 0.0);
    CHECK(support::coord_dist(segment_median(r2, p0, p1, 0.7), p1) == 0.0);
    CHECK(support::coord_dist(segment_median(r2, p0, p1, 0.5), euc({0.5, 0})) <= 1e-15);

    SUBCASE("brute-force grid minimization agrees") {
        const auto objective = [&](const Eigen::Vector2d& x, double t) {
            return (1.0 - t) * (x - p0.coords.head<2>()).norm() +
                   t * (x - p1.coords.head<2>()).norm();
        };
        for (double t : {0.3, 0.5, 0.7}) {
            double best = std::numeric_limits<double>::infinity();
            Eigen::Vector2d argbest = Eigen::Vector2d::Zero();
            for (int i = -500; i <= 1500; ++i) {
                for (int j = -500; j <= 1500; ++j) {
                    const Eigen::Vector2d x(i * 1e-3, j * 1e-3);
                    const double f = objective(x, t);
                    if (f < best) {
                        best = f;
                        argbest = x;
                    }
                }
            }
            const SpacePoint median = segment_median(r2, p0, p1, t);
            CHECK(objective(median.coords.head<2>(), t) <= best + 2e-3);
            // away from the breakdown parameter the minimizer is unique
            if (t != 0.5) CHECK((argbest - median.coords.head<2>()).norm() <= 2e-3);
        }
    }
}

TEST_CASE("spherical midpoint counterexample") {
    SUBCASE("closed form at alpha = pi/3") {
        const SphereMidpointReport report = sphere_counterexample(kPi / 3);
        CHECK(report.cos_theta == doctest::Approx(2.5 / 3.0).epsilon(1e-14));
        CHECK(report.verdict);
        CHECK(std::abs(report.p_half.coords.norm() - 1.0) <= 1e-10);
        CHECK(report.casteljau_defect <= 1e-10);
        CHECK(report.z < 1.0);
    }

    SUBCASE("verdict across the valid range") {
        for (double alpha : {kPi / 6, kPi / 3, kPi / 2}) {
            const SphereMidpointReport report = sphere_counterexample(alpha);
            CHECK(report.verdict);
            CHECK(report.min_abs_inner > 1e-8);
            CHECK(report.min_abs_inner >= report.lower_bound - 1e-12);
        }
    }

    SUBCASE("rejects out-of-range sides") {
        CHECK_THROWS_AS(sphere_counterexample(0.0), ValidationError);
        CHECK_THROWS_AS(sphere_counterexample(2.0), ValidationError);
    }
}
