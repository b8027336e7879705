#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>

#include "geocurves/bernstein.hpp"
#include "geocurves/bezier.hpp"
#include "geocurves/e3.hpp"
#include "geocurves/karcher.hpp"
#include "geocurves/manhattan.hpp"
#include "geocurves/paris.hpp"
#include "geocurves/sample.hpp"
#include "geocurves/spd2.hpp"
#include "geocurves/sphere.hpp"
#include "geocurves/spline.hpp"

namespace py = pybind11;
using namespace geocurves;

namespace {

using SpaceHandle = std::shared_ptr<Space>;

std::vector<SpacePoint> as_points(const std::vector<SpacePoint>& pts) { return pts; }

// spline bundle keeping its space alive for python callers
struct PySpline {
    SpaceHandle space;
    SplineDef def;

    SpacePoint eval(double t) const { return de_boor(*space, def, t); }
    std::pair<double, double> param_range() const {
        return {def.knots.param_begin(), def.knots.param_end()};
    }
};

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bezier, B-spline and centroid curves in geodesic spaces";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    py::class_<SpacePoint>(m, "SpacePoint")
        .def_property_readonly("space", [](const SpacePoint& p) { return std::string(to_string(p.space)); })
        .def_property_readonly("coords", [](const SpacePoint& p) { return p.coords; })
        .def("__repr__", [](const SpacePoint& p) {
            std::ostringstream out;
            out << "SpacePoint(" << to_string(p.space) << ", [";
            for (Eigen::Index i = 0; i < p.coords.size(); ++i)
                out << (i ? ", " : "") << p.coords[i];
            out << "])";
            return out.str();
        });

    py::class_<TangentVector>(m, "TangentVector")
        .def_property_readonly("base", [](const TangentVector& v) { return v.base; })
        .def_property_readonly("vec", [](const TangentVector& v) { return v.vec; });

    py::class_<Space, SpaceHandle>(m, "Space")
        .def_property_readonly("name", [](const Space& s) { return std::string(s.name()); })
        .def_property_readonly("ambient_dim", &Space::ambient_dim)
        .def_property_readonly("has_log_exp", [](const Space& s) { return s.caps().has_log_exp; })
        .def_property_readonly("is_unique_geodesic",
                               [](const Space& s) { return s.caps().is_unique_geodesic; })
        .def_property_readonly("satisfies_condition_1",
                               [](const Space& s) { return s.caps().satisfies_condition_1; })
        .def_property_readonly("domain_constraint",
                               [](const Space& s) { return s.domain_constraint(); })
        .def("point", [](const Space& s, Eigen::VectorXd coords) { return s.make_point(std::move(coords)); },
             py::arg("coords"))
        .def("distance", &Space::distance, py::arg("x"), py::arg("y"))
        .def("affine", &Space::affine, py::arg("t"), py::arg("x"), py::arg("y"))
        .def("geodesic", &Space::geodesic, py::arg("t"), py::arg("x"), py::arg("y"))
        .def("log", &Space::log, py::arg("x"), py::arg("y"))
        .def("exp", &Space::exp, py::arg("v"))
        .def("tangent_norm", &Space::tangent_norm, py::arg("v"))
        .def("is_valid_point", &Space::is_valid_point, py::arg("p"));

    m.def("euclidean", [](int dim) -> SpaceHandle { return std::make_shared<EuclideanSpace>(dim); },
          py::arg("dim"));
    m.def("sphere", []() -> SpaceHandle { return std::make_shared<SphereSpace>(); });
    m.def("manhattan", [](double k) -> SpaceHandle { return std::make_shared<ManhattanSpace>(k); },
          py::arg("k") = 0.0);
    m.def("paris", [](Eigen::VectorXd hub) -> SpaceHandle {
              return std::make_shared<ParisSpace>(std::move(hub));
          },
          py::arg("hub"));
    m.def("spd2", []() -> SpaceHandle { return std::make_shared<Spd2Space>(); });
    m.def("e3", []() -> SpaceHandle { return std::make_shared<MotionGroupSpace>(); });

    m.def("e3_pose", &e3_point, py::arg("rotation"), py::arg("translation"));
    m.def("e3_rotation", &e3_rotation, py::arg("pose"));
    m.def("e3_translation", &e3_translation, py::arg("pose"));
    m.def("spd2_point", &spd2_point, py::arg("matrix"));
    m.def("spd2_matrix", &spd2_matrix, py::arg("point"));

    m.def("bernstein", &bernstein, py::arg("i"), py::arg("n"), py::arg("t"));
    m.def("bernstein_row", &bernstein_row, py::arg("n"), py::arg("t"));

    m.def("de_casteljau",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points, double t) {
              return de_casteljau(*space, make_polygon(*space, as_points(points)), t);
          },
          py::arg("space"), py::arg("points"), py::arg("t"));

    m.def("rational_de_casteljau",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points,
             const std::vector<double>& weights, double t) {
              return rational_de_casteljau(*space, make_polygon(*space, as_points(points), weights), t);
          },
          py::arg("space"), py::arg("points"), py::arg("weights"), py::arg("t"));

    m.def("split",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points, double s) {
              auto [left, right] = split(*space, make_polygon(*space, as_points(points)), s);
              return std::make_pair(left.points, right.points);
          },
          py::arg("space"), py::arg("points"), py::arg("s"));

    m.def("condition1_defect",
          [](const SpaceHandle& space, const SpacePoint& x, const SpacePoint& y,
             const SpacePoint& z, double s, double tau) {
              return condition1_defect(*space, x, y, z, s, tau);
          },
          py::arg("space"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("s"), py::arg("tau"));

    m.def("aitken_neville",
          [](const SpaceHandle& space, const std::vector<double>& nodes,
             const std::vector<SpacePoint>& points, double t) {
              return aitken_neville(*space, nodes, points, t);
          },
          py::arg("space"), py::arg("nodes"), py::arg("points"), py::arg("t"));

    m.def("distance_weights",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points,
             const SpacePoint& center, double radius, const std::string& mode) {
              const WeightMode wm = mode == "attract" ? WeightMode::attract : WeightMode::avoid;
              if (mode != "attract" && mode != "avoid")
                  throw ValidationError("mode must be 'attract' or 'avoid'");
              return distance_weights(*space, points, {center, radius}, wm);
          },
          py::arg("space"), py::arg("points"), py::arg("center"), py::arg("radius"),
          py::arg("mode"));

    py::class_<PySpline>(m, "Spline")
        .def_property_readonly("param_range", &PySpline::param_range)
        .def_property_readonly("degree", [](const PySpline& s) { return s.def.knots.degree(); })
        .def_property_readonly("closed", [](const PySpline& s) { return s.def.closed; })
        .def_property_readonly("control_points",
                               [](const PySpline& s) { return s.def.controls.points; })
        .def_property_readonly("knots", [](const PySpline& s) { return s.def.knots.knots(); })
        .def("__call__", &PySpline::eval, py::arg("t"))
        .def("eval", &PySpline::eval, py::arg("t"));

    m.def("spline",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points,
             const std::vector<double>& knots, int degree) {
              return PySpline{space,
                              make_spline(*space, ControlPolygon{as_points(points), std::nullopt},
                                          KnotVector(knots, degree))};
          },
          py::arg("space"), py::arg("points"), py::arg("knots"), py::arg("degree"));

    m.def("closed_spline",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points, int degree) {
              return PySpline{space, close_spline(*space, as_points(points), degree)};
          },
          py::arg("space"), py::arg("points"), py::arg("degree"));

    py::class_<KarcherSolution>(m, "KarcherSolution")
        .def_property_readonly("point", [](const KarcherSolution& s) { return s.point; })
        .def_readonly("residual", &KarcherSolution::residual)
        .def_readonly("iterations", &KarcherSolution::iterations)
        .def_readonly("cost", &KarcherSolution::cost);

    m.def("karcher_mean",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points,
             const std::vector<double>& weights, std::optional<SpacePoint> init) {
              return karcher_mean(*space, make_problem(*space, as_points(points), weights), init);
          },
          py::arg("space"), py::arg("points"), py::arg("weights"), py::arg("init") = std::nullopt);

    m.def("centroid_curve",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points, double t) {
              return centroid_curve(*space, points, t);
          },
          py::arg("space"), py::arg("points"), py::arg("t"));

    m.def("sample_centroid",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points, int m, bool warm) {
              std::vector<std::pair<double, SpacePoint>> out;
              for (const auto& s : sample_centroid(*space, points, m, warm))
                  out.emplace_back(s.t, s.point);
              return out;
          },
          py::arg("space"), py::arg("points"), py::arg("m"), py::arg("warm") = true);

    m.def("segment_median",
          [](const SpaceHandle& space, const SpacePoint& p0, const SpacePoint& p1, double t) {
              return segment_median(*space, p0, p1, t);
          },
          py::arg("space"), py::arg("p0"), py::arg("p1"), py::arg("t"));

    m.def("casteljau_lower_bounds",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points, double t,
             const SpacePoint& x) {
              const CasteljauLowerBounds lb = casteljau_lower_bounds(*space, points, t, x);
              return std::make_tuple(lb.energy, lb.bound1, lb.bound2);
          },
          py::arg("space"), py::arg("points"), py::arg("t"), py::arg("x"));

    m.def("stagewise_energies",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points, double t) {
              return stagewise_energies(*space, points, t);
          },
          py::arg("space"), py::arg("points"), py::arg("t"));

    m.def("endpoint_tangent_check",
          [](const SpaceHandle& space, const std::vector<SpacePoint>& points, double h,
             bool at_end) {
              const EndpointTangentCheck c = endpoint_tangent_check(*space, points, h, at_end);
              return std::make_tuple(c.fd, c.exact, c.defect);
          },
          py::arg("space"), py::arg("points"), py::arg("h"), py::arg("at_end") = false);

    py::class_<SphereMidpointReport>(m, "SphereMidpointReport")
        .def_readonly("alpha", &SphereMidpointReport::alpha)
        .def_property_readonly("p_half", [](const SphereMidpointReport& r) { return r.p_half; })
        .def_readonly("cos_theta", &SphereMidpointReport::cos_theta)
        .def_readonly("z", &SphereMidpointReport::z)
        .def_readonly("min_abs_inner", &SphereMidpointReport::min_abs_inner)
        .def_readonly("lower_bound", &SphereMidpointReport::lower_bound)
        .def_readonly("casteljau_defect", &SphereMidpointReport::casteljau_defect)
        .def_readonly("verdict", &SphereMidpointReport::verdict)
        .def_property_readonly("control_points",
                               [](const SphereMidpointReport& r) { return r.control_points; });

    m.def("sphere_counterexample", &sphere_counterexample, py::arg("alpha"));
}
