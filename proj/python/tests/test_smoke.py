"""Smoke tests for the python bindings: one probe per operation family."""

import math

import geocurves as gc


def close(a, b, tol=1e-10):
    return abs(a - b) <= tol


def vec_close(v, expected, tol=1e-10):
    return all(abs(a - b) <= tol for a, b in zip(v, expected))


def test_euclidean_bezier():
    r2 = gc.euclidean(2)
    pts = [r2.point([0, 0]), r2.point([0, 1]), r2.point([1, 1]), r2.point([1, 0])]
    mid = gc.de_casteljau(r2, pts, 0.5)
    assert vec_close(mid.coords, [0.5, 0.75], 1e-14)
    assert close(r2.distance(r2.point([0, 0]), r2.point([3, 4])), 5.0, 1e-14)


def test_sphere_slerp_and_log_exp():
    s = gc.sphere()
    x, y = s.point([1, 0, 0]), s.point([0, 1, 0])
    third = s.affine(1.0 / 3.0, x, y)
    assert vec_close(third.coords, [math.sqrt(3) / 2, 0.5, 0.0], 1e-13)
    v = s.log(x, y)
    assert close(s.tangent_norm(v), math.pi / 2, 1e-13)
    assert vec_close(s.exp(v).coords, y.coords, 1e-12)


def test_rational_reduces_to_quotient():
    r2 = gc.euclidean(2)
    pts = [r2.point([0, 0]), r2.point([3, 0])]
    out = gc.rational_de_casteljau(r2, pts, [1.0, 2.0], 0.5)
    assert vec_close(out.coords, [2.0, 0.0], 1e-13)


def test_spline_matches_bezier_on_clamped_knots():
    r2 = gc.euclidean(2)
    pts = [r2.point([0, 0]), r2.point([1, 2]), r2.point([3, 2]), r2.point([4, 0])]
    sp = gc.spline(r2, pts, [0, 0, 0, 0, 1, 1, 1, 1], 3)
    for t in (0.0, 0.25, 0.5, 0.75, 1.0):
        a = sp(t).coords
        b = gc.de_casteljau(r2, pts, t).coords
        assert vec_close(a, b, 1e-12)
    closed = gc.closed_spline(r2, pts, 3)
    lo, hi = closed.param_range
    assert vec_close(closed(lo).coords, closed(hi).coords, 1e-10)


def test_spd2_geometric_mean():
    spd = gc.spd2()
    x = gc.spd2_point([[2.0, 0.0], [0.0, 0.5]])
    y = gc.spd2_point([[0.5, 0.0], [0.0, 2.0]])
    mid = spd.affine(0.5, x, y)
    assert vec_close(mid.coords, [1.0, 0.0, 0.0, 1.0], 1e-11)
    sol = gc.karcher_mean(spd, [x, y], [0.5, 0.5])
    assert vec_close(sol.point.coords, [1.0, 0.0, 0.0, 1.0], 1e-10)
    assert sol.residual <= 1e-11


def test_e3_pose_interpolation():
    e3 = gc.e3()
    identity = gc.e3_pose([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 0, 0])
    moved = gc.e3_pose([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [2, 4, 6])
    mid = e3.affine(0.5, identity, moved)
    assert vec_close(gc.e3_translation(mid), [1, 2, 3], 1e-12)


def test_centroid_curve_and_counterexample():
    s = gc.sphere()
    report = gc.sphere_counterexample(math.pi / 3)
    assert report.verdict
    assert close(report.cos_theta, 2.5 / 3.0, 1e-14)
    tri = report.control_points
    q = gc.centroid_curve(s, tri, 0.5)
    p = gc.de_casteljau(s, tri, 0.5)
    assert s.distance(q, p) > 1e-6  # the two curves genuinely differ


def test_errors_are_python_exceptions():
    s = gc.sphere()
    try:
        s.affine(0.5, s.point([1, 0, 0]), s.point([-1, 0, 0]))
    except ValueError:
        pass
    else:
        raise AssertionError("antipodal pair should raise")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
