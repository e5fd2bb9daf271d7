import pytest

from coulomb_momentum import verify as vf
from coulomb_momentum.eigenbasis import state_b
from coulomb_momentum.operators import runge_lenz_b
from coulomb_momentum.poly import PolyField


def test_spanning_set_size():
    assert len(vf.spanning_set(4, 3)) == 4 * 35
    assert len(set(vf.spanning_set(2, 1))) == 2 * 10


def test_solve_in_span():
    basis = [state_b(2, 1, m) for m in (-1, 0, 1)]
    coeffs = vf.solve_in_span(runge_lenz_b(3)(state_b(2, 0, 0)), basis)
    assert coeffs is not None and coeffs[0] == 0 and coeffs[2] == 0 and coeffs[1] != 0
    assert vf.solve_in_span(PolyField.constant(1), basis) is None


def test_multiplet_closure():
    assert all(r.passed for r in vf.multiplet_closure(2))


def test_tolerance_profiles(monkeypatch):
    assert vf.tolerance_profile("strict")["integral"] == pytest.approx(1e-8)
    assert vf.tolerance_profile("strict")["integral_control"] == 1e-2
    monkeypatch.setenv(vf.PROFILE_ENV, "loose")
    assert vf.tolerance_profile()["area"] == pytest.approx(1e-6)
    with pytest.raises(ValueError):
        vf.tolerance_profile("sloppy")


def test_records_schema():
    (report, *_) = vf.rotation_suite(degree=1, keep_records=True)
    rec = report.metadata["records"][0]
    assert set(rec) == {"identity", "testElement", "residualIsZero"}
    assert report.metadata["elements"] == 5


def test_small_generator_sets():
    for name in ("commutators", "casimir", "conjugation"):
        assert all(r.passed for r in vf.run_suite(name, degree=2, denom_power=1))


def test_strict_tolerance_can_fail():
    # an unattainable tolerance must produce a failing report, not an exception
    (report,) = vf.kernel_suite(pairs=10, tolerances={**vf.DEFAULT_TOLERANCES, "kernel": 1e-30})
    assert not report.passed


def test_report_order_is_deterministic():
    a = [r.to_json() for r in vf.run_suite("gegenbauer", max_n=3)]
    b = [r.to_json() for r in vf.run_suite("gegenbauer", max_n=3)]
    assert a == b


def test_unknown_suite():
    with pytest.raises(ValueError):
        vf.run_suite("nope")
