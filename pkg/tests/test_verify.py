"""Verification campaigns: coverage, flood fill, critical-point checks."""

from fractions import Fraction

import pytest

from gsrs.exact import GaussianInt, QComplex
from gsrs.verify import (
    boundary_set,
    critical_orbit_check,
    flood_fill_tiles,
    rotation_cycle_check,
    step_displacement,
    step_rule_check,
    verify_sector,
)


def qc(x, y):
    return QComplex.make(Fraction(x), Fraction(y))


# -- coverage ---------------------------------------------------------------

def test_verify_sector_report_shape():
    rep = verify_sector(7)
    assert rep.verdict == "covered"
    assert rep.sector == 7
    assert rep.instances_used > 0
    assert rep.failed_cells() == []
    data = rep.to_json()
    assert data["verdict"] == "covered"
    assert all(r["disk"] == "outside" for r in data["residuals"])


def test_verify_sector_rejects_head_sectors():
    with pytest.raises(ValueError):
        verify_sector(6)


def test_verify_sector_family_filter_breaks_coverage():
    rep = verify_sector(12, families={1})
    assert rep.verdict == "failed"
    assert rep.failed_cells()


# -- flood fill -------------------------------------------------------------

def test_flood_fill_small_core():
    rep = flood_fill_tiles(Fraction(1, 8))
    assert rep.verdict == "covered"
    assert rep.uncovered == []
    assert rep.tiles
    assert all(fin for _, _, fin in rep.tiles)
    for cell, r, _fin in rep.tiles:
        assert cell.contains(r)


def test_flood_fill_budget_verdict():
    rep = flood_fill_tiles(Fraction(1, 4), budget=1)
    assert rep.verdict == "budget"
    assert rep.uncovered


def test_flood_fill_radius_domain():
    with pytest.raises(ValueError):
        flood_fill_tiles(Fraction(1, 2))


# -- the shaved diamond -----------------------------------------------------

def test_boundary_set_shape():
    n = 4
    pts = set(boundary_set(n))
    assert GaussianInt(0, 0) in pts
    assert GaussianInt(1, 3) in pts          # positive corner kept
    assert GaussianInt(4, 0) not in pts      # shaved: b <= 0 on the rim
    assert GaussianInt(0, 4) not in pts      # shaved: a <= 0 on the rim
    assert GaussianInt(-2, 1) in pts
    assert GaussianInt(-2, 2) not in pts     # shaved rim, a <= 0
    assert GaussianInt(-2, -2) not in pts    # shaved rim, both negative
    for z in pts:
        assert abs(z.re) + abs(z.im) <= n
        if z.re <= 0 or z.im <= 0:
            assert abs(z.re) + abs(z.im) < n


# -- orbit check ------------------------------------------------------------

def test_critical_orbit_check_accepts():
    assert critical_orbit_check(3, qc("4/5", "1/5"))
    assert critical_orbit_check(2, qc("1/2", 0))


def test_critical_orbit_check_domain():
    with pytest.raises(ValueError):
        critical_orbit_check(1, qc("1/2", 0))
    with pytest.raises(ValueError):
        critical_orbit_check(3, qc(1, 0))          # r = 1 excluded
    with pytest.raises(ValueError):
        critical_orbit_check(3, qc("1/5", "1/5"))  # slope above 1/(n-1)
    with pytest.raises(ValueError):
        critical_orbit_check(3, qc("9/8", "1/8"))  # outside the disk


# -- two-step displacement rule ---------------------------------------------

def test_step_displacement_cases():
    assert step_displacement(GaussianInt(3, 1)) == GaussianInt(-1, 1)
    assert step_displacement(GaussianInt(1, 2)) == GaussianInt(-1, 0)
    assert step_displacement(GaussianInt(-1, 3)) == GaussianInt(-1, -1)
    assert step_displacement(GaussianInt(0, 1)) == GaussianInt(0, -1)
    assert step_displacement(GaussianInt(-2, -1)) == GaussianInt(1, -1)
    assert step_displacement(GaussianInt(1, -2)) == GaussianInt(1, 1)
    assert step_displacement(GaussianInt(0, 0)) is None


def test_step_rule_on_circle():
    # a Pythagorean point of small slope: r = (40/41, 9/41), |r| = 1
    r = qc("40/41", "9/41")
    assert r.norm2() == 1
    for z in boundary_set(5):
        if z.is_zero():
            continue
        assert step_rule_check(5, r, z)


def test_step_rule_requires_circle():
    with pytest.raises(ValueError):
        step_rule_check(5, qc("9/10", "1/10"), GaussianInt(1, 2))


def test_step_rule_rejects_bad_z():
    r = qc("40/41", "9/41")
    with pytest.raises(ValueError):
        step_rule_check(5, r, GaussianInt(0, 0))
    with pytest.raises(ValueError):
        step_rule_check(5, r, GaussianInt(5, 1))
    with pytest.raises(ValueError):
        step_rule_check(5, r, GaussianInt(-3, -2))


# -- rotation cycles --------------------------------------------------------

def test_rotation_cycles():
    assert rotation_cycle_check(GaussianInt(3, 2))
    assert rotation_cycle_check(GaussianInt(0, 0))
    assert rotation_cycle_check(GaussianInt(-7, 11))
