"""Smoke tests for the compiled extension."""

import math

import pytest

import ptsusy


def test_lemniscatic_invariants():
    params = ptsusy.EllipticParams(E_R=math.sqrt(3.0), a=4.0 * math.sqrt(2.0 / math.sqrt(3.0)))
    data = ptsusy.invariants_from(params)
    assert abs(data.g2 - 4.0) < 1e-12
    assert abs(data.g3) < 1e-12
    assert data.regime == ptsusy.WRegime.nondegenerate_positive
    assert abs(data.roots.e1 - 1.0) < 1e-10
    assert abs(data.omega - 1.3110287771460599) < 1e-9
    assert abs(ptsusy.wp(data.omega, data) - 1.0) < 1e-12


def test_family_spectrum():
    spec = ptsusy.family_spectrum(2.0)
    assert [(n, e) for n, e in spec.levels] == [(0, -2.25), (1, -0.25)]
    assert ptsusy.family_spectrum(0.5).levels == []


def test_potential_value_at_origin():
    fam = ptsusy.Sl2cFamily(ptsusy.Sl2cCase.I, m=1.0, b_I=1.0)
    grid = ptsusy.Grid(-1.0, 1.0, 201)
    v = ptsusy.potential_Vm(fam, grid)
    assert abs(v.values[100].real + 1.75) < 1e-12


def test_partner_potentials_from_python_callables():
    f = ptsusy.ScalarField(lambda x: x, lambda x: 1.0)
    g = ptsusy.ScalarField(lambda x: 0.0, lambda x: 0.0)
    w = ptsusy.SuperpotentialSpec(f, g)
    grid = ptsusy.Grid(-2.0, 2.0, 201)
    pair = ptsusy.partner_potentials(w, grid)
    assert abs(pair.v_plus_R.values[100].real + 1.0) < 1e-12
    assert abs(pair.v_minus_R.values[100].real - 1.0) < 1e-12


def test_find_spectrum_harmonic():
    grid = ptsusy.Grid(-8.0, 8.0, 1501)
    v = ptsusy.sample(grid, lambda x: complex(x * x, 0.0))
    problem = ptsusy.SpectralProblem(v, e_lo=0.5, e_hi=1.5, scan_points=40)
    result = ptsusy.find_spectrum(problem)
    assert len(result.eigenvalues) == 1
    assert abs(result.eigenvalues[0].E - 1.0) < 1e-5


def test_negative_discriminant_rejected():
    data = ptsusy.invariants_from(ptsusy.EllipticParams(E_R=1.0, a=10.0))
    assert data.regime == ptsusy.WRegime.nondegenerate_negative
    with pytest.raises(ValueError):
        ptsusy.wp(1.0, data)


def test_pt_symmetry_check():
    fam = ptsusy.Sl2cFamily(ptsusy.Sl2cCase.I, m=2.0, b_I=0.5)
    grid = ptsusy.Grid(-6.0, 6.0, 800)
    assert ptsusy.pt_symmetry_check(ptsusy.potential_Vm(fam, grid), 0.0).symmetric
    fam3 = ptsusy.Sl2cFamily(ptsusy.Sl2cCase.III, m=2.0, b_I=0.5)
    assert not ptsusy.pt_symmetry_check(ptsusy.potential_Vm(fam3, grid), 0.0).symmetric
