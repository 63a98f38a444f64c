#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Wed Oct  7 09:02:44 2026

Tests of the secular determinant, its error bounds and the certified root search
"""

# Packages
# ---------------------------
import numpy as np
import mpmath
import pytest
#user libraries
from Python_lib.numerics.pylib_linalg import InputError, ToleranceError
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.frames import pylib_symbols as pylib_sym
from Python_lib.multipliers import pylib_multipliers as pylib_mult
from Python_lib.multipliers import pylib_secular as pylib_sec
from Python_lib.scenarios import pylib_scenarios as pylib_scen

def _TwoTermData():
    d_seq = np.array([[1., -1.]], dtype=complex)
    return pylib_sec.SecularData(pylib_sym.Symbol([2., 3.]), 1, lambda n: d_seq[:,n], lambda n: d_seq[:,n], n_total=2)

def _RandomPair(rng, n_dim=3, n_vec=5):
    phi = pylib_frm.FiniteFrame(rng.standard_normal((n_dim,n_vec)) + 1j*rng.standard_normal((n_dim,n_vec)))
    return phi, pylib_frm.CanonicalDual(phi)

# Secular Matrix
#--------------------------------------
def test_two_term_kernels(tol):
    u_seq, tail_norm = pylib_sec.SecularKernels(_TwoTermData(), 0., tol=tol)
    np.testing.assert_allclose(u_seq, [[0.5, -1./3.]])
    assert tail_norm == 0.

def test_two_term_determinant(tol):
    det, det_err, info = pylib_sec.SecularDeterminant(_TwoTermData(), 0., tol)
    np.testing.assert_allclose(det, 5./6., rtol=1e-15)
    assert det_err < 1e-14
    assert info['status'] == 'certified' and info['k_trunc'] == 2

def test_lambda_on_symbol(tol):
    with pytest.raises(ToleranceError):
        pylib_sec.SecularMatrix(_TwoTermData(), 3., tol)

def test_riesz_basis_has_no_secular_data(tol):
    phi = pylib_frm.FiniteFrame(np.eye(3))
    with pytest.raises(InputError):
        pylib_sec.SecularDataFromFrames(np.ones(3), phi, phi, tol)

def test_finite_instance_identity(rng, tol):
    #det(M - lam) is proportional to prod (m_n - lam) det A_lam
    phi, psi = _RandomPair(rng)
    sym_val = rng.standard_normal(5) + 1j*rng.standard_normal(5)
    inst = pylib_mult.Assemble(sym_val, phi, psi, tol)
    data = pylib_sec.SecularDataFromFrames(sym_val, phi, psi, tol)
    ratio = []
    for lam in (0.3 + 0.1j, -1.2 + 0.7j, 2.5j):
        det, _, _ = pylib_sec.SecularDeterminant(data, lam, tol)
        ratio.append(np.linalg.det(inst.matrix - lam*np.eye(3)) / (np.prod(sym_val - lam)*det))
    np.testing.assert_allclose(ratio, ratio[0], rtol=1e-8)

# Excess-one Series
#--------------------------------------
def _LangleyOracle(n_val, dps=40):
    mpmath.mp.dps = dps
    d_seq, m_seq = [], []
    for n in range(n_val):
        if n == 0:
            d_seq.append(1/mpmath.sqrt(2*(mpmath.e + 1)))
            m_seq.append(mpmath.mpf(1)/2)
            continue
        j = n + 1 if (n + 1) % 2 == 1 else 2 - n
        d_seq.append(1/mpmath.sqrt(j**2*mpmath.pi**2 + 1))
        m_seq.append(1 - 1/(1 + j*mpmath.pi*1j))
    return d_seq, m_seq

def test_langley_kernel_prefix(tol):
    data = pylib_sec.SecularDataFromStructured(pylib_scen.LangleyStructured(), pylib_scen.LangleyStructured(),
                                               pylib_scen.LangleySymbol())
    u_seq, tail_norm = pylib_sec.SecularKernels(data, 0., k_trunc=64, tol=tol)
    d_or, m_or = _LangleyOracle(64)
    u_or = np.array([complex(d/m) for d, m in zip(d_or, m_or)])
    np.testing.assert_allclose(u_seq[0], u_or, rtol=1e-13)
    assert 0. < tail_norm < 0.1

def test_langley_kernel_norm():
    d_seq = pylib_scen.LangleyKernel(np.arange(2**16))[0]
    tail = pylib_scen.LangleyKernelTail(2**16)
    e_val = np.e
    assert np.sum(np.abs(d_seq)**2) <= e_val/(2*(e_val + 1))
    assert np.sum(np.abs(d_seq)**2) + tail >= e_val/(2*(e_val + 1))

def test_langley_determinant_oracle(tol):
    data = pylib_sec.SecularDataFromStructured(pylib_scen.LangleyStructured(), pylib_scen.LangleyStructured(),
                                               pylib_scen.LangleySymbol())
    det, det_err, info = pylib_sec.SecularDeterminant(data, 0., tol)
    assert info['status'] == 'certified'
    d_or, m_or = _LangleyOracle(info['k_trunc'])
    det_or = complex(mpmath.fsum(d**2/m for d, m in zip(d_or, m_or)))
    #truncated sum agrees with the oracle to rounding, the tail is inside the bound
    assert abs(det - det_or) <= 1e-12 + det_err
    assert det_err < 1e-2*abs(det)

# Root Search
#--------------------------------------
def test_random_instance_roots_are_eigenvalues(rng, tol):
    phi, psi = _RandomPair(rng)
    sym_val = rng.standard_normal(5) + 1j*rng.standard_normal(5)
    eig_val = np.linalg.eigvals(pylib_mult.Assemble(sym_val, phi, psi, tol).matrix)
    data = pylib_sec.SecularDataFromFrames(sym_val, phi, psi, tol)
    search = pylib_sec.SecularRoots(data, tol=tol)
    assert search.status == 'certified'
    assert search.certificate.is_valid and search.certificate.winding_count == 3
    assert search.total_multiplicity == 3
    for root, mult, cert in search.roots:
        assert np.abs(eig_val - root).min() <= 1e-8*max(1., np.abs(eig_val).max())
        assert cert.is_valid

def test_certify_root_near(rng, tol):
    phi, psi = _RandomPair(rng)
    sym_val = rng.standard_normal(5)
    data = pylib_sec.SecularDataFromFrames(sym_val, phi, psi, tol)
    search = pylib_sec.SecularRoots(data, tol=tol)
    root = search.roots[0][0]
    gap = min(np.abs(sym_val - root).min(), np.abs(np.array([r[0] for r in search.roots[1:]] + [np.inf]) - root).min())
    cert = pylib_sec.CertifyRootNear(data, root, 0.25*gap, tol)
    assert cert.is_valid and cert.winding_count == search.roots[0][1]

def test_region_boundary_on_symbol(tol):
    with pytest.raises(ToleranceError):
        pylib_sec.SecularRoots(_TwoTermData(), pylib_sec.RectangleRegion(2., 4., -1., 1.), tol)

def test_structured_needs_region(tol):
    data = pylib_sec.SecularDataFromStructured(pylib_scen.LangleyStructured(), pylib_scen.LangleyStructured(),
                                               pylib_scen.LangleySymbol())
    with pytest.raises(InputError):
        pylib_sec.SecularRoots(data, tol=tol)
    with pytest.raises(ToleranceError):
        pylib_sec.SecularRoots(data, pylib_sec.DiskRegion(0., 1.5), tol)

def test_regions():
    rect = pylib_sec.RectangleRegion(0., 2., -1., 1.)
    np.testing.assert_array_equal(rect.contains(np.array([1., 3., 1. + 2j])), [True, False, False])
    np.testing.assert_allclose(rect.boundary_distance(np.array([1., 3., 0.5 + 0.5j])), [1., 1., 0.5])
    np.testing.assert_allclose(rect.path(np.array([0., 0.25, 1.])), [-1j, 2. - 1j, -1j])
    disk = pylib_sec.DiskRegion(1j, 2.)
    box = disk.bounding_box()
    assert (box.x0, box.x1, box.y0, box.y1) == (-2., 2., -1., 3.)
    with pytest.raises(InputError):
        pylib_sec.RectangleRegion(1., 0., 0., 1.)

def test_heat_grid(tol):
    df_grid = pylib_sec.SecularHeatGrid(_TwoTermData(), np.linspace(-1., 1., 5), np.linspace(-1., 1., 5), tol=tol)
    assert list(df_grid.columns) == ['re', 'im', 'abs_det', 'error_bound', 'certified']
    assert len(df_grid) == 25
    row = df_grid[(df_grid.re == 0.) & (df_grid.im == 0.)].iloc[0]
    np.testing.assert_allclose(row.abs_det, 5./6.)
    assert row.certified
    df_empty = pylib_sec.SecularHeatGrid(_TwoTermData(), [10.], [10.], pylib_sec.DiskRegion(0., 1.), tol)
    assert len(df_empty) == 0 and list(df_empty.columns) == list(df_grid.columns)

# Bordered Evaluation and Subdivision
#--------------------------------------
def test_bordered_matches_product(rng, tol):
    phi, psi = _RandomPair(rng, 3, 6)
    sym_val = rng.standard_normal(6) + 1j*rng.standard_normal(6)
    data = pylib_sec.SecularDataFromFrames(sym_val, phi, psi, tol)
    pole_idx = np.array([0, 2, 5])
    ev = pylib_sec._SecularEvaluator(data, data.n_total, pole_idx)
    assert ev.bordered
    lams = np.array([0.3 + 0.1j, -1.2 + 0.7j, 2.5j, 0.9 - 0.4j])
    g_b, err_b = ev.bordered_det(lams)
    det, _ = ev.det(lams)
    g_ref = det*np.prod(sym_val[pole_idx][np.newaxis,:] - lams[:,np.newaxis], axis=1)
    np.testing.assert_allclose(g_b, g_ref, rtol=1e-9)
    assert np.all(np.isfinite(err_b))

def test_bordered_is_finite_at_poles(rng, tol):
    phi, psi = _RandomPair(rng, 2, 4)
    sym_val = rng.standard_normal(4) + 1j*rng.standard_normal(4)
    data = pylib_sec.SecularDataFromFrames(sym_val, phi, psi, tol)
    ev = pylib_sec._SecularEvaluator(data, data.n_total, np.arange(4))
    g, g_err = ev(sym_val)
    assert np.all(np.isfinite(g)) and np.all(np.isfinite(g_err))

def test_rectangle_splits():
    rect = pylib_sec.RectangleRegion(0., 2., -1., 1.)
    left, right = rect.split_x(0.25)
    assert (left.x0, left.x1, right.x0, right.x1) == (0., 0.5, 0.5, 2.)
    assert left.y0 == right.y0 == -1. and left.y1 == right.y1 == 1.
    low, high = rect.split_y(0.75)
    assert (low.y0, low.y1, high.y0, high.y1) == (-1., 0.5, 0.5, 1.)
    assert len(rect.split(0.5, 0.5)) == 4

@pytest.mark.parametrize('n_dim, n_exc', [(2, 1), (4, 2), (6, 3), (5, 3)])
@pytest.mark.parametrize('seed', [11, 3952471224, 628502548])
def test_random_excess_roots_match_dense(seed, n_dim, n_exc, tol):
    scen = pylib_scen.RandomInstance(seed, n_dim, n_dim + n_exc, 'generic')
    eig_val = np.linalg.eigvals(scen.assemble(tol).matrix)
    data = pylib_sec.SecularDataFromFrames(scen.sym_val, scen.phi, scen.psi, tol)
    search = pylib_sec.SecularRoots(data, tol=tol)
    assert search.status == 'certified'
    assert search.certificate.winding_count == n_dim
    assert search.total_multiplicity == n_dim
    scale = max(1., np.abs(eig_val).max())
    for root, _, _ in search.roots:
        assert np.abs(eig_val - root).min() <= 1e-8*scale
