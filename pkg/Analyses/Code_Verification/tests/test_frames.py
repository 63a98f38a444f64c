#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Tue Oct  6 10:05:51 2026

Tests of finite and structured frames
"""

# Packages
# ---------------------------
import numpy as np
import pytest
#user libraries
from Python_lib.numerics.pylib_linalg import InputError
from Python_lib.frames import pylib_frames as pylib_frm

def test_mercedes_bounds_and_excess(mercedes, tol):
    phi = pylib_frm.FiniteFrame(mercedes, name='mercedes')
    bnds = pylib_frm.ComputeFrameBounds(phi, tol)
    np.testing.assert_allclose([bnds.lower, bnds.upper], [1.5, 1.5])
    assert pylib_frm.Excess(phi, tol) == 1
    assert not pylib_frm.IsRieszBasis(phi, tol)
    np.testing.assert_allclose(pylib_frm.BesselBound(phi), 1.5)

def test_mercedes_canonical_dual(mercedes, tol):
    phi = pylib_frm.FiniteFrame(mercedes)
    psi = pylib_frm.CanonicalDual(phi, tol)
    np.testing.assert_allclose(psi.synth_mat, mercedes*2/3, atol=1e-14)
    flag, res = pylib_frm.IsDualPair(phi, psi, tol)
    assert flag and res < 1e-12
    rho = pylib_frm.CanonicalParseval(phi, tol)
    assert pylib_frm.ComputeFrameBounds(rho, tol).is_parseval(1e-12)

def test_mercedes_kernel_basis(mercedes, tol):
    phi = pylib_frm.FiniteFrame(mercedes)
    kern = pylib_frm.ComputeKernelBasis(phi, tol=tol)
    np.testing.assert_array_equal(kern.idx_exc, [0])
    np.testing.assert_allclose(kern.seqs, [[1., 1., 1.]], atol=1e-14)

def test_kernel_basis_annihilates(rng, tol):
    phi = pylib_frm.FiniteFrame(rng.standard_normal((3,7)) + 1j*rng.standard_normal((3,7)))
    kern = pylib_frm.ComputeKernelBasis(phi, tol=tol)
    assert kern.n_exc == 4
    np.testing.assert_allclose(phi.synth_mat @ kern.seqs.T, 0., atol=1e-10)
    np.testing.assert_allclose(kern.seqs[:, kern.idx_exc], np.eye(4), atol=1e-14)

def test_kernel_basis_bad_index_set(tol):
    #duplicated vector: removing index 2 keeps a dependent pair
    phi = pylib_frm.FiniteFrame(np.array([[1., 1., 0.], [0., 0., 1.]]))
    with pytest.raises(InputError):
        pylib_frm.ComputeKernelBasis(phi, idx_exc=[2], tol=tol)

def test_non_frame(tol):
    phi = pylib_frm.FiniteFrame(np.array([[1., 2.], [0., 0.]]))
    assert not pylib_frm.IsFrame(phi, tol)
    with pytest.raises(pylib_frm.FrameError):
        pylib_frm.ComputeFrameBounds(phi, tol)
    with pytest.raises(pylib_frm.FrameError):
        pylib_frm.CanonicalDual(phi, tol)

def test_analysis_synthesis(mercedes):
    phi = pylib_frm.FiniteFrame(mercedes)
    f = np.array([1., -2.])
    coef = pylib_frm.Analysis(phi, f)
    np.testing.assert_allclose(pylib_frm.Synthesis(phi, coef), 1.5*f, atol=1e-14)
    with pytest.raises(InputError):
        pylib_frm.Analysis(phi, np.ones(3))

def test_select_excess_indices_skips_needed_vector(tol):
    phi = pylib_frm.FiniteFrame(np.array([[1., 0., 1., 1.], [0., 1., 0., 1.]]))
    #index 0 is removable since index 2 repeats it
    np.testing.assert_array_equal(pylib_frm.SelectExcessIndices(phi, tol), [0, 1])

def test_frame_bounds_validation():
    with pytest.raises(InputError):
        pylib_frm.FrameBounds(0., 1.)
    with pytest.raises(InputError):
        pylib_frm.FrameBounds(2., 1.)

def test_structured_frame_requires_rules():
    with pytest.raises(InputError):
        pylib_frm.StructuredFrame('closed_form', 1, lambda size: None)
    with pytest.raises(InputError):
        pylib_frm.StructuredFrame('fancy', 0, lambda size: None)

def test_dual_pair_rejects_scaled_vector(tol):
    phi = pylib_frm.FiniteFrame(np.array([[2., 0.], [0., 1.]]))
    onb = pylib_frm.FiniteFrame(np.eye(2))
    flag, res = pylib_frm.IsDualPair(phi, onb, tol)
    assert not flag
    np.testing.assert_allclose(res, 1.)

def test_frame_inequality(rng, tol):
    phi = pylib_frm.FiniteFrame(rng.standard_normal((4,9)) + 1j*rng.standard_normal((4,9)))
    bnds = pylib_frm.ComputeFrameBounds(phi, tol)
    for _ in range(50):
        f = rng.standard_normal(4) + 1j*rng.standard_normal(4)
        energy = np.sum(np.abs(pylib_frm.Analysis(phi, f))**2)
        f_sq = np.vdot(f, f).real
        assert bnds.lower*f_sq*(1. - 1e-12) <= energy <= bnds.upper*f_sq*(1. + 1e-12)

def test_scaled_frame_keeps_excess(rng, tol):
    phi = pylib_frm.FiniteFrame(rng.standard_normal((3,7)) + 1j*rng.standard_normal((3,7)))
    #semi-normalized symbol, 0.5 <= |m_n| <= 2
    sym_val = rng.uniform(0.5, 2., 7)*np.exp(2j*np.pi*rng.uniform(size=7))
    mphi = pylib_frm.ScaledFrame(sym_val, phi)
    np.testing.assert_allclose(mphi.synth_mat, phi.synth_mat*sym_val)
    assert pylib_frm.Excess(mphi, tol) == pylib_frm.Excess(phi, tol) == 4

def test_scaled_frame_zero_entry(mercedes, tol):
    #a zero on an excess-one frame whose remaining vectors span
    phi = pylib_frm.FiniteFrame(mercedes)
    mphi = pylib_frm.ScaledFrame([0., 1., 1.], phi)
    assert pylib_frm.IsFrame(mphi, tol)
    assert pylib_frm.Excess(mphi, tol) == pylib_frm.Excess(phi, tol) == 1
