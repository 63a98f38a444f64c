#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Tue Oct  6 13:48:09 2026

Tests of multiplier assembly and the invertibility criteria
"""

# Packages
# ---------------------------
import numpy as np
import pytest
#user libraries
from Python_lib.numerics.pylib_linalg import InputError
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.frames import pylib_symbols as pylib_sym
from Python_lib.multipliers import pylib_multipliers as pylib_mult

def _MercedesPair(mercedes):
    phi = pylib_frm.FiniteFrame(mercedes)
    return phi, pylib_frm.CanonicalDual(phi)

def test_constant_symbol_gives_identity(mercedes, tol):
    phi, psi = _MercedesPair(mercedes)
    inst = pylib_mult.Assemble(np.ones(3), phi, psi, tol)
    np.testing.assert_allclose(inst.matrix, np.eye(2), atol=1e-14)
    assert inst.fact_res < 1e-14
    rep = pylib_mult.CheckInvertibility(np.ones(3), phi, psi, tol)
    assert rep.bijective and rep.consistent
    assert rep.dims['excess_phi'] == rep.dims['excess_mphi'] == 1

def test_rank_one_symbol_not_injective(mercedes, tol):
    phi, psi = _MercedesPair(mercedes)
    rep = pylib_mult.CheckInvertibility([1., 0., 0.], phi, psi, tol)
    assert not rep.injective and not rep.surjective and not rep.bijective
    assert rep.consistent
    assert rep.direct['rank'] == 1
    #m phi spans only one direction, its kernel grows
    assert rep.dims['excess_mphi'] == 2
    assert rep.witness_res['kernel'] < 1e-12
    assert rep.witness_res['non_attained'] < 1e-12

def test_zero_symbol_sum_to_kernel(mercedes, tol):
    #m = (1, 1, -2): m phi sums to 3 phi_0 + 0 since phi_0 + phi_1 + phi_2 = 0
    phi, psi = _MercedesPair(mercedes)
    rep = pylib_mult.CheckInvertibility([1., 1., -2.], phi, psi, tol)
    inst = pylib_mult.Assemble([1., 1., -2.], phi, psi, tol)
    assert rep.bijective == (np.linalg.matrix_rank(inst.matrix) == 2)
    assert rep.consistent

def test_random_pairs_consistent(rng, tol):
    for _ in range(20):
        phi = pylib_frm.FiniteFrame(rng.standard_normal((3,5)) + 1j*rng.standard_normal((3,5)))
        psi = pylib_frm.CanonicalDual(phi)
        sym = rng.standard_normal(5)
        sym[rng.integers(5, size=2)] = 0.
        rep = pylib_mult.CheckInvertibility(sym, phi, psi, tol)
        assert rep.consistent
        assert set(rep.criteria) == {'injective_b', 'injective_c', 'surjective_b', 'surjective_c',
                                     'bijective_b', 'bijective_c', 'bijective_d', 'bijective_e'}

def test_adjoint(rng, tol):
    phi = pylib_frm.FiniteFrame(rng.standard_normal((3,6)) + 1j*rng.standard_normal((3,6)))
    psi = pylib_frm.CanonicalDual(phi)
    sym = pylib_sym.Symbol(rng.standard_normal(6) + 1j*rng.standard_normal(6))
    inst = pylib_mult.Assemble(sym, phi, psi, tol)
    inst_adj = pylib_mult.Adjoint(inst, tol)
    np.testing.assert_allclose(inst_adj.matrix, inst.matrix.conj().T, atol=1e-12)

def test_norm_bound(rng, tol):
    phi = pylib_frm.FiniteFrame(rng.standard_normal((4,9)))
    psi = pylib_frm.CanonicalDual(phi)
    inst = pylib_mult.Assemble(rng.uniform(-2, 2, 9), phi, psi, tol)
    assert np.linalg.norm(inst.matrix, 2) <= pylib_mult.NormBound(inst) * (1 + 1e-12)

def test_parseval_similarity(rng, tol):
    phi = pylib_frm.FiniteFrame(rng.standard_normal((3,5)) + 1j*rng.standard_normal((3,5)))
    psi = pylib_frm.CanonicalDual(phi)
    inst = pylib_mult.Assemble(rng.standard_normal(5), phi, psi, tol)
    inst_rho, sim_res = pylib_mult.ParsevalSimilarity(inst, tol)
    assert sim_res < 1e-10
    np.testing.assert_allclose(np.sort_complex(np.linalg.eigvals(inst_rho.matrix)),
                               np.sort_complex(np.linalg.eigvals(inst.matrix)), atol=1e-10)

def test_shape_mismatch(mercedes, tol):
    phi = pylib_frm.FiniteFrame(mercedes)
    with pytest.raises(InputError):
        pylib_mult.Assemble(np.ones(3), phi, pylib_frm.FiniteFrame(np.eye(2)), tol)
    with pytest.raises(InputError):
        pylib_mult.Assemble(np.ones(2), phi, phi, tol)
