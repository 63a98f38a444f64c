#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Wed Oct  7 14:36:12 2026

Tests of dense spectra, classification of structured models, truncation
diagnostics and interval counts
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
from Python_lib.multipliers import pylib_spectra as pylib_spec
from Python_lib.scenarios import pylib_scenarios as pylib_scen

# Dense Spectra
#--------------------------------------
def test_finite_spectrum_multiplicities(tol):
    phi = pylib_frm.FiniteFrame(np.eye(4))
    inst = pylib_mult.Assemble([2., 1., 2., 1j], phi, phi, tol)
    rep = pylib_spec.FiniteSpectrum(inst, tol)
    np.testing.assert_allclose(rep.values, [1j, 1., 2.])
    assert [p.multiplicity for p in rep.points] == [1, 1, 2]
    assert not rep.diagnostics['hermitian']
    df_pts = rep.to_dataframe()
    assert list(df_pts.columns) == ['re', 'im', 'multiplicity', 'label', 'provenance']
    assert (df_pts.label == 'eigenvalue').all()

def test_finite_spectrum_hermitian(mercedes, tol):
    phi = pylib_frm.FiniteFrame(mercedes)
    inst = pylib_mult.Assemble([1., 2., 3.], phi, pylib_frm.CanonicalDual(phi), tol)
    rep = pylib_spec.FiniteSpectrum(inst, tol)
    assert rep.diagnostics['hermitian']
    assert rep.provenance['solver'] == 'eigh'
    np.testing.assert_allclose(np.sort(rep.eigenvalues.real), np.linalg.eigvalsh(inst.matrix))

def test_match_multisets():
    max_dist, i_perm = pylib_spec.MatchMultisets([1., 2., 2.], [2., 1. + 1e-3, 2.])
    np.testing.assert_allclose(max_dist, 1e-3)
    np.testing.assert_array_equal(sorted(i_perm), [0, 1, 2])
    assert i_perm[0] == 1
    assert pylib_spec.MatchMultisets([1.], [1., 2.])[0] == np.inf
    assert pylib_spec.MatchMultisets([], [])[0] == 0.

# Structured Classification
#--------------------------------------
def test_classify_riesz_model(tol):
    scen = pylib_scen.RieszStructuredPair(32)
    phi_struct, psi_struct = scen.structured
    rep = pylib_spec.ClassifySpectrum(phi_struct, psi_struct, scen.symbol, [0., 0.5, 0.3], tol, n_trunc=32)
    labels = {p.value: (p.label, p.part, p.multiplicity) for p in rep.points}
    assert labels[0j] == ('continuous_candidate', 'point_or_continuous', None)
    assert labels[0.5 + 0j] == ('eigenvalue', None, 1)
    np.testing.assert_allclose(rep.diagnostics['resolvent'], [0.3])
    np.testing.assert_allclose(rep.essential, [0.])

def test_classify_periodic_limit_is_point(tol):
    scen = pylib_scen.RieszStructuredPair(16)
    phi_struct, psi_struct = scen.structured
    rep = pylib_spec.ClassifySpectrum(phi_struct, psi_struct, pylib_sym.PeriodicSymbol([1., -1.]), [1.], tol, n_trunc=16)
    assert rep.points[0].label == 'eigenvalue' and rep.points[0].part == 'point'
    assert rep.points[0].multiplicity == np.inf

def test_classify_limit_attained_finitely_often(tol):
    #m_0 = 0 and m_n = 1/(n+1) otherwise: the limit 0 is hit once, its dual vector spans the kernel
    scen = pylib_scen.RieszStructuredPair(16)
    phi_struct, psi_struct = scen.structured
    struct = pylib_sym.LimitStructure([pylib_sym.LimitClass(0., pylib_sym.IndexSelector('all'),
                                                            pylib_sym.Majorant('power', const=1., power=1., offset=1.))])
    symbol = pylib_sym.Symbol(generator=lambda n: np.where(np.asarray(n) == 0, 0., 1./(np.asarray(n) + 1.)) + 0j,
                              structure=struct)
    rep = pylib_spec.ClassifySpectrum(phi_struct, psi_struct, symbol, [0.], tol, n_trunc=16)
    pt = rep.points[0]
    assert (pt.label, pt.part, pt.multiplicity) == ('eigenvalue', 'point', 1)
    assert rep.diagnostics['candidates'][0]['kernel_dim'] == 1

def test_classify_langley(tol):
    struct = pylib_scen.LangleyStructured()
    rep = pylib_spec.ClassifySpectrum(struct, struct, pylib_scen.LangleySymbol(), [1., 0., -0.5], tol)
    assert [p.value for p in rep.points] == [1.]
    assert rep.points[0].label == 'continuous_candidate'
    np.testing.assert_allclose(rep.diagnostics['resolvent'], [0., -0.5])
    assert all(c['case'] in ('i', 'iv') for c in rep.diagnostics['candidates'])

def test_essential_spectrum_needs_structure(tol):
    struct = pylib_scen.LangleyStructured()
    with pytest.raises(InputError):
        pylib_spec.EssentialSpectrum(struct, struct, pylib_sym.Symbol([1., 2.]), tol)

# Truncation Diagnostics
#--------------------------------------
def test_tail_norm_check(tol):
    scen = pylib_scen.ExampleInterleavedONB(40)
    _, sym_pp = pylib_sym.CompactSplit(scen.symbol)
    df_tail = pylib_spec.TailNormCheck(scen.phi, scen.psi, sym_pp, [5, 10, 20], tol)
    assert df_tail.within.all() and df_tail.monotone.all()
    with pytest.raises(InputError):
        pylib_spec.TailNormCheck(scen.phi, scen.psi, sym_pp, [80], tol)

def test_truncated_family(tol):
    def builder(size):
        scen = pylib_scen.ExampleInterleavedONB(size)
        sym_p, _ = pylib_sym.CompactSplit(scen.symbol)
        return scen.phi, scen.psi, scen.sym_val, sym_p.prefix(scen.phi.n_vec)
    df_conv, flags = pylib_spec.TruncatedSpectrumFamily(builder, [20, 40, 80], [0., 1.], 0.1, tol)
    assert list(df_conv['size']) == [20, 40, 80]
    assert flags['tail_norm_bound_nonincreasing']
    with pytest.raises(InputError):
        pylib_spec.TruncatedSpectrumFamily(None, [10], [0.], 0.1, tol)

def test_behncke_count(rng, tol):
    phi = pylib_frm.FiniteFrame(rng.standard_normal((4,6)))
    sym_val = rng.uniform(-1., 1., 6)
    inst = pylib_mult.Assemble(sym_val, phi, pylib_frm.CanonicalDual(phi), tol)
    n_eig, lower, passed = pylib_spec.BehnckeIntervalCount(inst, -0.5, 0.5, tol)
    assert passed and lower == int(np.sum(np.abs(sym_val) <= 0.5)) - 6
    with pytest.raises(InputError):
        pylib_spec.BehnckeIntervalCount(inst, 1., 0., tol)
    with pytest.raises(InputError):
        pylib_spec.BehnckeIntervalCount(pylib_mult.Assemble(sym_val, phi, phi, tol), -0.5, 0.5, tol)

def test_group_by_nearest_limit():
    i_lim, dist = pylib_spec.GroupByNearestLimit([0.1, 0.9, 0.45], [0., 1.])
    np.testing.assert_array_equal(i_lim, [0, 1, 0])
    np.testing.assert_allclose(dist, [0.1, 0.1, 0.45])
    with pytest.raises(InputError):
        pylib_spec.GroupByNearestLimit([0.], [])

def test_eigenvalue_tail_report():
    eig_sets = {2: np.array([0.5, 0.25]), 4: np.array([0.5, 0.25, 0.125, 0.0625])}
    df_tail = pylib_spec.EigenvalueTailReport(eig_sets, eig_sets, [0.], 1., 0, closed_form_bound=[1.])
    np.testing.assert_allclose(df_tail.eig_sum, [0.75, 0.9375])
    assert df_tail.within_bound.all() and df_tail.within_closed_form.all()
    assert df_tail.monotone.all()
