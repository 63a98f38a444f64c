#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Tue Oct  6 11:20:17 2026

Tests of symbols, limit structures and the compact split
"""

# Packages
# ---------------------------
import numpy as np
import pytest
#user libraries
from Python_lib.numerics.pylib_linalg import InputError, ToleranceError
from Python_lib.frames import pylib_symbols as pylib_sym

def _AlternatingDecay():
    #m_n = (-1)^n (1 + 1/(n+1))
    struct = pylib_sym.LimitStructure([
        pylib_sym.LimitClass(1., pylib_sym.IndexSelector('modulo', modulus=2, residue=0),
                             pylib_sym.Majorant('power', const=1., power=1., offset=1.)),
        pylib_sym.LimitClass(-1., pylib_sym.IndexSelector('modulo', modulus=2, residue=1),
                             pylib_sym.Majorant('power', const=1., power=1., offset=1.))])
    gen = lambda n: (-1.)**np.asarray(n) * (1. + 1./(np.asarray(n) + 1.))
    return pylib_sym.Symbol(generator=gen, structure=struct, name='alt')

def test_empty_symbol():
    with pytest.raises(InputError):
        pylib_sym.Symbol([])

def test_non_finite_symbol():
    with pytest.raises(InputError):
        pylib_sym.Symbol([1., np.inf])

def test_periodic_symbol_limits(tol):
    sym = pylib_sym.PeriodicSymbol([1., -1.])
    np.testing.assert_allclose(sym.prefix(5), [1., -1., 1., -1., 1.])
    np.testing.assert_allclose(pylib_sym.LimitPoints(sym, tol), [-1., 1.])
    assert not pylib_sym.IsCompactSymbol(sym, tol)

def test_declared_majorant_is_checked():
    struct = pylib_sym.LimitStructure([pylib_sym.LimitClass(0., pylib_sym.IndexSelector('all'),
                                                            pylib_sym.Majorant('power', const=1., power=2., offset=1.))])
    with pytest.raises(InputError):
        pylib_sym.Symbol(generator=lambda n: 1./(np.asarray(n) + 1.), structure=struct)

def test_overlapping_classes():
    struct = pylib_sym.LimitStructure([pylib_sym.LimitClass(0., pylib_sym.IndexSelector('all')),
                                       pylib_sym.LimitClass(1., pylib_sym.IndexSelector('list', indices=[3]))])
    with pytest.raises(InputError):
        struct.class_of(np.arange(5))

def test_compact_split():
    sym = _AlternatingDecay()
    sym_p, sym_pp = pylib_sym.CompactSplit(sym)
    n_idx = np.arange(10)
    np.testing.assert_allclose(sym_p.prefix(10), (-1.)**n_idx)
    np.testing.assert_allclose(sym_pp.prefix(10), (-1.)**n_idx/(n_idx + 1.))
    np.testing.assert_allclose(sym_p.prefix(10) + sym_pp.prefix(10), sym.prefix(10))
    np.testing.assert_allclose(sym_pp.structure.limits, [0.])

def test_compact_symbol(tol):
    struct = pylib_sym.LimitStructure([pylib_sym.LimitClass(0., pylib_sym.IndexSelector('all'),
                                                            pylib_sym.Majorant('power', const=1., power=1., offset=1.))])
    sym = pylib_sym.Symbol(generator=lambda n: 1./(np.asarray(n) + 1.), structure=struct)
    assert pylib_sym.IsCompactSymbol(sym, tol)

def test_limit_points_heuristic(tol):
    sym = pylib_sym.Symbol(generator=lambda n: (-1.)**np.asarray(n) * (1. + 1e-6/(np.asarray(n) + 1.)))
    np.testing.assert_allclose(pylib_sym.LimitPoints(sym, tol, size=256), [-1., 1.], atol=1e-6)
    with pytest.raises(InputError):
        pylib_sym.LimitPoints(pylib_sym.Symbol(np.ones(10)), tol)

def test_distance_lower_bound():
    sym = _AlternatingDecay()
    #prefix of length 100 reaches 1 + 1/99 on the even class
    d_low = pylib_sym.DistanceLowerBound(sym, 1.5, size=100)
    assert 0. < d_low <= pylib_sym.DistanceTo(sym, 1.5, size=100)
    assert pylib_sym.DistanceLowerBound(sym, 1., size=100) == 0.
    with pytest.raises(ToleranceError):
        pylib_sym.DistanceLowerBound(pylib_sym.Symbol(generator=lambda n: np.zeros(len(n))), 1.)

def test_symbol_hits(tol):
    sym = pylib_sym.PeriodicSymbol([1., 2., 2.])
    idx_hit, inf_often = pylib_sym.SymbolHits(sym, 2., tol, size=9)
    np.testing.assert_array_equal(idx_hit, [1, 2, 4, 5, 7, 8])
    assert inf_often
    idx_hit, inf_often = pylib_sym.SymbolHits(pylib_sym.Symbol([3., 1., 3.]), 3., tol)
    np.testing.assert_array_equal(idx_hit, [0, 2])
    assert not inf_often

def test_symbol_hits_finite_class(tol):
    #an exact list class holds finitely many indices
    sym = pylib_sym.Symbol(generator=lambda n: np.where(n == 0, 3., 1./(n + 1.)))
    sym.structure = pylib_sym.LimitStructure([
        pylib_sym.LimitClass(3., pylib_sym.IndexSelector('list', indices=[0])),
        pylib_sym.LimitClass(0., pylib_sym.IndexSelector('modulo', modulus=1, residue=0),
                             pylib_sym.Majorant('power', const=1., power=1., offset=1.))])
    idx_hit, inf_often = pylib_sym.SymbolHits(sym, 3., tol, size=16)
    np.testing.assert_array_equal(idx_hit, [0])
    assert not inf_often

def test_shift_and_conj():
    sym = pylib_sym.Symbol([1j, 2.], structure=None)
    np.testing.assert_allclose(sym.conj().entries, [-1j, 2.])
    np.testing.assert_allclose(sym.shift(1.).entries, [-1. + 1j, 1.])
    assert sym.sup_norm() == 2.

def test_spectral_point_labels():
    with pytest.raises(InputError):
        pylib_sym.SpectralPoint(0., 'residual')
    with pytest.raises(InputError):
        pylib_sym.SpectralPoint(0., 'eigenvalue')
    pt = pylib_sym.SpectralPoint(1., 'limit_point', part='point')
    assert pt.to_dict()['part'] == 'point'
    assert pylib_sym.SpectralPoint(1., 'eigenvalue', np.inf).multiplicity == np.inf
