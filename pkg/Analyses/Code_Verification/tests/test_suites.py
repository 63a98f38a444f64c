#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Fri Oct  9 09:45:03 2026

Property suites at reduced instance counts
"""

# Packages
# ---------------------------
import pytest
#user libraries
from Python_lib.numerics.pylib_linalg import InputError
from Python_lib.verification import pylib_suites as pylib_suite

@pytest.mark.parametrize('suite_fun, n_inst', [(pylib_suite.SuiteDuality, 40),
                                               (pylib_suite.SuiteInvertibility, 36),
                                               (pylib_suite.SuiteRieszSpectra, 20),
                                               (pylib_suite.SuiteSecularDense, 12),
                                               (pylib_suite.SuiteAdjointSymmetry, 20),
                                               (pylib_suite.SuiteBehncke, 20)])
def test_random_suites(suite_fun, n_inst, tol):
    res = suite_fun(seed=3, n_inst=n_inst, tol=tol)
    assert res.n_cases == n_inst
    assert res.passed, res.failures[:3]

def test_parallel_matches_serial(tol):
    res_1 = pylib_suite.SuiteDuality(seed=5, n_inst=16, tol=tol, n_jobs=1)
    res_2 = pylib_suite.SuiteDuality(seed=5, n_inst=16, tol=tol, n_jobs=2)
    assert res_1.to_dict() == res_2.to_dict()

def test_case_seeds():
    assert pylib_suite.CaseSeed(0, 1) == pylib_suite.CaseSeed(0, 1)
    assert len({pylib_suite.CaseSeed(0, i) for i in range(100)}) == 100

@pytest.mark.parametrize('suite_fun, sizes', [(pylib_suite.SuiteExampleInterleaved, [40]),
                                              (pylib_suite.SuiteExampleFourier, [8]),
                                              (pylib_suite.SuiteExampleDuplicated, [16])])
def test_example_suites(suite_fun, sizes, tol):
    res = suite_fun(sizes=sizes, tol=tol)
    assert res.passed, res.failures
    assert res.discrepancies == []

def test_diagonal_suite_reports_discrepancy(tol):
    res = pylib_suite.SuiteExampleDiagonal(sizes=[20], tol=tol)
    assert res.passed
    assert [d['fact'] for d in res.discrepancies] == ['stated_inverse_n']

def test_langley_suite(tol):
    res = pylib_suite.SuiteExampleLangley(sizes=[1024], tol=tol)
    assert res.passed, res.failures
    assert res.summary['spectrum_is_one'] == 'pass'
    assert res.summary['heat_grid_certified'] == 'pass'

def test_eigenvalue_tails(tol):
    res = pylib_suite.SuiteEigenvalueTails(sizes=[20, 40], tol=tol)
    assert res.passed, res.failures
    assert [d['fact'] for d in res.discrepancies] == ['symbol_side_tail_bound']

def test_run_suites_order(tol):
    results = pylib_suite.RunSuites(['riesz-spectra', 'duality', 'riesz-spectra'], seed=1, n_inst=4, tol=tol)
    assert [r.name for r in results] == ['riesz-spectra', 'duality']
    with pytest.raises(InputError):
        pylib_suite.RunSuites(['nonsense'])

@pytest.mark.parametrize('case_seed', [3952471224, 628502548])
def test_secular_dense_recorded_cases(case_seed, tol):
    out = pylib_suite._CaseSecularDense(0, case_seed, tol)
    assert out['passed'], out

def test_secular_dense_wide_run(tol):
    res = pylib_suite.SuiteSecularDense(seed=3, n_inst=150, tol=tol)
    assert res.n_fail == 0, res.failures[:3]

def test_duality_recorded_case(tol):
    out = pylib_suite._CaseDuality(165, 2007281806, tol)
    assert out['passed'] and out['residual'] <= 1e-10, out

def test_duality_wide_run(tol):
    res = pylib_suite.SuiteDuality(seed=3, n_inst=200, tol=tol)
    assert res.n_fail == 0 and res.summary['max_residual'] <= 1e-10

def test_result_tags_resolve():
    assert pylib_suite.ResolveSuiteName('th_inv') == ['invertibility']
    assert pylib_suite.ResolveSuiteName('exm 2(b)') == ['example_diagonal_pair']
    assert pylib_suite.ResolveSuiteName('th_main_ex1') == ['secular-vs-dense', 'adjoint-symmetry', 'behncke-count']
    for suites in pylib_suite.TAG_SUITES.values():
        assert all(s in pylib_suite.SUITES for s in suites)
    with pytest.raises(InputError):
        pylib_suite.ResolveSuiteName('th_nine')

def test_run_suites_by_tag(tol):
    results = pylib_suite.RunSuites(['pro_Riesz', 'riesz-spectra', 'th_inv'], seed=1, n_inst=4, tol=tol)
    assert [r.name for r in results] == ['riesz-spectra', 'invertibility']
    assert all(r.passed for r in results)
