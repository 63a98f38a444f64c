#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Thu Oct  1 15:37:09 2026

Property suites over random instances and worked examples: duality,
invertibility criteria, Riesz spectra, secular versus dense eigenvalues,
adjoint symmetry, interval counts and eigenvalue tails
"""

# Packages
# ---------------------------
#load libraries
import time
import logging
#arithmetic libraries
import numpy as np
from joblib import Parallel, delayed, cpu_count
#user libraries
from Python_lib.numerics import pylib_linalg as pylib_la
from Python_lib.numerics.pylib_linalg import InputError, ToleranceError, BudgetError
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.frames import pylib_symbols as pylib_sym
from Python_lib.multipliers import pylib_multipliers as pylib_mult
from Python_lib.multipliers import pylib_secular as pylib_sec
from Python_lib.multipliers import pylib_spectra as pylib_spec
from Python_lib.scenarios import pylib_scenarios as pylib_scen

logger = logging.getLogger(__name__)

#maximum number of counterexamples kept per suite
MAX_DUMPS = 20

# Suite Result
#--------------------------------------
class SuiteResult:
    '''
    Outcome of a property suite

    Attributes
    ----------
    name : string
        Suite name.
    n_cases : int
        Number of evaluated cases.
    failures : list
        Counterexample dumps (seed, shapes, residuals), at most MAX_DUMPS.
    n_fail : int
        Number of failing cases.
    discrepancies : list
        Stated facts not reproduced; never counted as failures.
    summary : dict
        Suite-level statistics.
    elapsed : real
        Wall time in seconds.
    '''

    def __init__(self, name, n_cases, n_fail, failures, discrepancies=None, summary=None, elapsed=0.):
        self.name          = name
        self.n_cases       = int(n_cases)
        self.n_fail        = int(n_fail)
        self.failures      = failures[:MAX_DUMPS]
        self.discrepancies = [] if discrepancies is None else discrepancies
        self.summary       = {} if summary is None else summary
        self.elapsed       = elapsed

    @property
    def passed(self):
        return self.n_fail == 0

    def to_dict(self, timing=False):
        res_dict = {'name': self.name, 'passed': self.passed, 'n_cases': self.n_cases, 'n_fail': self.n_fail,
                    'failures': self.failures, 'discrepancies': self.discrepancies, 'summary': self.summary}
        if timing:
            res_dict['elapsed_s'] = self.elapsed
        return res_dict

def CaseSeed(seed, i_case):
    '''Independent seed of case i_case of a suite run with seed.'''
    return int(np.random.SeedSequence([int(seed), int(i_case)]).generate_state(1)[0])

def _RunCases(case_fun, n_case, seed, n_jobs, tol):
    #joblib fan-out, results kept in case order
    n_jobs = 1 if n_jobs is None else (cpu_count() if n_jobs < 1 else n_jobs)
    if n_jobs == 1:
        return [case_fun(i, CaseSeed(seed, i), tol) for i in range(n_case)]
    return Parallel(n_jobs=n_jobs)(delayed(case_fun)(i, CaseSeed(seed, i), tol) for i in range(n_case))

def _Collect(name, outcomes, elapsed, summary=None):
    failures = [o for o in outcomes if not o['passed']]
    return SuiteResult(name, len(outcomes), len(failures), failures, summary=summary, elapsed=elapsed)

def _Guarded(case_fun):
    #numerical exceptions of a single case become a failing dump
    def wrapped(i_case, seed, tol):
        try:
            return case_fun(i_case, seed, tol)
        except (ToleranceError, BudgetError, InputError, np.linalg.LinAlgError) as err:
            return {'case': i_case, 'seed': seed, 'passed': False, 'error': '%s: %s'%(type(err).__name__, err)}
    return wrapped

# Random-Instance Suites
#--------------------------------------
def _CaseDuality(i_case, seed, tol):
    rng = np.random.default_rng(seed)
    n_dim = int(rng.integers(1, 13))
    n_vec = int(rng.integers(n_dim, 25))
    scen = pylib_scen.RandomInstance(seed, n_dim, n_vec, 'generic', canonical=bool(rng.integers(0, 2)))
    _, res = pylib_frm.IsDualPair(scen.phi, scen.psi, tol)
    return {'case': i_case, 'seed': seed, 'd': n_dim, 'N': n_vec, 'passed': res <= 1e-10, 'residual': res}

def SuiteDuality(seed=0, n_inst=1000, tol=None, n_jobs=1, **kwargs):
    '''||D_phi C_psi - I|| <= 1e-10 on random dual pairs, d <= 12, N <= 24.'''
    t_start = time.time()
    outcomes = _RunCases(_Guarded(_CaseDuality), n_inst, seed, n_jobs, tol)
    res_max = max((o.get('residual', 0.) for o in outcomes), default=0.)
    return _Collect('duality', outcomes, time.time() - t_start, {'max_residual': res_max})

def _CaseInvertibility(i_case, seed, tol):
    rng = np.random.default_rng(seed)
    profile = pylib_scen.PROFILES[i_case % len(pylib_scen.PROFILES)]
    n_dim = int(rng.integers(1, 9))
    n_vec = n_dim if profile == 'riesz_canonical' else int(rng.integers(n_dim, n_dim + 7))
    scen = pylib_scen.RandomInstance(seed, n_dim, n_vec, profile)
    rep = pylib_mult.CheckInvertibility(scen.sym_val, scen.phi, scen.psi, tol)
    #a complete m phi keeps the excess of phi
    ok_exc = rep.dims['excess_mphi'] != n_vec - n_dim or rep.dims['excess_phi'] == rep.dims['excess_mphi']
    return {'case': i_case, 'seed': seed, 'd': n_dim, 'N': n_vec, 'profile': profile, 'passed': rep.consistent and ok_exc,
            'criteria': rep.criteria, 'direct': rep.direct}

def SuiteInvertibility(seed=0, n_inst=1000, tol=None, n_jobs=1, **kwargs):
    '''Subspace criteria agree with the direct rank across all symbol profiles.'''
    t_start = time.time()
    outcomes = _RunCases(_Guarded(_CaseInvertibility), n_inst, seed, n_jobs, tol)
    n_bij = sum(bool(o.get('direct', {}).get('injective')) for o in outcomes)
    return _Collect('invertibility', outcomes, time.time() - t_start, {'n_bijective': n_bij})

def _CaseRieszSpectra(i_case, seed, tol):
    rng = np.random.default_rng(seed)
    n_dim = int(rng.integers(1, 11))
    scen = pylib_scen.RandomInstance(seed, n_dim, n_dim, 'riesz_canonical')
    rep = pylib_spec.FiniteSpectrum(scen.assemble(tol), tol)
    max_dist, _ = pylib_spec.MatchMultisets(rep.eigenvalues, scen.sym_val)
    return {'case': i_case, 'seed': seed, 'd': n_dim, 'passed': max_dist <= 1e-9, 'max_distance': max_dist}

def SuiteRieszSpectra(seed=0, n_inst=200, tol=None, n_jobs=1, **kwargs):
    '''Spectrum of a Riesz-basis canonical pair equals the symbol multiset.'''
    t_start = time.time()
    outcomes = _RunCases(_Guarded(_CaseRieszSpectra), n_inst, seed, n_jobs, tol)
    return _Collect('riesz-spectra', outcomes, time.time() - t_start)

def _SecularInstance(seed):
    rng = np.random.default_rng(seed)
    n_dim = int(rng.integers(2, 7))
    n_exc = int(rng.integers(1, 4))
    return pylib_scen.RandomInstance(seed, n_dim, n_dim + n_exc, 'generic'), n_exc

def _AdjointCheck(inst, tol):
    eig_m   = pylib_spec.FiniteSpectrum(inst, tol).eigenvalues
    eig_adj = pylib_spec.FiniteSpectrum(pylib_mult.Adjoint(inst, tol), tol).eigenvalues
    max_dist, _ = pylib_spec.MatchMultisets(eig_adj, eig_m.conj())
    return max_dist

def _CaseSecularDense(i_case, seed, tol):
    scen, n_exc = _SecularInstance(seed)
    inst = scen.assemble(tol)
    eig_val = pylib_spec.FiniteSpectrum(inst, tol).eigenvalues
    data = pylib_sec.SecularDataFromFrames(scen.sym_val, scen.phi, scen.psi, tol)
    search = pylib_sec.SecularRoots(data, tol=tol)
    scale = max(1., float(np.abs(eig_val).max()))
    detail = {'case': i_case, 'seed': seed, 'd': scen.phi.dim, 'N': scen.phi.n_vec, 'q': n_exc,
              'winding': search.certificate.winding_count, 'n_roots': len(search.roots),
              'n_symbol_zeros': len(search.symbol_zeros)}

    #winding totals
    ok_wind = search.certificate.winding_count == len(eig_val) and search.total_multiplicity == len(eig_val)
    #secular roots are dense eigenvalues
    root_dist = [float(np.abs(eig_val - r).min()) for r, _, _ in search.roots]
    ok_roots = all(d <= 1e-8*scale for d in root_dist)
    #dense eigenvalues off the symbol set are certified roots
    ok_dense, n_off = True, 0
    for lam in eig_val:
        dist = float(np.abs(scen.sym_val - lam).min())
        if dist <= 1e-6*scale:
            continue
        n_off += 1
        det, det_err, _ = pylib_sec.SecularDeterminant(data, lam, tol)
        if abs(det) <= det_err:
            continue
        certified = False
        for rad in (1e-6, 1e-5, 1e-4, 1e-3):
            cert = pylib_sec.CertifyRootNear(data, lam, min(rad*scale, 0.5*dist), tol)
            if cert.is_valid and cert.winding_count >= 1:
                certified = True
                break
            if rad*scale >= 0.5*dist:
                break
        if not certified:
            ok_dense = False
            detail.setdefault('uncertified', []).append({'value': lam, 'abs_det': abs(det), 'det_error': det_err})
    adj_dist = _AdjointCheck(inst, tol)

    detail.update({'n_off_symbol': n_off, 'max_root_distance': max(root_dist, default=0.), 'adjoint_distance': adj_dist,
                   'winding_ok': ok_wind, 'roots_ok': ok_roots, 'dense_ok': ok_dense,
                   'passed': ok_wind and ok_roots and ok_dense and search.status == 'certified' and adj_dist <= 1e-9})
    return detail

def SuiteSecularDense(seed=0, n_inst=500, tol=None, n_jobs=1, **kwargs):
    '''Secular roots and dense eigenvalues agree on random instances with excess 1 to 3.'''
    t_start = time.time()
    outcomes = _RunCases(_Guarded(_CaseSecularDense), n_inst, seed, n_jobs, tol)
    n_roots = sum(o.get('n_roots', 0) for o in outcomes)
    return _Collect('secular-vs-dense', outcomes, time.time() - t_start, {'n_roots': n_roots})

def _CaseAdjoint(i_case, seed, tol):
    scen, _ = _SecularInstance(seed)
    adj_dist = _AdjointCheck(scen.assemble(tol), tol)
    return {'case': i_case, 'seed': seed, 'd': scen.phi.dim, 'N': scen.phi.n_vec, 'passed': adj_dist <= 1e-9,
            'adjoint_distance': adj_dist}

def SuiteAdjointSymmetry(seed=0, n_inst=500, tol=None, n_jobs=1, **kwargs):
    '''Eigenvalues of the adjoint multiplier are the conjugate eigenvalues.'''
    t_start = time.time()
    outcomes = _RunCases(_Guarded(_CaseAdjoint), n_inst, seed, n_jobs, tol)
    return _Collect('adjoint-symmetry', outcomes, time.time() - t_start)

def _CaseBehncke(i_case, seed, tol):
    rng = np.random.default_rng(seed)
    n_dim = int(rng.integers(2, 9))
    n_exc = int(rng.integers(0, 4))
    scen = pylib_scen.RandomInstance(seed, n_dim, n_dim + n_exc, 'real_symbol', canonical=True)
    alpha, beta = np.sort(rng.standard_normal(2)*1.5)
    n_eig, lower, passed = pylib_spec.BehnckeIntervalCount(scen.assemble(tol), alpha, beta, tol)
    return {'case': i_case, 'seed': seed, 'd': n_dim, 'q': n_exc, 'interval': [alpha, beta], 'count': n_eig,
            'lower_bound': lower, 'passed': passed}

def SuiteBehncke(seed=0, n_inst=500, tol=None, n_jobs=1, **kwargs):
    '''Eigenvalue counts in random intervals are at least sum r_k - 3q.'''
    t_start = time.time()
    outcomes = _RunCases(_Guarded(_CaseBehncke), n_inst, seed, n_jobs, tol)
    return _Collect('behncke-count', outcomes, time.time() - t_start)

# Example Suites
#--------------------------------------
def _ScenarioSuite(name, scen_list, tol, extra=None):
    t_start = time.time()
    failures, discrepancies, summary = [], [], {}
    n_cases = 0
    for scen in scen_list:
        df_facts = pylib_scen.CheckExpectedFacts(scen, tol)
        key = scen.metadata.get('profile', scen.size)
        summary[str(key)] = {r.fact: r.status for r in df_facts.itertuples()}
        for r in df_facts.itertuples():
            n_cases += 1
            dump = {'scenario': scen.name, 'size': scen.size, 'seed': scen.seed, 'key': key, 'fact': r.fact,
                    'provenance': r.provenance, 'statement': r.statement, 'detail': r.detail}
            if r.status == 'fail':
                failures.append(dump)
            elif r.status == 'discrepancy':
                discrepancies.append(dump)
    if extra is not None:
        for fact, passed, detail in extra:
            n_cases += 1
            summary[fact] = 'pass' if passed else 'fail'
            if not passed:
                failures.append({'scenario': name, 'fact': fact, 'detail': detail})

    return SuiteResult(name, n_cases, len(failures), failures, discrepancies, summary, time.time() - t_start)

def SuiteExampleInterleaved(seed=0, sizes=None, tol=None, **kwargs):
    sizes = [200] if sizes is None else sizes
    return _ScenarioSuite('example_interleaved_onb', [pylib_scen.ExampleInterleavedONB(s, seed) for s in sizes], tol)

def SuiteExampleFourier(seed=0, sizes=None, tol=None, **kwargs):
    sizes = [200] if sizes is None else sizes
    return _ScenarioSuite('example_fourier_x2', [pylib_scen.ExampleFourierX2(s, seed) for s in sizes], tol)

def SuiteExampleDiagonal(seed=0, sizes=None, tol=None, **kwargs):
    sizes = [100] if sizes is None else sizes
    return _ScenarioSuite('example_diagonal_pair', [pylib_scen.ExampleDiagonalPair(s, seed) for s in sizes], tol)

def SuiteExampleDuplicated(seed=0, sizes=None, tol=None, **kwargs):
    size = 50 if sizes is None else sizes[0]
    scen_list = [pylib_scen.ExampleDuplicatedONB(size, seed, p) for p in pylib_scen.DUPLICATED_PROFILES]
    return _ScenarioSuite('example_duplicated_onb', scen_list, tol)

def LangleyHeatGridCheck(k_trunc=2**14, n_grid=200, radius=0.99, tol=None):
    '''Every grid point of |lambda| <= radius has |det| above its certified error.'''
    struct = pylib_scen.LangleyStructured()
    data = pylib_sec.SecularDataFromStructured(struct, struct, pylib_scen.LangleySymbol())
    grid = np.linspace(-radius, radius, n_grid)
    df_grid = pylib_sec.SecularHeatGrid(data, grid, grid, pylib_sec.DiskRegion(0., radius*(1. + 1e-12)), tol, k_trunc)
    margin = (df_grid.abs_det - df_grid.error_bound).min()
    return bool(df_grid.certified.all()), {'n_points': len(df_grid), 'min_abs_det': df_grid.abs_det.min(),
                                            'max_error_bound': df_grid.error_bound.max(), 'min_margin': margin}

def SuiteExampleLangley(seed=0, sizes=None, tol=None, **kwargs):
    k_trunc = 2**14 if sizes is None else max(sizes[0], 16)
    scen = pylib_scen.ExampleExcessOneLangley(k_trunc, seed)
    phi_struct, psi_struct = scen.structured
    rep = pylib_spec.ClassifySpectrum(phi_struct, psi_struct, scen.symbol, [1., 0., 0.5j, -0.5], tol, k_trunc=k_trunc)
    in_spec = [p.value for p in rep.points if p.label != 'unclassified']
    ok_spec = len(in_spec) == 1 and abs(in_spec[0] - 1.) <= 1e-12 and len(rep.diagnostics['resolvent']) == 3
    ok_grid, grid_detail = LangleyHeatGridCheck(k_trunc, tol=tol)
    extra = [('spectrum_is_one', ok_spec, rep.to_dict()), ('heat_grid_certified', ok_grid, grid_detail)]
    return _ScenarioSuite('example_excess_one_langley', [scen], tol, extra)

def SuiteEigenvalueTails(seed=0, sizes=None, tol=None, **kwargs):
    '''
    l^p tail sums grouped by the nearest limit point: diagonal pair (p = 1),
    an excess-one compression with m_n = 1 + 1/(n+1)^2 (p = 1) and the
    interleaved bases (p = 2).
    '''

    t_start = time.time()
    tol = pylib_la._Tol(tol)
    sizes = [50, 100, 200] if sizes is None else sorted(sizes)
    failures, discrepancies, summary = [], [], {}

    #diagonal pair: infinite excess, closed-form bound pi^2/6 at limit 0
    eig_sets, sym_sets = {}, {}
    for s in sizes:
        scen = pylib_scen.ExampleDiagonalPair(s, seed)
        eig_sets[s] = pylib_spec.FiniteSpectrum(scen.assemble(tol), tol).eigenvalues
        sym_sets[s] = scen.sym_val
    df_diag = pylib_spec.EigenvalueTailReport(eig_sets, sym_sets, [0., 1.], 1., pylib_frm.Excess(scen.phi, tol),
                                              closed_form_bound=[np.pi**2/6., 0.])
    ok_diag = bool(df_diag.within_closed_form.all() and df_diag.monotone.all())
    summary['diagonal_pair'] = df_diag
    if not ok_diag:
        failures.append({'scenario': 'example_diagonal_pair', 'fact': 'closed_form_tail', 'detail': df_diag})
    if not df_diag.within_bound.all():
        discrepancies.append({'scenario': 'example_diagonal_pair', 'fact': 'symbol_side_tail_bound',
                              'statement': 'sum |lambda - l|^p <= (1+6q) sum |m - l|^p',
                              'detail': 'symbol entries equal their limits while the excess grows with the size; '
                                        'the finite-excess hypothesis is not met'})

    #finite excess: compression of 1 + 1/(n+1)^2 to the excess-one Parseval frame
    eig_sets, sym_sets = {}, {}
    for s in sizes:
        phi = pylib_scen.LangleyFrame(s)
        sym_sets[s] = 1. + 1./(np.arange(s) + 1.)**2
        eig_sets[s] = pylib_spec.FiniteSpectrum(pylib_mult.Assemble(sym_sets[s], phi, phi, tol), tol).eigenvalues
    df_exc = pylib_spec.EigenvalueTailReport(eig_sets, sym_sets, [1.], 1., 1)
    ok_exc = bool(df_exc.within_bound.all() and df_exc.monotone.all())
    summary['excess_one'] = df_exc
    if not ok_exc:
        failures.append({'scenario': 'excess_one_compression', 'fact': 'symbol_side_tail_bound', 'detail': df_exc})

    #interleaved bases, p = 2 per class
    scen = pylib_scen.ExampleInterleavedONB(max(sizes), seed)
    eig_ex1 = pylib_spec.FiniteSpectrum(scen.assemble(tol), tol).eigenvalues
    _, sym_pp = pylib_sym.CompactSplit(scen.symbol)
    #eigenvalues cluster at 1, the limit of the pair averages
    df_ex1 = pylib_spec.EigenvalueTailReport({scen.size: eig_ex1}, {scen.size: 1. + sym_pp.prefix(scen.phi.n_vec)},
                                             [1.], 2., pylib_frm.Excess(scen.phi, tol))
    ok_ex1 = bool(df_ex1.within_bound.all())
    summary['interleaved_onb'] = df_ex1
    if not ok_ex1:
        failures.append({'scenario': 'example_interleaved_onb', 'fact': 'symbol_side_tail_bound', 'detail': df_ex1})

    return SuiteResult('eigenvalue-tails', 3, len(failures), failures, discrepancies, summary, time.time() - t_start)

# Registry
#--------------------------------------
SUITES = {'duality':                    SuiteDuality,
          'invertibility':              SuiteInvertibility,
          'riesz-spectra':              SuiteRieszSpectra,
          'secular-vs-dense':           SuiteSecularDense,
          'adjoint-symmetry':           SuiteAdjointSymmetry,
          'example_interleaved_onb':    SuiteExampleInterleaved,
          'example_fourier_x2':         SuiteExampleFourier,
          'example_diagonal_pair':      SuiteExampleDiagonal,
          'example_duplicated_onb':     SuiteExampleDuplicated,
          'example_excess_one_langley': SuiteExampleLangley,
          'behncke-count':              SuiteBehncke,
          'eigenvalue-tails':           SuiteEigenvalueTails}

#result tags accepted by verify, with the suites that check them
TAG_SUITES = {'th_inv':           ['invertibility'],
              'pro_phi_mphi':     ['invertibility'],
              'pro_Riesz':        ['riesz-spectra'],
              'lem_spec_ex':      ['secular-vs-dense'],
              'th_main_ex1':      ['secular-vs-dense', 'adjoint-symmetry', 'behncke-count'],
              'cor_pert_compact': ['example_interleaved_onb'],
              'corollary':        ['eigenvalue-tails'],
              'exm1':             ['example_interleaved_onb'],
              'exm2a':            ['example_fourier_x2'],
              'exm2b':            ['example_diagonal_pair'],
              'exm3':             ['example_duplicated_onb'],
              'exm4':             ['example_excess_one_langley']}

def ResolveSuiteName(name):
    '''Suite names for a suite name, a result tag or 'all'.'''
    if name == 'all':
        return list(SUITES)
    if name in SUITES:
        return [name]
    tag = name.replace(' ', '').replace('(', '').replace(')', '')
    if tag in TAG_SUITES:
        return list(TAG_SUITES[tag])
    raise InputError('Error. Unknown suite %r, expected one of %s or a tag in %s'%(name, ['all'] + list(SUITES), list(TAG_SUITES)))

def RunSuites(names, seed=0, n_inst=None, sizes=None, tol=None, n_jobs=1):
    '''
    Run property suites in the given order ('all' expands to every suite, result
    tags to the suites listed in TAG_SUITES)

    Parameters
    ----------
    names : list
        Suite names.
    seed : int, optional
        Base seed.
    n_inst : int, optional
        Instance count of random suites. The default is each suite's default.
    sizes : list, optional
        Sizes of example suites.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.
    n_jobs : int, optional
        joblib workers for random suites; values < 1 use every core.

    Returns
    -------
    list of SuiteResult
    '''

    if isinstance(names, str):
        names = [names]
    run_list = []
    for n in names:
        run_list += [s for s in ResolveSuiteName(n) if s not in run_list]

    results = []
    for n in run_list:
        logger.info('running suite %s', n)
        kwargs = {'seed': seed, 'tol': tol, 'n_jobs': n_jobs, 'sizes': sizes}
        if n_inst is not None:
            kwargs['n_inst'] = n_inst
        res = SUITES[n](**kwargs)
        logger.info('suite %s: %i cases, %i failures, %i discrepancies (%.1fs)', n, res.n_cases, res.n_fail,
                    len(res.discrepancies), res.elapsed)
        results.append(res)

    return results
