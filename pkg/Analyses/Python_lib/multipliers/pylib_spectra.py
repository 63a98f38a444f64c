#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Wed Sep 23 09:12:37 2026

Spectra of multipliers: dense finite spectra, essential spectrum of structured
models, classification of candidate points, truncation families, interval
counts for self-adjoint multipliers and l^p tail reports
"""

# Packages
# ---------------------------
#load libraries
import logging
#arithmetic libraries
import numpy as np
import pandas as pd
from scipy import optimize as scipyopt
#user libraries
from Python_lib.numerics import pylib_linalg as pylib_la
from Python_lib.numerics.pylib_linalg import InputError
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.frames import pylib_symbols as pylib_sym
from Python_lib.multipliers import pylib_multipliers as pylib_mult
from Python_lib.multipliers import pylib_secular as pylib_sec

logger = logging.getLogger(__name__)

# Spectral Report
#--------------------------------------
class SpectralReport:
    '''
    Labeled spectral points of a multiplier

    Attributes
    ----------
    points : list
        SpectralPoint objects, sorted by (real, imag).
    essential : np.array
        Essential spectrum (empty for finite instances).
    provenance : dict
        Rule that produced the labels.
    diagnostics : dict
        Truncation sizes, residuals, tail bounds, rejected candidates.
    eigenvalues : np.array
        Raw eigenvalues with repetition (finite instances).
    '''

    def __init__(self, points, essential=None, provenance=None, diagnostics=None, eigenvalues=None):
        self.points      = sorted(points, key=lambda p: (p.value.real, p.value.imag))
        self.essential   = np.zeros(0, dtype=complex) if essential is None else np.asarray(essential, dtype=complex)
        self.provenance  = {} if provenance is None else provenance
        self.diagnostics = {} if diagnostics is None else diagnostics
        self.eigenvalues = np.zeros(0, dtype=complex) if eigenvalues is None else np.asarray(eigenvalues, dtype=complex)

    @property
    def values(self):
        return np.array([p.value for p in self.points], dtype=complex)

    def to_dict(self):
        return {'points': [p.to_dict() for p in self.points], 'essential': list(self.essential),
                'provenance': dict(self.provenance), 'diagnostics': dict(self.diagnostics)}

    def to_dataframe(self):
        df_pts = pd.DataFrame({'re':           [p.value.real for p in self.points],
                               'im':           [p.value.imag for p in self.points],
                               'multiplicity': [p.multiplicity for p in self.points],
                               'label':        [p.label for p in self.points],
                               'provenance':   [p.provenance for p in self.points]},
                              columns=['re', 'im', 'multiplicity', 'label', 'provenance'])
        return df_pts

    def __repr__(self):
        return 'SpectralReport(n_points=%i, essential=%s)'%(len(self.points), list(self.essential))

# Finite Spectra
#--------------------------------------
def FiniteSpectrum(inst, tol=None, group_tol=None):
    '''
    Eigenvalues of an assembled multiplier with multiplicities

    Parameters
    ----------
    inst : MultiplierInstance
        Assembled multiplier.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.
    group_tol : real, optional
        Merge distance of repeated eigenvalues. The default is 1e3 eig_atol max(||M||, 1).

    Returns
    -------
    SpectralReport
        Every point labeled eigenvalue, essential part empty.
    '''

    tol = pylib_la._Tol(tol)
    mat = inst.matrix
    m_norm = pylib_la.OperatorNorm(mat)
    hermitian = pylib_la.OperatorNorm(mat - mat.conj().T) <= tol.residual_atol*max(m_norm, 1.)
    if hermitian:
        eig_val = pylib_la.HermitianEig(mat, tol)[0].astype(complex)
    else:
        eig_val = pylib_la.GeneralEig(mat)
    if group_tol is None:
        group_tol = 1e3*tol.eig_atol*max(m_norm, 1.)

    values, mult = pylib_la.GroupEigenvalues(eig_val, group_tol)
    solver = 'eigh' if hermitian else 'eigvals'
    points = [pylib_sym.SpectralPoint(v, 'eigenvalue', k, provenance='dense %s'%solver) for v, k in zip(values, mult)]
    diagnostics = {'dim': inst.dim, 'hermitian': bool(hermitian), 'group_tol': group_tol,
                   'factorization_residual': inst.fact_res}

    return SpectralReport(points, provenance={'rule': 'finite dimension: spectrum is point spectrum', 'solver': solver},
                          diagnostics=diagnostics, eigenvalues=eig_val)

def MatchMultisets(val_1, val_2):
    '''
    Optimal pairing of two equally sized complex multisets

    Returns
    -------
    max_dist : real
        Largest paired distance (inf for different sizes, 0 for empty sets).
    i_perm : np.array
        val_2[i_perm] is paired with val_1.
    '''

    val_1, val_2 = np.asarray(val_1, dtype=complex).ravel(), np.asarray(val_2, dtype=complex).ravel()
    if len(val_1) != len(val_2):
        return np.inf, None
    if len(val_1) == 0:
        return 0., np.zeros(0, dtype=int)
    cost = np.abs(val_1[:,np.newaxis] - val_2[np.newaxis,:])
    i_row, i_col = scipyopt.linear_sum_assignment(cost)
    i_perm = i_col[np.argsort(i_row)]

    return float(cost[np.arange(len(val_1)), i_perm].max()), i_perm

def _Hausdorff(val_1, val_2):
    if len(val_1) == 0 and len(val_2) == 0:
        return 0.
    if len(val_1) == 0 or len(val_2) == 0:
        return np.inf
    dist = np.abs(np.asarray(val_1)[:,np.newaxis] - np.asarray(val_2)[np.newaxis,:])
    return float(max(dist.min(axis=1).max(), dist.min(axis=0).max()))

# Structured Models
#--------------------------------------
def _CheckStructuredPair(phi_struct, psi_struct, symbol):
    if not isinstance(phi_struct, pylib_frm.StructuredFrame) or not isinstance(psi_struct, pylib_frm.StructuredFrame):
        raise InputError('Error. Structured frame pair required')
    if phi_struct.n_exc != psi_struct.n_exc:
        raise InputError('Error. Structured frames have different excess (%i, %i)'%(phi_struct.n_exc, psi_struct.n_exc))
    if symbol.structure is None:
        raise InputError('Error. Symbol needs a declared limit structure')

def EssentialSpectrum(phi_struct, psi_struct, symbol, tol=None):
    '''
    Essential spectrum of a finite-excess multiplier: the limit points of the
    symbol.
    '''

    _CheckStructuredPair(phi_struct, psi_struct, symbol)
    limits = pylib_sym.LimitPoints(symbol, tol)
    logger.info('essential spectrum from %i declared limits (finite excess %i)', len(limits), phi_struct.n_exc)

    return limits

def _TruncatedKernel(phi_struct, psi_struct, symbol, lam, idx_hit, n_trunc, tol):
    #kernel dimension of M_{m - lambda} on a truncation holding every hit, and the case (ii)/(iii)
    n_size = max(n_trunc, int(idx_hit.max()) + 2)
    phi_t, psi_t = phi_struct.truncate(n_size), psi_struct.truncate(n_size)
    sym_shift = pylib_frm.SymbolValues(symbol.shift(lam), phi_t.n_vec)
    inv_rep = pylib_mult.CheckInvertibility(sym_shift, phi_t, psi_t, tol)
    case = 'ii' if pylib_la.NumericalRank(phi_t.synth_mat*sym_shift, tol) < phi_t.dim else 'iii'
    n_ker = 0 if inv_rep.injective else max(phi_t.dim - inv_rep.direct['rank'], 1)
    return n_ker, n_size, case

def ClassifySpectrum(phi_struct, psi_struct, symbol, candidates, tol=None, n_trunc=256, k_trunc=None):
    '''
    Classify candidate points of a finite-excess structured multiplier

    Rules, first match wins:
        (i)   limit point of m: in the spectrum; an eigenvalue when attained
              infinitely often or when a truncation holding the finitely many
              hits shows a kernel, else a continuous_candidate
        (ii)  lambda = m_j finitely often: completeness and direct-sum tests
              of M_{m - lambda} on a truncation of size n_trunc
        (iii) as (ii) when (m - lambda) phi is a frame
        (iv)  positive symbol distance: eigenvalue iff det A_lambda = 0,
              confirmed by a local winding count
    Points outside the spectrum are listed in diagnostics['resolvent']; no
    residual spectrum is emitted.

    Parameters
    ----------
    phi_struct, psi_struct : StructuredFrame
        Structured dual pair with equal finite excess.
    symbol : Symbol
        Symbol with a declared limit structure.
    candidates : array_like
        Candidate points.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.
    n_trunc : int, optional
        Truncation size of rules (ii) and (iii).
    k_trunc : int, optional
        Fixed truncation of the secular series. The default is adaptive.

    Returns
    -------
    SpectralReport
        Classified spectral points.
    '''

    tol = pylib_la._Tol(tol)
    limits = EssentialSpectrum(phi_struct, psi_struct, symbol, tol)
    n_exc  = phi_struct.n_exc
    sec_data = pylib_sec.SecularDataFromStructured(phi_struct, psi_struct, symbol) if n_exc > 0 else None
    n_pref = max(n_trunc, symbol.default_size())

    points, resolvent, cases = [], [], []
    for lam in np.asarray(candidates, dtype=complex).ravel():
        #(i) limit point
        if len(limits) and np.abs(limits - lam).min() <= tol.eig_atol:
            idx_hit, inf_often = pylib_sym.SymbolHits(symbol, lam, tol, n_pref)
            if inf_often:
                #(a) infinitely many zero vectors in (m - lambda) phi
                points.append(pylib_sym.SpectralPoint(lam, 'eigenvalue', np.inf, part='point',
                                                      provenance='case (i)(a) attained infinitely often'))
                cases.append({'value': lam, 'case': 'i', 'in_spectrum': True, 'part': 'point'})
                continue
            #(b) eigenvalue iff M - lambda has a kernel, otherwise continuous spectrum
            n_ker, n_size = (0, None) if not len(idx_hit) else \
                            _TruncatedKernel(phi_struct, psi_struct, symbol, lam, idx_hit, n_trunc, tol)[:2]
            if n_ker:
                points.append(pylib_sym.SpectralPoint(lam, 'eigenvalue', n_ker, provenance='case (i)(b) truncation %i'%n_size,
                                                      part='point'))
            else:
                points.append(pylib_sym.SpectralPoint(lam, 'continuous_candidate', provenance='case (i)(b) no kernel found',
                                                      part='point_or_continuous'))
            cases.append({'value': lam, 'case': 'i', 'in_spectrum': True, 'part': 'point' if n_ker else 'point_or_continuous',
                          'truncation': n_size, 'kernel_dim': n_ker})
            continue

        idx_hit, _ = pylib_sym.SymbolHits(symbol, lam, tol, n_pref)
        #(ii), (iii) symbol value attained finitely often
        if len(idx_hit):
            n_ker, n_size, case = _TruncatedKernel(phi_struct, psi_struct, symbol, lam, idx_hit, n_trunc, tol)
            if n_ker:
                points.append(pylib_sym.SpectralPoint(lam, 'eigenvalue', n_ker,
                                                      provenance='case (%s) truncation %i'%(case, n_size)))
                cases.append({'value': lam, 'case': case, 'in_spectrum': True, 'truncation': n_size,
                              'kernel_dim': n_ker})
            else:
                resolvent.append(lam)
                cases.append({'value': lam, 'case': case, 'in_spectrum': False, 'truncation': n_size})
            continue

        #(iv) positive distance
        dist = pylib_sym.DistanceLowerBound(symbol, lam, n_pref)
        if dist <= tol.eig_atol:
            points.append(pylib_sym.SpectralPoint(lam, 'unclassified', provenance='symbol distance not certified'))
            cases.append({'value': lam, 'case': 'none', 'in_spectrum': None, 'distance': dist})
            continue
        if n_exc == 0:
            resolvent.append(lam)
            cases.append({'value': lam, 'case': 'iv', 'in_spectrum': False, 'distance': dist, 'note': 'excess 0'})
            continue
        det, det_err, info = pylib_sec.SecularDeterminant(sec_data, lam, tol, k_trunc)
        if abs(det) > det_err:
            resolvent.append(lam)
            cases.append({'value': lam, 'case': 'iv', 'in_spectrum': False, 'abs_det': abs(det),
                          'det_error': det_err, 'k_trunc': info['k_trunc']})
            continue
        radius = min(1e-6*max(1., abs(lam)), 0.5*dist)
        cert = pylib_sec.CertifyRootNear(sec_data, lam, radius, tol, info['k_trunc'])
        if cert.is_valid and cert.winding_count >= 1:
            points.append(pylib_sym.SpectralPoint(lam, 'eigenvalue', cert.winding_count, provenance='case (iv) secular root'))
            cases.append({'value': lam, 'case': 'iv', 'in_spectrum': True, 'certificate': cert.to_dict()})
        else:
            points.append(pylib_sym.SpectralPoint(lam, 'unclassified', provenance='case (iv) inconclusive'))
            cases.append({'value': lam, 'case': 'iv', 'in_spectrum': None, 'abs_det': abs(det),
                          'det_error': det_err, 'status': info['status']})

    provenance = {'rule': 'classification of candidates (limit point, symbol value, secular determinant)',
                  'excess': n_exc}
    diagnostics = {'resolvent': resolvent, 'candidates': cases, 'n_trunc': n_trunc}

    return SpectralReport(points, limits, provenance, diagnostics)

# Truncation Families
#--------------------------------------
def TailNormCheck(phi, psi, sym_pp, k_list, tol=None):
    '''
    Norm of the multiplier of the symbol tail {m''_n: n >= K} against
    sqrt(B_phi B_psi) sup_{n >= K} |m''_n|

    Returns
    -------
    df_tail : pd.DataFrame
        Columns k, sup_tail, bound, actual, within, monotone.
    '''

    sym_pp = pylib_frm.SymbolValues(sym_pp, phi.n_vec)
    b_fac  = np.sqrt(pylib_frm.BesselBound(phi)*pylib_frm.BesselBound(psi))
    rows = []
    for k in k_list:
        if not 0 <= k < phi.n_vec:
            raise InputError('Error. Tail index %i outside [0, %i)'%(k, phi.n_vec))
        sym_tail = sym_pp.copy()
        sym_tail[:k] = 0.
        sup_tail = float(np.abs(sym_tail).max())
        actual   = pylib_mult.Assemble(sym_tail, phi, psi, tol).matrix
        rows.append({'k': int(k), 'sup_tail': sup_tail, 'bound': b_fac*sup_tail,
                     'actual': pylib_la.OperatorNorm(actual)})
    df_tail = pd.DataFrame(rows, columns=['k', 'sup_tail', 'bound', 'actual'])
    df_tail.loc[:,'within']   = df_tail.actual <= df_tail.bound*(1. + 1e-12) + 1e-14
    df_tail.loc[:,'monotone'] = np.r_[True, np.diff(df_tail.bound.values) <= 1e-15] if len(df_tail) else []

    return df_tail

def TruncatedSpectrumFamily(builder, sizes, limits, eps=0.1, tol=None):
    '''
    Convergence diagnostics of truncated multipliers

    Parameters
    ----------
    builder : callable
        size -> (phi, psi, sym_val, sym_p_val), a finite section with the symbol
        and its piecewise-constant part m'.
    sizes : list
        Truncation sizes.
    limits : array_like
        Limit points of the symbol.
    eps : real, optional
        Radius of the disks around the limit points.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    df_conv : pd.DataFrame
        One row per size: size, n_eig, frac_within_eps, n_outside,
        hausdorff_outside, tail_k, tail_norm_bound, tail_norm_actual.
    flags : dict
        Monotonicity of the diagnostics over increasing size.
    '''

    if builder is None:
        raise InputError('Error. Truncation family needs a generator')
    tol = pylib_la._Tol(tol)
    limits = np.asarray(limits, dtype=complex).ravel()

    rows = []
    for size in sorted(sizes):
        phi, psi, sym_val, sym_p = builder(size)
        eig_m  = FiniteSpectrum(pylib_mult.Assemble(sym_val, phi, psi, tol), tol).eigenvalues
        eig_mp = FiniteSpectrum(pylib_mult.Assemble(sym_p,   phi, psi, tol), tol).eigenvalues
        d_lim_m  = np.abs(eig_m[:,np.newaxis]  - limits[np.newaxis,:]).min(axis=1) if len(limits) else np.full(len(eig_m), np.inf)
        d_lim_mp = np.abs(eig_mp[:,np.newaxis] - limits[np.newaxis,:]).min(axis=1) if len(limits) else np.full(len(eig_mp), np.inf)
        out_m, out_mp = eig_m[d_lim_m > eps], eig_mp[d_lim_mp > eps]
        #compact part beyond the midpoint
        tail_k = phi.n_vec // 2
        df_tail = TailNormCheck(phi, psi, np.asarray(sym_val) - np.asarray(sym_p), [tail_k], tol)
        rows.append({'size': size, 'n_eig': len(eig_m), 'frac_within_eps': float(np.mean(d_lim_m <= eps)) if len(eig_m) else 1.,
                     'n_outside': len(out_m), 'hausdorff_outside': _Hausdorff(out_m, out_mp), 'tail_k': tail_k,
                     'tail_norm_bound': df_tail.bound.iloc[0], 'tail_norm_actual': df_tail.actual.iloc[0]})
        logger.debug('truncation %i: %i eigenvalues, %i outside eps-disks', size, len(eig_m), len(out_m))

    df_conv = pd.DataFrame(rows, columns=['size', 'n_eig', 'frac_within_eps', 'n_outside', 'hausdorff_outside',
                                          'tail_k', 'tail_norm_bound', 'tail_norm_actual'])
    flags = {'frac_within_eps_nondecreasing': bool(np.all(np.diff(df_conv.frac_within_eps.values) >= -1e-12)),
             'tail_norm_bound_nonincreasing': bool(np.all(np.diff(df_conv.tail_norm_bound.values) <= 1e-12))}
    if not all(flags.values()):
        logger.warning('truncation diagnostics not monotone: %s', flags)

    return df_conv, flags

# Interval Counts
#--------------------------------------
def BehnckeIntervalCount(inst, alpha, beta, tol=None):
    '''
    Eigenvalue count of a self-adjoint multiplier in [alpha, beta] against the
    lower bound sum r_k - 3q

    Parameters
    ----------
    inst : MultiplierInstance
        Multiplier with real symbol and psi the canonical dual of phi.
    alpha, beta : real
        Interval endpoints, alpha <= beta.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    n_eig : int
        Number of eigenvalues in the interval.
    lower_bound : int
        Number of symbol entries in the interval minus three times the excess.
    passed : bool
        n_eig >= lower_bound.
    '''

    tol = pylib_la._Tol(tol)
    if alpha > beta:
        raise InputError('Error. Interval needs alpha <= beta')
    if np.any(np.abs(inst.sym_val.imag) > tol.eig_atol):
        raise InputError('Error. Interval counts need a real symbol')
    dual = pylib_frm.CanonicalDual(inst.phi, tol)
    if pylib_la.OperatorNorm(dual.synth_mat - inst.psi.synth_mat) > tol.residual_atol*max(1., pylib_la.OperatorNorm(dual.synth_mat)):
        raise InputError('Error. Interval counts need psi to be the canonical dual of phi')

    inst_rho, _ = pylib_mult.ParsevalSimilarity(inst, tol)
    eig_val = pylib_la.HermitianEig(inst_rho.matrix, tol)[0]
    #endpoint collisions
    if np.any(np.abs(eig_val - alpha) <= tol.eig_atol):
        alpha -= 10.*tol.eig_atol
    if np.any(np.abs(eig_val - beta) <= tol.eig_atol):
        beta += 10.*tol.eig_atol

    sym_real = inst.sym_val.real
    n_eig = int(np.sum((eig_val >= alpha) & (eig_val <= beta)))
    n_sym = int(np.sum((sym_real >= alpha) & (sym_real <= beta)))
    n_exc = pylib_frm.Excess(inst.phi, tol)
    lower_bound = n_sym - 3*n_exc

    return n_eig, lower_bound, n_eig >= lower_bound

# Eigenvalue Tails
#--------------------------------------
def GroupByNearestLimit(values, limits):
    '''Index of the nearest limit and the distance to it.'''
    values, limits = np.asarray(values, dtype=complex).ravel(), np.asarray(limits, dtype=complex).ravel()
    if len(limits) == 0:
        raise InputError('Error. Grouping needs at least one limit point')
    dist = np.abs(values[:,np.newaxis] - limits[np.newaxis,:])
    i_lim = np.argmin(dist, axis=1) if len(values) else np.zeros(0, dtype=int)

    return i_lim, dist[np.arange(len(values)), i_lim]

def EigenvalueTailReport(eig_sets, sym_sets, limits, p_exp, n_exc, closed_form_bound=None):
    '''
    Partial sums sum |lambda_{i,n} - l_i|^p_i of eigenvalues grouped by their
    nearest limit, against (1 + 6q) sum |m_{i,n} - l_i|^p_i

    Parameters
    ----------
    eig_sets : dict
        size -> eigenvalues of the truncation.
    sym_sets : dict
        size -> symbol values of the truncation.
    limits : array_like
        Limit points l_i.
    p_exp : real or array_like
        Exponent per limit point.
    n_exc : int
        Excess q.
    closed_form_bound : array_like, optional
        Known bound of the eigenvalue sums per limit point.

    Returns
    -------
    df_tail : pd.DataFrame
        One row per (size, limit): eig_sum, sym_sum, bound, within_bound,
        closed_form_bound, within_closed_form, monotone.
    '''

    limits = np.asarray(limits, dtype=complex).ravel()
    p_exp  = np.broadcast_to(np.asarray(p_exp, dtype=float), limits.shape)
    cf_bnd = None if closed_form_bound is None else np.broadcast_to(np.asarray(closed_form_bound, dtype=float), limits.shape)

    rows = []
    for size in sorted(eig_sets):
        i_eig, d_eig = GroupByNearestLimit(eig_sets[size], limits)
        i_sym, d_sym = GroupByNearestLimit(sym_sets[size], limits)
        for k, lim in enumerate(limits):
            eig_sum = float(np.sum(d_eig[i_eig == k]**p_exp[k]))
            sym_sum = float(np.sum(d_sym[i_sym == k]**p_exp[k]))
            bound   = (1. + 6.*n_exc)*sym_sum
            rows.append({'size': size, 'limit_re': lim.real, 'limit_im': lim.imag, 'p': p_exp[k],
                         'eig_sum': eig_sum, 'sym_sum': sym_sum, 'bound': bound,
                         'within_bound': eig_sum <= bound*(1. + 1e-12) + 1e-14,
                         'closed_form_bound': np.nan if cf_bnd is None else cf_bnd[k],
                         'within_closed_form': True if cf_bnd is None else eig_sum <= cf_bnd[k]})

    df_tail = pd.DataFrame(rows, columns=['size', 'limit_re', 'limit_im', 'p', 'eig_sum', 'sym_sum', 'bound',
                                          'within_bound', 'closed_form_bound', 'within_closed_form'])
    #monotone in truncation size per limit point
    df_tail.loc[:,'monotone'] = True
    for _, df_lim in df_tail.groupby(['limit_re', 'limit_im'], sort=False):
        df_tail.loc[df_lim.index,'monotone'] = np.r_[True, np.diff(df_lim.eig_sum.values) >= -1e-14]
    if not df_tail.within_bound.all():
        logger.warning('eigenvalue tail sums exceed the symbol-side bound for %i rows', int((~df_tail.within_bound).sum()))

    return df_tail
