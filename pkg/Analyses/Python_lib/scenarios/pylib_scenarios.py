#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Fri Sep 25 14:03:51 2026

Worked multiplier examples and seeded random instances, each with declared
expected spectral facts tagged by their provenance
"""

# Packages
# ---------------------------
#load libraries
import logging
import hashlib
from fractions import Fraction
#arithmetic libraries
import numpy as np
import pandas as pd
from scipy import linalg as scipylinalg
from scipy import integrate as scipyint
#user libraries
from Python_lib.numerics import pylib_linalg as pylib_la
from Python_lib.numerics.pylib_linalg import InputError
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.frames import pylib_symbols as pylib_sym
from Python_lib.multipliers import pylib_multipliers as pylib_mult
from Python_lib.multipliers import pylib_secular as pylib_sec
from Python_lib.multipliers import pylib_spectra as pylib_spec

logger = logging.getLogger(__name__)

PROFILES = ('generic', 'planted_zeros', 'planted_collisions', 'real_symbol', 'canonical_dual_pair', 'riesz_canonical')
DUPLICATED_PROFILES = ('alternating', 'rational_pairs', 'rational_mirror', 'constant')
PROVENANCE = ('STATED', 'DERIVED', 'TRIVIAL')

# Scenario Types
#--------------------------------------
class ExpectedFact:
    '''
    Machine-checkable expectation of a scenario

    Parameters
    ----------
    name : string
        Identifier.
    check : callable
        (scenario, tol) -> (passed, detail dict).
    provenance : string
        STATED, DERIVED or TRIVIAL. A failing STATED fact is a discrepancy.
    statement : string
        Human-readable expectation.
    '''

    def __init__(self, name, check, provenance, statement):
        if provenance not in PROVENANCE:
            raise InputError('Error. Unknown provenance %r'%provenance)
        self.name       = name
        self.check      = check
        self.provenance = provenance
        self.statement  = statement

class ScenarioInstance:
    '''
    Finite frame pair with a symbol, expected facts and, for infinite models,
    the structured pair it was truncated from.
    '''

    def __init__(self, name, size, seed, phi, psi, symbol, expected=None, metadata=None, structured=None):
        self.name       = name
        self.size       = size
        self.seed       = seed
        self.phi        = phi
        self.psi        = psi
        self.symbol     = symbol
        self.expected   = [] if expected is None else expected
        self.metadata   = {} if metadata is None else metadata
        self.structured = structured

    @property
    def sym_val(self):
        return pylib_frm.SymbolValues(self.symbol, self.phi.n_vec)

    def assemble(self, tol=None):
        return pylib_mult.Assemble(self.symbol, self.phi, self.psi, tol)

    def __repr__(self):
        return 'ScenarioInstance(%r, size=%r, seed=%r, dim=%i, n_vec=%i)'%(self.name, self.size, self.seed,
                                                                          self.phi.dim, self.phi.n_vec)

def CheckExpectedFacts(scen, tol=None):
    '''
    Evaluate the expected facts of a scenario

    Returns
    -------
    df_facts : pd.DataFrame
        Columns fact, provenance, statement, passed, status, detail; status is
        pass, fail or discrepancy (failing STATED fact).
    '''

    tol = pylib_la._Tol(tol)
    rows = []
    for fact in scen.expected:
        passed, detail = fact.check(scen, tol)
        passed = bool(passed)
        if passed:
            status = 'pass'
        elif fact.provenance == 'STATED':
            status = 'discrepancy'
            logger.warning('%s: stated fact %r not reproduced (%s)', scen.name, fact.name, detail)
        else:
            status = 'fail'
        rows.append({'fact': fact.name, 'provenance': fact.provenance, 'statement': fact.statement,
                     'passed': passed, 'status': status, 'detail': detail})

    return pd.DataFrame(rows, columns=['fact', 'provenance', 'statement', 'passed', 'status', 'detail'])

def InstanceHash(scen):
    '''sha256 of the frame matrices, the symbol values and the scenario key.'''
    hsh = hashlib.sha256()
    hsh.update(('%s|%r|%r'%(scen.name, scen.size, scen.seed)).encode())
    for arr in (scen.phi.synth_mat, scen.psi.synth_mat, scen.sym_val):
        arr = np.ascontiguousarray(arr, dtype=np.complex128)
        hsh.update(str(arr.shape).encode())
        hsh.update(arr.tobytes())

    return hsh.hexdigest()

# Fact Helpers
#--------------------------------------
def _EigenvaluesOf(scen, tol):
    return pylib_spec.FiniteSpectrum(scen.assemble(tol), tol).eigenvalues

def _FactParseval(scen, tol):
    bnds = pylib_frm.ComputeFrameBounds(scen.phi, tol)
    return bnds.is_parseval(1e-12), {'lower': bnds.lower, 'upper': bnds.upper}

def _FactDualPair(scen, tol):
    flag, res = pylib_frm.IsDualPair(scen.phi, scen.psi, tol)
    return flag, {'residual': res}

def _FactSpectrumMultiset(target, atol):
    def check(scen, tol):
        max_dist, _ = pylib_spec.MatchMultisets(_EigenvaluesOf(scen, tol), target(scen))
        return max_dist <= atol, {'max_distance': max_dist}
    return check

def _FactSpectrumSet(target, atol):
    def check(scen, tol):
        eig_val, trg = _EigenvaluesOf(scen, tol), np.asarray(target(scen), dtype=complex)
        dist = np.abs(eig_val[:,np.newaxis] - trg[np.newaxis,:])
        max_dist = float(max(dist.min(axis=1).max(), dist.min(axis=0).max())) if dist.size else np.inf
        return max_dist <= atol, {'hausdorff': max_dist}
    return check

# Interleaved orthonormal bases
#--------------------------------------
def _InterleavedSymbol(n_idx):
    n_idx = np.asarray(n_idx)
    val = 1./(n_idx//2 + 2)
    return np.where(n_idx % 2 == 0, val, 2. - val).astype(complex)

def InterleavedSymbol():
    '''m_{2n-1} = 1/(n+1), m_{2n} = 2 - 1/(n+1), limits 0 and 2.'''
    maj = pylib_sym.Majorant('power', const=2., power=1., offset=3.)
    struct = pylib_sym.LimitStructure([pylib_sym.LimitClass(0., pylib_sym.IndexSelector('modulo', modulus=2, residue=0), maj),
                                       pylib_sym.LimitClass(2., pylib_sym.IndexSelector('modulo', modulus=2, residue=1), maj)])
    return pylib_sym.Symbol(generator=_InterleavedSymbol, structure=struct, name='interleaved')

def InterleavedFrame(size):
    '''{e_1/sqrt2, f_1/sqrt2, e_2/sqrt2, ...} with f the unitary DFT image of e.'''
    f_mat = scipylinalg.dft(size)/np.sqrt(size)
    synth_mat = np.zeros((size, 2*size), dtype=complex)
    synth_mat[:,0::2] = np.eye(size)/np.sqrt(2.)
    synth_mat[:,1::2] = f_mat/np.sqrt(2.)
    return pylib_frm.FiniteFrame(synth_mat, name='interleaved_onb')

def ExampleInterleavedONB(size=200, seed=0):
    '''
    Parseval frame of two interleaved orthonormal bases with the symbol
    m_{2n-1} = 1/(n+1), m_{2n} = 2 - 1/(n+1); the piecewise-constant part
    m' = (0, 2, 0, 2, ...) assembles to the identity.
    '''

    if size < 2:
        raise InputError('Error. Interleaved example needs size >= 2')
    phi = InterleavedFrame(size)
    symbol = InterleavedSymbol()

    def fact_identity(scen, tol):
        sym_p, _ = pylib_sym.CompactSplit(scen.symbol)
        res = pylib_la.OperatorNorm(pylib_mult.Assemble(sym_p, scen.phi, scen.psi, tol).matrix - np.eye(scen.phi.dim))
        return res <= 1e-12, {'residual': res}

    def fact_cluster(scen, tol):
        frac = float(np.mean(np.abs(_EigenvaluesOf(scen, tol) - 1.) <= 0.1))
        return frac >= 0.9, {'fraction_within_0.1': frac}

    def fact_tail(scen, tol):
        _, sym_pp = pylib_sym.CompactSplit(scen.symbol)
        k_list = [k for k in (50, 100, 200) if k < scen.phi.n_vec]
        df_tail = pylib_spec.TailNormCheck(scen.phi, scen.psi, sym_pp, k_list, tol)
        return bool(df_tail.within.all() and df_tail.monotone.all()), \
               {'k': list(df_tail.k), 'bound': list(df_tail.bound), 'actual': list(df_tail.actual)}

    expected = [ExpectedFact('parseval', _FactParseval, 'STATED', 'phi is a Parseval frame'),
                ExpectedFact('m_prime_identity', fact_identity, 'STATED', "M_{m', phi, phi} = I")]
    if size >= 100:
        expected.append(ExpectedFact('cluster_at_one', fact_cluster, 'DERIVED', 'at least 90% of eigenvalues within 0.1 of 1'))
    if 2*size > 50:
        expected.append(ExpectedFact('tail_norm', fact_tail, 'DERIVED', "||M_{m'' beyond K}|| <= sup_{n>K} |m''_n|, monotone in K"))

    metadata = {'second_basis': 'unitary DFT matrix scipy.linalg.dft(size)/sqrt(size)', 'limits': [0., 2.]}

    return ScenarioInstance('example_interleaved_onb', size, seed, phi, phi, symbol, expected, metadata)

# Multiplication by x^2
#--------------------------------------
def FourierCoefX(j_idx):
    '''Fourier coefficients of x on (0, 1).'''
    j_idx = np.asarray(j_idx)
    coef = np.full(j_idx.shape, 0.5, dtype=complex)
    i_nz = j_idx != 0
    coef[i_nz] = 1j/(2.*np.pi*j_idx[i_nz])
    return coef

def FourierCoefX2(j_idx):
    '''Fourier coefficients of x^2 on (0, 1).'''
    j_idx = np.asarray(j_idx)
    coef = np.full(j_idx.shape, 1./3., dtype=complex)
    i_nz = j_idx != 0
    coef[i_nz] = 1./(2.*np.pi**2*j_idx[i_nz]**2) + 1j/(2.*np.pi*j_idx[i_nz])
    return coef

def FourierCoefQuad(func, j_idx, epsabs=1e-13):
    '''Fourier coefficients int_0^1 f(x) e^{-2 pi i j x} dx by oscillatory quadrature.'''
    coef = []
    for j in np.asarray(j_idx).ravel():
        if j == 0:
            coef.append(scipyint.quad(func, 0., 1., epsabs=epsabs, limit=200)[0] + 0j)
            continue
        w = 2.*np.pi*j
        c_re = scipyint.quad(func, 0., 1., weight='cos', wvar=w, epsabs=epsabs, limit=200)[0]
        c_im = scipyint.quad(func, 0., 1., weight='sin', wvar=w, epsabs=epsabs, limit=200)[0]
        coef.append(c_re - 1j*c_im)
    return np.array(coef, dtype=complex)

def _ToeplitzFromCoef(coef_fun, size):
    #entry (k, n) = g^(k - n), |k|, |n| <= size
    n_mode = np.arange(-size, size+1)
    return coef_fun(n_mode[:,np.newaxis] - n_mode[np.newaxis,:])

def GalerkinX2(size):
    '''Galerkin compression of multiplication by x^2 on the modes |n| <= size.'''
    return _ToeplitzFromCoef(FourierCoefX2, size)

def _TailVectors(mat):
    #columns v_i with sum v_i v_i^* = mat for a PSD matrix
    eig_val, eig_vec = scipylinalg.eigh(0.5*(mat + mat.conj().T))
    i_pos = eig_val > 1e-15*max(1., np.abs(eig_val).max())
    return eig_vec[:,i_pos] * np.sqrt(eig_val[i_pos])

def ExampleFourierX2(size=200, seed=0):
    '''
    Frame {x e_n, sqrt(1-x^2) e_n} projected on the trigonometric modes
    |k| <= size, with the symbol (1, 0, 1, 0, ...); the multiplier is the
    Galerkin compression P X^2 P of multiplication by x^2.

    The pairs with |n| <= 2*size are kept explicitly. The modes outside that
    band contribute the PSD remainders P X^2 P - sum_n (P x e_n)(P x e_n)^*
    and P (1-X^2) P - sum_n (P s e_n)(P s e_n)^*, which enter as the pairs
    of their scaled eigenvectors (zero-padded to equal counts), so phi is a
    Parseval frame of the truncated space.
    '''

    if size < 4:
        raise InputError('Error. Fourier example needs size >= 4')
    n_band = 2*size
    k_mode = np.arange(-size, size+1)
    n_wide = np.arange(-n_band, n_band+1)
    j_all  = np.arange(-size-n_band, size+n_band+1)
    coef_sq = dict(zip(j_all, FourierCoefQuad(lambda x: np.sqrt(1. - x**2), j_all)))

    #projected band columns, entry (k, n) = g^(k - n)
    j_kn   = k_mode[:,np.newaxis] - n_wide[np.newaxis,:]
    x_cols  = FourierCoefX(j_kn)
    sq_cols = np.vectorize(coef_sq.get, otypes=[complex])(j_kn)

    #remainders of the modes outside the band
    gal_x2 = GalerkinX2(size)
    gal_sq = np.eye(len(k_mode)) - gal_x2
    tail_x  = _TailVectors(gal_x2 - x_cols @ x_cols.conj().T)
    tail_sq = _TailVectors(gal_sq - sq_cols @ sq_cols.conj().T)
    n_tail = max(tail_x.shape[1], tail_sq.shape[1])
    tail_x  = np.hstack([tail_x,  np.zeros((len(k_mode), n_tail - tail_x.shape[1]))])
    tail_sq = np.hstack([tail_sq, np.zeros((len(k_mode), n_tail - tail_sq.shape[1]))])

    n_pair = len(n_wide) + n_tail
    synth_mat = np.zeros((len(k_mode), 2*n_pair), dtype=complex)
    synth_mat[:,0::2] = np.hstack([x_cols,  tail_x])
    synth_mat[:,1::2] = np.hstack([sq_cols, tail_sq])
    phi = pylib_frm.FiniteFrame(synth_mat, name='fourier_x2')
    symbol = pylib_sym.PeriodicSymbol([1., 0.], name='alternating_1_0')

    def fact_range(scen, tol):
        eig_val = _EigenvaluesOf(scen, tol)
        ok = np.all(np.abs(eig_val.imag) <= 1e-9) and eig_val.real.min() >= -1e-9 and eig_val.real.max() <= 1. + 1e-9
        return ok, {'min': float(eig_val.real.min()), 'max': float(eig_val.real.max())}

    def fact_gap(scen, tol):
        eig_val = np.sort(np.r_[0., _EigenvaluesOf(scen, tol).real, 1.])
        max_gap = float(np.diff(eig_val).max())
        return max_gap < 0.05, {'max_gap': max_gap}

    def fact_quadrature(scen, tol):
        j_chk  = np.arange(-2*scen.size, 2*scen.size+1)
        coef_q = dict(zip(j_chk, FourierCoefQuad(lambda x: x**2, j_chk)))
        mat_q  = _ToeplitzFromCoef(lambda j: np.vectorize(coef_q.get, otypes=[complex])(j), scen.size)
        err = float(np.abs(scen.assemble(tol).matrix - mat_q).max())
        return err <= 1e-10, {'max_entry_error': err}

    def fact_parseval(scen, tol):
        bnds = pylib_frm.ComputeFrameBounds(scen.phi, tol)
        return bnds.is_parseval(1e-10), {'lower': bnds.lower, 'upper': bnds.upper}

    expected = [ExpectedFact('parseval', fact_parseval, 'DERIVED', 'x^2 + (1 - x^2) = 1 on the truncated modes'),
                ExpectedFact('eigenvalues_in_unit_interval', fact_range, 'DERIVED', 'eigenvalues real in [-1e-9, 1+1e-9]'),
                ExpectedFact('galerkin_quadrature', fact_quadrature, 'DERIVED',
                             'assembled multiplier matches the quadrature x^2 Galerkin matrix within 1e-10')]
    if size >= 200:
        expected.append(ExpectedFact('spectrum_fills_interval', fact_gap, 'DERIVED', 'max gap of sorted eigenvalues < 0.05'))
    metadata = {'modes': [-size, size], 'band': [-n_band, n_band], 'n_tail_pairs': int(n_tail),
                'sqrt_coefficients': 'scipy.integrate.quad, weight cos/sin'}

    return ScenarioInstance('example_fourier_x2', size, seed, phi, phi, symbol, expected, metadata)

# Diagonal pair
#--------------------------------------
def ExampleDiagonalPair(size=100, seed=0):
    '''
    Parseval frame {e_n/n, sqrt(1-1/n^2) e_n} with the symbol (1, 0, 1, 0, ...);
    the multiplier is diag(1/n^2).
    '''

    if size < 1:
        raise InputError('Error. Diagonal example needs size >= 1')
    n_val = np.arange(1, size+1)
    synth_mat = np.zeros((size, 2*size), dtype=complex)
    synth_mat[n_val-1, 2*(n_val-1)]   = 1./n_val
    synth_mat[n_val-1, 2*(n_val-1)+1] = np.sqrt(1. - 1./n_val**2)
    phi = pylib_frm.FiniteFrame(synth_mat, name='diagonal_pair')
    symbol = pylib_sym.PeriodicSymbol([1., 0.], name='alternating_1_0')

    def fact_tail(scen, tol):
        eig_val = _EigenvaluesOf(scen, tol)
        tail_sum = float(np.sum(np.sort(np.abs(eig_val))[:-1]))
        return tail_sum <= np.pi**2/6., {'partial_sum': tail_sum, 'bound': np.pi**2/6.}

    expected = [ExpectedFact('parseval', _FactParseval, 'DERIVED', '1/n^2 + (1 - 1/n^2) = 1'),
                ExpectedFact('inverse_squares', _FactSpectrumMultiset(lambda s: 1./np.arange(1, s.size+1)**2, 1e-12),
                             'DERIVED', 'eigenvalues {1/n^2}'),
                ExpectedFact('stated_inverse_n', _FactSpectrumSet(lambda s: 1./np.arange(1, s.size+1), 1e-12),
                             'STATED', 'point spectrum {1/n}'),
                ExpectedFact('tail_sum_bounded', fact_tail, 'DERIVED', 'sum of eigenvalues off 1 is below pi^2/6')]

    return ScenarioInstance('example_diagonal_pair', size, seed, phi, phi, symbol, expected)

# Duplicated orthonormal basis
#--------------------------------------
def RationalEnumeration(n_val):
    '''First n_val distinct rationals of [0, 1] ordered by denominator.'''
    vals, seen, den = [], set(), 1
    while len(vals) < n_val:
        for num in range(den+1):
            r = Fraction(num, den)
            if r not in seen:
                seen.add(r)
                vals.append(float(r))
                if len(vals) == n_val:
                    break
        den += 1
    return np.array(vals)

def DuplicatedSymbol(size, profile='alternating', const=1.):
    '''Symbol of length 2 size for the duplicated basis.'''
    if profile == 'alternating':
        return np.tile([1., -1.], size).astype(complex)
    elif profile == 'rational_pairs':
        return np.repeat(RationalEnumeration(size), 2).astype(complex)
    elif profile == 'rational_mirror':
        r_val = RationalEnumeration(size)
        return np.column_stack([r_val, 1. - r_val]).ravel().astype(complex)
    elif profile == 'constant':
        return np.full(2*size, const, dtype=complex)
    raise InputError('Error. Unknown duplicated-basis profile %r'%profile)

def ExampleDuplicatedONB(size=50, seed=0, profile='alternating', m=None, const=1.):
    '''
    Frame phi_{2n-1} = phi_{2n} = e_n/sqrt2 with infinite-excess analog; the
    spectrum is the set of pair averages (m_{2n-1} + m_{2n})/2.
    '''

    if size < 1:
        raise InputError('Error. Duplicated example needs size >= 1')
    sym_val = DuplicatedSymbol(size, profile, const) if m is None else np.asarray(m, dtype=complex).ravel()
    if len(sym_val) != 2*size:
        raise InputError('Error. Duplicated example needs a symbol of length %i, got %i'%(2*size, len(sym_val)))
    synth_mat = np.repeat(np.eye(size), 2, axis=1).astype(complex)/np.sqrt(2.)
    phi = pylib_frm.FiniteFrame(synth_mat, name='duplicated_onb')
    symbol = pylib_sym.Symbol(sym_val, name=profile if m is None else 'user')
    tau = 0.5*(sym_val[0::2] + sym_val[1::2])

    def fact_zero(scen, tol):
        m_norm = pylib_la.OperatorNorm(scen.assemble(tol).matrix)
        return m_norm <= 1e-12, {'norm': m_norm}

    expected = [ExpectedFact('pair_averages', _FactSpectrumMultiset(lambda s: tau, 1e-12), 'DERIVED',
                             'spectrum {(m_{2n-1} + m_{2n})/2}'),
                ExpectedFact('excess_equals_size', lambda s, t: (pylib_frm.Excess(s.phi, t) == s.size, {}),
                             'TRIVIAL', 'excess grows with the truncation size')]
    if profile == 'alternating' and m is None:
        expected.append(ExpectedFact('zero_operator', fact_zero, 'DERIVED', 'M = 0'))
    if profile == 'rational_mirror' and m is None:
        expected.append(ExpectedFact('singleton_spectrum', _FactSpectrumSet(lambda s: [0.5], 1e-12), 'STATED',
                                     'spectrum is a singleton while the symbol has every point of [0,1] as limit'))
    metadata = {'profile': profile if m is None else 'user', 'tau': tau}

    return ScenarioInstance('example_duplicated_onb', size, seed, phi, phi, symbol, expected, metadata)

# Excess one
#--------------------------------------
def _LangleyIndex(n_idx):
    #odd integer j of the 0-based index n >= 1
    n_one = np.asarray(n_idx) + 1
    return np.where(n_one % 2 == 1, n_one, 3 - n_one)

def LangleyKernel(n_idx):
    '''Kernel sequence d of the excess-one frame (0-based indices).'''
    n_idx = np.asarray(n_idx, dtype=int)
    j_idx = _LangleyIndex(n_idx)
    d_seq = 1./np.sqrt(j_idx.astype(float)**2*np.pi**2 + 1.)
    d_seq = np.where(n_idx == 0, 1./np.sqrt(2.*(np.e + 1.)), d_seq)
    return d_seq[np.newaxis,:].astype(complex)

def LangleySymbolValues(n_idx):
    n_idx = np.asarray(n_idx, dtype=int)
    j_idx = _LangleyIndex(n_idx)
    sym_val = 1. - 1./(1. + j_idx*np.pi*1j)
    return np.where(n_idx == 0, 0.5 + 0j, sym_val)

def LangleyKernelTail(k_trunc):
    '''Bound of sum_{n >= K} d_n^2 (0-based), valid for K > 4.'''
    if k_trunc <= 4:
        raise InputError('Error. Kernel tail bound needs K > 4')
    return 1./(np.pi**2*(k_trunc - 4))

def LangleySymbol():
    maj = pylib_sym.Majorant('custom', func=lambda n: np.minimum(0.5, 1./(np.pi*np.maximum(n - 2., 0.5))),
                             label='min(1/2, 1/(pi max(n-2, 1/2)))')
    struct = pylib_sym.LimitStructure([pylib_sym.LimitClass(1., pylib_sym.IndexSelector('all'), maj)])
    return pylib_sym.Symbol(generator=LangleySymbolValues, structure=struct, name='langley')

def LangleyFrame(size):
    '''Parseval frame of size vectors in the orthogonal complement of the truncated kernel.'''
    d_seq = LangleyKernel(np.arange(size))
    basis = pylib_la.NullspaceBasis(d_seq.conj())
    return pylib_frm.FiniteFrame(basis.conj().T, name='langley')

def LangleyStructured():
    return pylib_frm.StructuredFrame('closed_form', 1, LangleyFrame, LangleyKernel, LangleyKernelTail, name='langley')

def ExampleExcessOneLangley(size=2**14, seed=0, n_dense=256):
    '''
    Self-dual Parseval frame of excess one whose kernel is spanned by d with
    d_1^2 = 1/(2(e+1)), d_n^2 = 1/(j^2 pi^2 + 1) over odd j, and the symbol
    m_1 = 1/2, m_n = 1 - 1/(1 + j pi i). The secular function has no zeros in
    the unit disk; the spectrum is {1}.

    size is the secular truncation K; the dense truncation has min(K, n_dense)
    indices.
    '''

    if size < 16:
        raise InputError('Error. Excess-one example needs truncation K >= 16')
    struct = LangleyStructured()
    symbol = LangleySymbol()
    n_vec  = min(size, n_dense)
    phi    = struct.truncate(n_vec)

    def fact_limits(scen, tol):
        limits = pylib_sym.LimitPoints(scen.symbol, tol)
        return len(limits) == 1 and abs(limits[0] - 1.) <= tol.eig_atol, {'limits': list(limits)}

    def fact_norm(scen, tol):
        sup_m  = scen.symbol.sup_norm(scen.size)
        m_norm = pylib_mult.NormBound(scen.assemble(tol))
        eig_max = float(np.abs(_EigenvaluesOf(scen, tol)).max())
        return sup_m <= 1. and m_norm <= 1. + 1e-12 and eig_max <= 1. + 1e-9, \
               {'sup_symbol': sup_m, 'norm_bound': m_norm, 'max_abs_eigenvalue': eig_max}

    def fact_zero_free(scen, tol):
        data = pylib_sec.SecularDataFromStructured(struct, struct, scen.symbol)
        search = pylib_sec.SecularRoots(data, pylib_sec.DiskRegion(0., 0.99), tol, k_min=scen.size)
        cert = pylib_sec.CertifyRootNear(data, 0., 0.995, tol, search.k_trunc)
        #symbol values inside the disk are compensated poles
        n_sym = int(np.sum(np.abs(scen.symbol.prefix(search.k_trunc)) < 0.995))
        ok = search.status == 'certified' and len(search.roots) == 0 and len(search.symbol_zeros) == 0 and \
             search.certificate.is_valid and cert.is_valid and cert.winding_count == 0
        return ok, \
               {'k_trunc': search.k_trunc, 'roots': len(search.roots), 'symbol_poles_0.995': n_sym,
                'certificate_0.99': search.certificate.to_dict(), 'certificate_0.995': cert.to_dict()}

    expected = [ExpectedFact('limit_points', fact_limits, 'STATED', 'limit points of m are {1}'),
                ExpectedFact('spectrum_in_unit_disk', fact_norm, 'STATED', '||m|| <= 1, ||M|| <= 1'),
                ExpectedFact('secular_zero_free', fact_zero_free, 'STATED', 'secular function has no zeros in |lambda| < 0.995')]
    metadata = {'secular_truncation': size, 'dense_truncation': n_vec, 'kernel_tail': '1/(pi^2 (K-4))'}

    return ScenarioInstance('example_excess_one_langley', size, seed, phi, phi, symbol, expected, metadata,
                            structured=(struct, struct))

# Riesz structured model
#--------------------------------------
def RieszFrame(size):
    '''phi_n = T e_n with T = I + shift/2.'''
    return pylib_frm.FiniteFrame(np.eye(size) + 0.5*np.eye(size, k=-1), name='riesz_shift')

def RieszDualFrame(size):
    return pylib_frm.CanonicalDual(RieszFrame(size))

def RieszStructuredPair(size=64, seed=0):
    '''
    Riesz basis T e_n, T = I + shift/2, with its canonical dual and the symbol
    m_n = 1/(n+1); eigenvalues are the symbol values.
    '''

    phi_struct = pylib_frm.StructuredFrame('riesz_with_excess', 0, RieszFrame, name='riesz_shift')
    psi_struct = pylib_frm.StructuredFrame('riesz_with_excess', 0, RieszDualFrame, name='riesz_shift_dual')
    struct = pylib_sym.LimitStructure([pylib_sym.LimitClass(0., pylib_sym.IndexSelector('all'),
                                                            pylib_sym.Majorant('power', const=1., power=1., offset=1.))])
    symbol = pylib_sym.Symbol(generator=lambda n: 1./(np.asarray(n) + 1.) + 0j, structure=struct, name='inverse_index')
    phi, psi = phi_struct.truncate(size), psi_struct.truncate(size)

    expected = [ExpectedFact('dual_pair', _FactDualPair, 'TRIVIAL', 'canonical dual pair'),
                ExpectedFact('spectrum_equals_symbol', _FactSpectrumMultiset(lambda s: s.sym_val, 1e-9), 'STATED',
                             'point spectrum is {m_n}')]

    return ScenarioInstance('riesz_structured_pair', size, seed, phi, psi, symbol, expected,
                            structured=(phi_struct, psi_struct))

# Random Instances
#--------------------------------------
def RandomFrame(rng, n_dim, n_vec, cond_max=1e3):
    '''Complex d x N frame with condition number in [1, cond_max].'''
    a_mat = rng.standard_normal((n_dim, n_vec)) + 1j*rng.standard_normal((n_dim, n_vec))
    u_mat, _, vh_mat = scipylinalg.svd(a_mat, full_matrices=False)
    cond = 10.**rng.uniform(0., np.log10(cond_max))
    sing_val = np.geomspace(1., 1./cond, n_dim)
    return pylib_frm.FiniteFrame((u_mat*sing_val) @ vh_mat)

def RandomDual(rng, phi):
    '''Dual frame Psi^H = Phi^H S^-1 + (I - Phi^H S^-1 Phi) Z, refined against Phi Psi^H = I.'''
    can_dual = pylib_frm.CanonicalDual(phi).synth_mat
    z_mat = rng.standard_normal((phi.n_vec, phi.dim)) + 1j*rng.standard_normal((phi.n_vec, phi.dim))
    proj  = np.eye(phi.n_vec) - can_dual.conj().T @ phi.synth_mat
    psi_h = can_dual.conj().T + proj @ z_mat
    #one correction step on Phi Psi^H = I
    psi_h = psi_h - can_dual.conj().T @ (phi.synth_mat @ psi_h - np.eye(phi.dim))
    return pylib_frm.FiniteFrame(psi_h.conj().T)

def RandomSymbol(rng, n_dim, n_vec, profile):
    if profile in ('generic', 'canonical_dual_pair', 'riesz_canonical'):
        return rng.standard_normal(n_vec) + 1j*rng.standard_normal(n_vec)
    elif profile == 'real_symbol':
        return rng.standard_normal(n_vec) + 0j
    elif profile == 'planted_zeros':
        sym_val = rng.standard_normal(n_vec) + 1j*rng.standard_normal(n_vec)
        n_zero = rng.integers(1, n_vec - n_dim + 2)
        sym_val[rng.choice(n_vec, size=n_zero, replace=False)] = 0.
        return sym_val
    elif profile == 'planted_collisions':
        pool = rng.standard_normal(3) + 1j*rng.standard_normal(3)
        return pool[rng.integers(0, 3, size=n_vec)]
    raise InputError('Error. Unknown symbol profile %r'%profile)

def RandomInstance(seed=0, d=3, N=5, profile='generic', canonical=None):
    '''
    Seeded random multiplier instance

    Parameters
    ----------
    seed : int
        Random seed.
    d, N : int
        Dimension and number of vectors, N >= d >= 1.
    profile : string
        One of generic, planted_zeros, planted_collisions, real_symbol,
        canonical_dual_pair, riesz_canonical (N = d).
    canonical : bool, optional
        Use the canonical dual. The default follows the profile.

    Returns
    -------
    ScenarioInstance
        Deterministic in (seed, d, N, profile).
    '''

    if profile not in PROFILES:
        raise InputError('Error. Unknown symbol profile %r, expected one of %s'%(profile, PROFILES))
    if not N >= d >= 1:
        raise InputError('Error. Random instances need N >= d >= 1, got d=%r, N=%r'%(d, N))
    if profile == 'riesz_canonical' and N != d:
        raise InputError('Error. Profile riesz_canonical needs N = d')
    if canonical is None:
        canonical = profile in ('canonical_dual_pair', 'riesz_canonical')

    rng = np.random.default_rng(seed)
    phi = RandomFrame(rng, d, N)
    psi = pylib_frm.CanonicalDual(phi) if canonical else RandomDual(rng, phi)
    symbol = pylib_sym.Symbol(RandomSymbol(rng, d, N, profile), name=profile)

    expected = [ExpectedFact('dual_pair', _FactDualPair, 'DERIVED', 'D_phi C_psi = I')]
    if profile == 'planted_zeros':
        expected.append(ExpectedFact('planted_zero', lambda s, t: (bool(np.any(s.sym_val == 0)), {}), 'TRIVIAL',
                                     'symbol has an exact zero'))
    if profile == 'riesz_canonical':
        expected.append(ExpectedFact('spectrum_equals_symbol', _FactSpectrumMultiset(lambda s: s.sym_val, 1e-9),
                                     'STATED', 'point spectrum is {m_n}'))
    metadata = {'d': d, 'N': N, 'profile': profile, 'canonical_dual': bool(canonical)}

    return ScenarioInstance('random_instance', N, seed, phi, psi, symbol, expected, metadata)

# Registry
#--------------------------------------
SCENARIOS = {'example_interleaved_onb':    ExampleInterleavedONB,
             'example_fourier_x2':         ExampleFourierX2,
             'example_diagonal_pair':      ExampleDiagonalPair,
             'example_duplicated_onb':     ExampleDuplicatedONB,
             'example_excess_one_langley': ExampleExcessOneLangley,
             'riesz_structured_pair':      RieszStructuredPair}

def BuildScenario(name, size=None, seed=0, **params):
    '''Build a named scenario; random instances take d, N and profile.'''
    if name == 'random_instance':
        return RandomInstance(seed, **params)
    if name not in SCENARIOS:
        raise InputError('Error. Unknown scenario %r, expected one of %s'%(name, sorted(SCENARIOS) + ['random_instance']))
    if size is None:
        return SCENARIOS[name](seed=seed, **params)
    return SCENARIOS[name](size, seed, **params)
