#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Tue Sep 15 14:02:10 2026

Finite frames, their analysis, synthesis and frame operators, duals, excess
and kernel sequences, and structurally described infinite frames
"""

# Packages
# ---------------------------
#load libraries
import logging
#arithmetic libraries
import numpy as np
from scipy import linalg as scipylinalg
#user libraries
from Python_lib.numerics import pylib_linalg as pylib_la
from Python_lib.numerics.pylib_linalg import InputError, ToleranceError

logger = logging.getLogger(__name__)

class FrameError(ToleranceError):
    '''Sequence does not span the ambient space.'''
    pass

# Frame Types
#--------------------------------------
class FiniteFrame:
    '''
    Finite sequence of N vectors in C^d, stored as the columns of its
    d x N synthesis matrix.

    Parameters
    ----------
    synth_mat : array_like
        Synthesis matrix, column n is the vector phi_n.
    name : string, optional
        Label used in reports.
    '''

    def __init__(self, synth_mat, name=None):

        synth_mat = pylib_la.AsComplexMatrix(synth_mat, 'synthesis matrix').copy()
        if synth_mat.shape[1] < 1:
            raise InputError('Error. A frame needs at least one vector')
        synth_mat.flags.writeable = False
        self.synth_mat = synth_mat
        self.name      = name

    @classmethod
    def from_vectors(cls, vectors, name=None):
        '''Build from a sequence of N vectors of length d.'''
        vectors = [np.asarray(v, dtype=complex).ravel() for v in vectors]
        if len(vectors) == 0:
            raise InputError('Error. A frame needs at least one vector')
        if len(set(len(v) for v in vectors)) != 1:
            raise InputError('Error. Frame vectors have different lengths')
        return cls(np.column_stack(vectors), name=name)

    @property
    def dim(self):
        return self.synth_mat.shape[0]

    @property
    def n_vec(self):
        return self.synth_mat.shape[1]

    def vector(self, n):
        return self.synth_mat[:,n]

    def __repr__(self):
        return 'FiniteFrame(dim=%i, n_vec=%i%s)'%(self.dim, self.n_vec,
                                                  '' if self.name is None else ', name=%r'%self.name)

class FrameBounds:
    '''Optimal lower and upper frame bounds.'''

    def __init__(self, lower, upper):
        if not (0 < lower <= upper):
            raise InputError('Error. Frame bounds must satisfy 0 < A <= B, got (%r, %r)'%(lower, upper))
        self.lower = float(lower)
        self.upper = float(upper)

    def is_parseval(self, atol):
        return abs(self.lower - 1.) <= atol and abs(self.upper - 1.) <= atol

    def to_dict(self):
        return {'lower': self.lower, 'upper': self.upper}

    def __repr__(self):
        return 'FrameBounds(lower=%r, upper=%r)'%(self.lower, self.upper)

class KernelBasis:
    '''
    Kernel sequences d_i of a synthesis operator, normalized to the identity on
    the excess index set.

    Attributes
    ----------
    idx_exc : np.array
        Excess indices n_1 < ... < n_q (0-based).
    seqs : np.array
        q x N array, row i is the sequence d_i.
    '''

    def __init__(self, idx_exc, seqs):
        self.idx_exc = np.asarray(idx_exc, dtype=int)
        self.seqs    = np.asarray(seqs, dtype=complex).reshape(len(self.idx_exc), -1)

    @property
    def n_exc(self):
        return len(self.idx_exc)

    def __repr__(self):
        return 'KernelBasis(idx_exc=%s)'%list(self.idx_exc)

class StructuredFrame:
    '''
    Infinite frame with finite excess described by closed-form rules

    Parameters
    ----------
    kind : string
        One of riesz_with_excess, closed_form.
    n_exc : int
        Excess q.
    generator : callable
        size -> FiniteFrame, truncation of the frame to its first size indices.
    kernel_rule : callable, optional
        0-based index array -> q x len array of kernel entries d_i^n. Required when q > 0.
    tail_bound_rule : callable, optional
        K -> upper bound of max_i sum_{n >= K} |d_i^n|^2. Required when q > 0.
    name : string, optional
        Label used in reports.
    '''

    kinds = ('riesz_with_excess', 'closed_form')

    def __init__(self, kind, n_exc, generator, kernel_rule=None, tail_bound_rule=None, name=None):

        if kind not in self.kinds:
            raise InputError('Error. Unknown structured frame kind %r'%kind)
        if int(n_exc) != n_exc or n_exc < 0:
            raise InputError('Error. Excess must be a non-negative integer, got %r'%n_exc)
        if n_exc > 0 and (kernel_rule is None or tail_bound_rule is None):
            raise InputError('Error. Kernel and tail-bound rules are required for positive excess')
        self.kind            = kind
        self.n_exc           = int(n_exc)
        self.generator       = generator
        self.kernel_rule     = kernel_rule
        self.tail_bound_rule = tail_bound_rule
        self.name            = name

    def truncate(self, size):
        return self.generator(size)

    def kernel(self, n_idx):
        n_idx = np.asarray(n_idx, dtype=int)
        if self.n_exc == 0:
            return np.zeros((0, len(n_idx)), dtype=complex)
        return np.asarray(self.kernel_rule(n_idx), dtype=complex).reshape(self.n_exc, len(n_idx))

    def kernel_tail(self, k_trunc):
        if self.n_exc == 0:
            return 0.
        return float(self.tail_bound_rule(k_trunc))

    def __repr__(self):
        return 'StructuredFrame(kind=%r, n_exc=%i%s)'%(self.kind, self.n_exc,
                                                        '' if self.name is None else ', name=%r'%self.name)

def SymbolValues(symbol, n_val):
    '''First n_val entries of a Symbol or of an array-like symbol.'''
    if hasattr(symbol, 'prefix'):
        return symbol.prefix(n_val)
    sym_val = np.asarray(symbol, dtype=complex).ravel()
    if len(sym_val) < n_val:
        raise InputError('Error. Symbol has %i entries, %i needed'%(len(sym_val), n_val))
    if not np.all(np.isfinite(sym_val[:n_val])):
        raise InputError('Error. Symbol contains non-finite entries')
    return sym_val[:n_val]

# Frame Operators
#--------------------------------------
def AnalysisMatrix(frame):
    '''N x d matrix of C_phi, row n is phi_n^*.'''
    return frame.synth_mat.conj().T

def SynthesisMatrix(frame):
    '''d x N matrix of D_phi.'''
    return frame.synth_mat

def Analysis(frame, f):
    '''
    Coefficients <f, phi_n> of a vector

    Parameters
    ----------
    frame : FiniteFrame
        Frame.
    f : np.array
        Vector of length dim.

    Returns
    -------
    coef : np.array
        Analysis coefficients.
    '''

    f = np.asarray(f, dtype=complex).ravel()
    if len(f) != frame.dim:
        raise InputError('Error. Vector length %i does not match frame dimension %i'%(len(f), frame.dim))

    return AnalysisMatrix(frame) @ f

def Synthesis(frame, coef):
    '''Linear combination sum_n c_n phi_n.'''
    coef = np.asarray(coef, dtype=complex).ravel()
    if len(coef) != frame.n_vec:
        raise InputError('Error. Coefficient length %i does not match frame size %i'%(len(coef), frame.n_vec))

    return frame.synth_mat @ coef

def FrameOperator(frame):
    '''Frame operator S = D_phi C_phi (Hermitian).'''
    s_mat = frame.synth_mat @ frame.synth_mat.conj().T
    return 0.5*(s_mat + s_mat.conj().T)

def IsFrame(frame, tol=None):
    '''Spanning test (synthesis matrix of rank d).'''
    return pylib_la.NumericalRank(frame.synth_mat, tol) == frame.dim

def _CheckFrame(frame, tol):
    rank = pylib_la.NumericalRank(frame.synth_mat, tol)
    if rank < frame.dim:
        raise FrameError('Error. Sequence is not a frame (rank %i < dimension %i)'%(rank, frame.dim))

def ComputeFrameBounds(frame, tol=None):
    '''
    Optimal frame bounds, the extreme eigenvalues of the frame operator

    Parameters
    ----------
    frame : FiniteFrame
        Frame.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    FrameBounds
        Lower and upper bound.
    '''

    _CheckFrame(frame, tol)
    eig_val, _ = pylib_la.HermitianEig(FrameOperator(frame), tol)

    return FrameBounds(eig_val[0], eig_val[-1])

def BesselBound(frame):
    '''Optimal Bessel bound, ||D_phi||^2.'''
    return pylib_la.OperatorNorm(frame.synth_mat)**2

# Duals
#--------------------------------------
def CanonicalDual(frame, tol=None):
    '''Canonical dual frame S^-1 phi.'''
    _CheckFrame(frame, tol)
    dual_mat = scipylinalg.solve(FrameOperator(frame), frame.synth_mat, assume_a='her')

    return FiniteFrame(dual_mat, name=None if frame.name is None else frame.name + '_dual')

def CanonicalParseval(frame, tol=None):
    '''Canonical Parseval frame S^-1/2 phi.'''
    _CheckFrame(frame, tol)
    s_isqrt = pylib_la.PSDInvSqrt(FrameOperator(frame), tol)

    return FiniteFrame(s_isqrt @ frame.synth_mat, name=None if frame.name is None else frame.name + '_parseval')

def IsDualPair(phi, psi, tol=None):
    '''
    Duality test ||D_phi C_psi - I|| <= residual_atol

    Parameters
    ----------
    phi : FiniteFrame
        Left frame.
    psi : FiniteFrame
        Right frame.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    flag : bool
        True for a dual pair.
    residual : real
        Operator-norm residual.
    '''

    tol = pylib_la._Tol(tol)
    if phi.synth_mat.shape != psi.synth_mat.shape:
        raise InputError('Error. Frame shapes differ: %s vs %s'%(phi.synth_mat.shape, psi.synth_mat.shape))

    residual = pylib_la.OperatorNorm(phi.synth_mat @ psi.synth_mat.conj().T - np.eye(phi.dim))

    return residual <= tol.residual_atol, residual

# Excess and Kernel Sequences
#--------------------------------------
def Excess(frame, tol=None):
    '''Nullity of the synthesis matrix.'''
    return frame.n_vec - pylib_la.NumericalRank(frame.synth_mat, tol)

def IsRieszBasis(frame, tol=None):
    '''Frame with zero excess, i.e. square invertible synthesis matrix.'''
    return frame.n_vec == frame.dim and IsFrame(frame, tol)

def SelectExcessIndices(frame, tol=None):
    '''
    Greedy excess index set: remove vectors in increasing index order as long
    as the remaining ones still span.
    '''

    _CheckFrame(frame, tol)
    n_exc = Excess(frame, tol)

    i_keep  = np.ones(frame.n_vec, dtype=bool)
    idx_exc = []
    for n in range(frame.n_vec):
        if len(idx_exc) == n_exc:
            break
        i_keep[n] = False
        if pylib_la.NumericalRank(frame.synth_mat[:,i_keep], tol) == frame.dim:
            idx_exc.append(n)
        else:
            i_keep[n] = True

    return np.array(idx_exc, dtype=int)

def ComputeKernelBasis(frame, idx_exc=None, tol=None):
    '''
    Kernel sequences d_i with d_i^{n_k} = delta_ik on the excess index set

    Parameters
    ----------
    frame : FiniteFrame
        Frame.
    idx_exc : array_like, optional
        Excess index set (0-based). The default is the greedy selection.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    KernelBasis
        Excess indices and kernel sequences.
    '''

    tol = pylib_la._Tol(tol)
    _CheckFrame(frame, tol)
    n_exc = Excess(frame, tol)
    if idx_exc is None:
        idx_exc = SelectExcessIndices(frame, tol)
    idx_exc = np.unique(np.asarray(idx_exc, dtype=int).ravel())
    if len(idx_exc) != n_exc:
        raise InputError('Error. Excess index set has %i entries, excess is %i'%(len(idx_exc), n_exc))
    if len(idx_exc) and (idx_exc[0] < 0 or idx_exc[-1] >= frame.n_vec):
        raise InputError('Error. Excess indices out of range [0, %i)'%frame.n_vec)

    #remaining vectors must form a Riesz basis
    i_comp = np.setdiff1d(np.arange(frame.n_vec), idx_exc)
    phi_comp = frame.synth_mat[:,i_comp]
    if not IsRieszBasis(FiniteFrame(phi_comp), tol):
        raise InputError('Error. Removing indices %s does not leave a Riesz basis'%list(idx_exc))

    seqs = np.zeros((n_exc, frame.n_vec), dtype=complex)
    seqs[np.arange(n_exc), idx_exc] = 1.
    if n_exc:
        seqs[:,i_comp] = -scipylinalg.solve(phi_comp, frame.synth_mat[:,idx_exc]).T
        res = pylib_la.OperatorNorm(frame.synth_mat @ seqs.T)
        logger.debug('kernel basis: excess %i, annihilation residual %.3e', n_exc, res)

    return KernelBasis(idx_exc, seqs)

def ScaledFrame(symbol, frame):
    '''Sequence {m_n phi_n}.'''
    sym_val = SymbolValues(symbol, frame.n_vec)
    return FiniteFrame(frame.synth_mat * sym_val[np.newaxis,:])
