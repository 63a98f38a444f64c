#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Mon Sep 14 09:41:27 2026

Dense complex linear algebra and the tolerance policy shared by the frame,
multiplier and spectral libraries
"""

# Packages
# ---------------------------
#load libraries
import logging
#arithmetic libraries
import numpy as np
from scipy import linalg as scipylinalg
from scipy.cluster import hierarchy as scipyhier

logger = logging.getLogger(__name__)

# Exceptions
#--------------------------------------
class InputError(ValueError):
    '''Invalid shape, value or schema of an input.'''
    pass

class ToleranceError(ArithmeticError):
    '''Numerical precondition violated under the tolerance policy.'''
    pass

class BudgetError(RuntimeError):
    '''Subdivision depth or truncation budget exceeded.'''
    pass

# Tolerance Policy
#--------------------------------------
class TolerancePolicy:
    '''
    Numerical tolerances used for rank decisions, eigenvalue comparisons and
    operator residuals.

    Parameters
    ----------
    rank_rtol : real, optional
        Singular values below rank_rtol * sigma_max are treated as zero. The default is 1e-10.
    eig_atol : real, optional
        Absolute tolerance for eigenvalue and symbol-value comparisons. The default is 1e-9.
    residual_atol : real, optional
        Tolerance for operator residuals (duality, Hermitian symmetry). The default is 1e-9.
    cluster_eps : real, optional
        Cluster radius for numerical limit-point estimation. The default is 1e-3.
    '''

    _fields = ('rank_rtol', 'eig_atol', 'residual_atol', 'cluster_eps')

    def __init__(self, rank_rtol=1e-10, eig_atol=1e-9, residual_atol=1e-9, cluster_eps=1e-3):

        for name, val in zip(self._fields, (rank_rtol, eig_atol, residual_atol, cluster_eps)):
            try:
                val = float(val)
            except (TypeError, ValueError):
                raise InputError('Error. Tolerance %s must be a real number, got %r'%(name, val))
            if not (np.isfinite(val) and val > 0):
                raise InputError('Error. Tolerance %s must be strictly positive, got %r'%(name, val))
            setattr(self, name, val)
        if not self.rank_rtol < 1:
            raise InputError('Error. rank_rtol must be smaller than 1, got %r'%self.rank_rtol)

    def replace(self, **kwargs):
        '''Return a copy with the given tolerances overridden (None values are ignored).'''
        unknown = set(kwargs) - set(self._fields)
        if unknown:
            raise InputError('Error. Unknown tolerance field(s): %s'%', '.join(sorted(unknown)))
        tol_dict = self.to_dict()
        tol_dict.update({k: v for k, v in kwargs.items() if v is not None})
        return TolerancePolicy(**tol_dict)

    def to_dict(self):
        return {name: getattr(self, name) for name in self._fields}

    @classmethod
    def from_dict(cls, tol_dict):
        return DEFAULT_TOL.replace(**tol_dict)

    def __eq__(self, other):
        return isinstance(other, TolerancePolicy) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return 'TolerancePolicy(%s)'%', '.join('%s=%r'%(k, v) for k, v in self.to_dict().items())

DEFAULT_TOL = TolerancePolicy()

def _Tol(tol):
    return DEFAULT_TOL if tol is None else tol

# Matrix Utilities
#--------------------------------------
def AsComplexMatrix(mat, name='matrix'):
    '''
    Convert input to a finite two-dimensional complex array.

    Parameters
    ----------
    mat : array_like
        Input matrix.
    name : string, optional
        Name used in error messages.

    Returns
    -------
    mat : np.array
        Complex matrix.
    '''

    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2:
        raise InputError('Error. %s must be two-dimensional, got shape %s'%(name, mat.shape))
    if not np.all(np.isfinite(mat)):
        raise InputError('Error. %s contains non-finite entries'%name)

    return mat

def OperatorNorm(mat):
    '''Spectral norm, zero for empty matrices.'''
    mat = np.asarray(mat)
    if mat.size == 0:
        return 0.
    return float(scipylinalg.norm(mat, 2))

def _CheckSquare(mat, name='matrix'):
    if mat.shape[0] != mat.shape[1]:
        raise InputError('Error. %s must be square, got %i x %i'%(name, mat.shape[0], mat.shape[1]))

def _RankFromSingular(sing_val, tol):
    if sing_val.size == 0 or sing_val[0] == 0:
        return 0
    return int(np.sum(sing_val > tol.rank_rtol * sing_val[0]))

def NormalizePhase(vec):
    '''Scale vector to unit norm with its largest-modulus entry real positive.'''
    vec = np.asarray(vec, dtype=complex)
    vec_norm = scipylinalg.norm(vec)
    if vec_norm == 0:
        return vec
    i_max = np.argmax(np.abs(vec))
    return vec / vec_norm * (np.abs(vec[i_max]) / vec[i_max])

# Eigenvalue Problems
#--------------------------------------
def HermitianEig(mat, tol=None):
    '''
    Eigen-decomposition of a Hermitian matrix

    Parameters
    ----------
    mat : np.array
        Square Hermitian matrix.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    eig_val : np.array
        Real eigenvalues in ascending order.
    eig_vec : np.array
        Unitary matrix of eigenvectors (columns).
    '''

    tol = _Tol(tol)
    mat = AsComplexMatrix(mat)
    _CheckSquare(mat)
    if mat.shape[0] == 0:
        return np.zeros(0), np.zeros((0,0), dtype=complex)

    #hermitian check
    mat_norm = OperatorNorm(mat)
    herm_res = OperatorNorm(mat - mat.conj().T)
    if herm_res > tol.residual_atol * max(mat_norm, 1.):
        raise ToleranceError('Error. Matrix is not Hermitian (residual %.3e)'%herm_res)

    eig_val, eig_vec = scipylinalg.eigh(0.5*(mat + mat.conj().T))

    return eig_val, eig_vec

def GeneralEig(mat):
    '''
    Eigenvalues of a general square matrix, repeated according to algebraic
    multiplicity and sorted lexicographically by (real, imag).
    '''

    mat = AsComplexMatrix(mat)
    _CheckSquare(mat)
    if mat.shape[0] == 0:
        return np.zeros(0, dtype=complex)

    eig_val = scipylinalg.eigvals(mat)
    i_sort  = np.lexsort((eig_val.imag, eig_val.real))

    return eig_val[i_sort]

def ClusterPoints(pts, eps):
    '''
    Single-linkage clustering of complex points with merge distance eps

    Parameters
    ----------
    pts : np.array
        Complex points.
    eps : real
        Cluster radius.

    Returns
    -------
    centers : np.array
        Cluster means, sorted by (real, imag).
    counts : np.array
        Number of points in each cluster.
    labels : np.array
        Cluster index of every input point (index into centers).
    '''

    pts = np.asarray(pts, dtype=complex).ravel()
    n_pt = len(pts)
    if n_pt == 0:
        return np.zeros(0, dtype=complex), np.zeros(0, dtype=int), np.zeros(0, dtype=int)
    if n_pt == 1:
        return pts.copy(), np.ones(1, dtype=int), np.zeros(1, dtype=int)

    #single linkage on (re, im)
    xy = np.column_stack([pts.real, pts.imag])
    link = scipyhier.linkage(xy, method='single', metric='euclidean')
    clst = scipyhier.fcluster(link, t=eps, criterion='distance') - 1
    n_clst = clst.max() + 1
    centers = np.array([pts[clst == k].mean() for k in range(n_clst)])
    counts  = np.array([np.sum(clst == k) for k in range(n_clst)])
    #deterministic order
    i_sort = np.lexsort((centers.imag, centers.real))
    i_rank = np.empty(n_clst, dtype=int)
    i_rank[i_sort] = np.arange(n_clst)

    return centers[i_sort], counts[i_sort], i_rank[clst]

def GroupEigenvalues(eig_val, group_tol):
    '''Group repeated eigenvalues; returns (values, multiplicities).'''
    centers, counts, _ = ClusterPoints(eig_val, group_tol)
    return centers, counts

# Subspaces
#--------------------------------------
def NumericalRank(mat, tol=None):
    '''Number of singular values above rank_rtol * sigma_max.'''
    tol = _Tol(tol)
    mat = AsComplexMatrix(mat)
    if mat.size == 0:
        return 0
    sing_val = scipylinalg.svd(mat, compute_uv=False)
    return _RankFromSingular(sing_val, tol)

def NullspaceBasis(mat, tol=None):
    '''
    Orthonormal basis of the numerical nullspace

    Parameters
    ----------
    mat : np.array
        Input matrix (n_row x n_col), zero rows allowed.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    basis : np.array
        n_col x (n_col - rank) matrix with orthonormal columns.
    '''

    tol = _Tol(tol)
    mat = AsComplexMatrix(mat)
    n_row, n_col = mat.shape
    if n_col == 0:
        return np.zeros((0,0), dtype=complex)
    if n_row == 0:
        return np.eye(n_col, dtype=complex)

    _, sing_val, vh = scipylinalg.svd(mat, full_matrices=True)
    rank = _RankFromSingular(sing_val, tol)

    return vh[rank:].conj().T

def RangeBasis(mat, tol=None):
    '''Orthonormal basis (columns) of the numerical range.'''
    tol = _Tol(tol)
    mat = AsComplexMatrix(mat)
    n_row, n_col = mat.shape
    if n_row == 0 or n_col == 0:
        return np.zeros((n_row,0), dtype=complex)

    u, sing_val, _ = scipylinalg.svd(mat, full_matrices=False)
    rank = _RankFromSingular(sing_val, tol)

    return u[:,:rank]

def IntersectionBasis(basis_1, basis_2, tol=None):
    '''
    Orthonormal basis of the intersection of two subspaces given by
    orthonormal column bases of the same ambient dimension.
    '''

    tol = _Tol(tol)
    basis_1 = AsComplexMatrix(basis_1)
    basis_2 = AsComplexMatrix(basis_2)
    if basis_1.shape[0] != basis_2.shape[0]:
        raise InputError('Error. Ambient dimensions differ (%i, %i)'%(basis_1.shape[0], basis_2.shape[0]))
    n_amb, n_1 = basis_1.shape
    if n_1 == 0 or basis_2.shape[1] == 0:
        return np.zeros((n_amb,0), dtype=complex)

    #coefficients x, y with basis_1 x = basis_2 y
    coef = NullspaceBasis(np.hstack([basis_1, -basis_2]), tol)
    if coef.shape[1] == 0:
        return np.zeros((n_amb,0), dtype=complex)

    return RangeBasis(basis_1 @ coef[:n_1], tol)

def SumRank(basis_list, n_amb, tol=None):
    '''Dimension of the sum of subspaces given by column bases.'''
    blocks = [b for b in basis_list if b.shape[1] > 0]
    if not blocks:
        return 0
    return NumericalRank(np.hstack(blocks), tol)

# Matrix Functions
#--------------------------------------
def PSDInvSqrt(mat, tol=None):
    '''
    Inverse square root of a Hermitian positive definite matrix

    Parameters
    ----------
    mat : np.array
        Hermitian positive definite matrix.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    mat_isqrt : np.array
        Hermitian matrix R with R mat R = I.
    '''

    tol = _Tol(tol)
    eig_val, eig_vec = HermitianEig(mat, tol)
    if eig_val.size == 0:
        return np.zeros((0,0), dtype=complex)
    if eig_val[0] <= tol.eig_atol:
        raise ToleranceError('Error. Matrix is not positive definite (smallest eigenvalue %.3e)'%eig_val[0])

    mat_isqrt = (eig_vec * eig_val**-0.5) @ eig_vec.conj().T

    return 0.5*(mat_isqrt + mat_isqrt.conj().T)

def PSDSqrt(mat, tol=None):
    '''Square root of a Hermitian positive semi-definite matrix.'''
    tol = _Tol(tol)
    eig_val, eig_vec = HermitianEig(mat, tol)
    if eig_val.size == 0:
        return np.zeros((0,0), dtype=complex)
    if eig_val[0] < -tol.eig_atol:
        raise ToleranceError('Error. Matrix is not positive semi-definite (smallest eigenvalue %.3e)'%eig_val[0])

    mat_sqrt = (eig_vec * np.sqrt(np.maximum(eig_val, 0.))) @ eig_vec.conj().T

    return 0.5*(mat_sqrt + mat_sqrt.conj().T)
