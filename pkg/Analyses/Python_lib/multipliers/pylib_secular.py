#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Mon Sep 21 16:48:02 2026

Secular determinant of a finite-excess multiplier: kernel sequences
u_i = d_i/(m - lambda), the q x q matrix A_lambda = (<u_i, v_j>) with certified
truncation and rounding bounds, and certified root counting by the argument
principle on rectangles and disks
"""

# Packages
# ---------------------------
#load libraries
import logging
#arithmetic libraries
import numpy as np
import pandas as pd
#user libraries
from Python_lib.numerics import pylib_linalg as pylib_la
from Python_lib.numerics.pylib_linalg import InputError, ToleranceError, BudgetError
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.frames import pylib_symbols as pylib_sym

logger = logging.getLogger(__name__)

#truncation of structured series
K_INIT = 2**10
K_CAP  = 2**20
#candidate cut fractions of the box subdivision
SPLIT_FRAC = (0.5123, 0.4871, 0.5377, 0.4619, 0.5631, 0.4367, 0.5889, 0.4111, 0.6143, 0.3857)
#cuts tried per direction, samples per cut
N_CUT_TRY = 3
N_CUT_PTS = 33
#largest bordered system N + q evaluated directly
BORDER_MAX = 64

_EPS = np.finfo(float).eps

# Secular Data
#--------------------------------------
class SecularData:
    '''
    Kernel sequences of a frame pair and the symbol that define A_lambda

    Parameters
    ----------
    symbol : Symbol
        Symbol m.
    n_exc : int
        Excess q >= 1.
    kernel_rule : callable
        0-based index array -> q x len array, left kernel sequences d_i.
    dual_kernel_rule : callable
        0-based index array -> q x len array, spanning set v_j of N(D_psi).
    tail_rule, dual_tail_rule : callable, optional
        K -> bound of max_i sum_{n >= K} |d_i^n|^2 (resp. v_j). Not needed for finite data.
    n_total : int, optional
        Number of indices of finite data, None for infinite data.
    op_norm : real, optional
        Operator norm (or bound) of the multiplier, used for default regions.
    '''

    def __init__(self, symbol, n_exc, kernel_rule, dual_kernel_rule, tail_rule=None, dual_tail_rule=None,
                 n_total=None, op_norm=None, name=None):

        if int(n_exc) != n_exc or n_exc < 1:
            raise InputError('Error. Secular data needs excess q >= 1, got %r'%n_exc)
        if n_total is None and (tail_rule is None or dual_tail_rule is None or symbol.structure is None):
            raise InputError('Error. Infinite secular data needs tail rules and a declared symbol structure')
        self.symbol           = symbol
        self.n_exc            = int(n_exc)
        self.kernel_rule      = kernel_rule
        self.dual_kernel_rule = dual_kernel_rule
        self.tail_rule        = tail_rule
        self.dual_tail_rule   = dual_tail_rule
        self.n_total          = n_total
        self.op_norm          = op_norm
        self.name             = name

    @property
    def is_finite(self):
        return self.n_total is not None

    def kernels(self, n_idx):
        n_idx = np.asarray(n_idx, dtype=int)
        d_seq = np.asarray(self.kernel_rule(n_idx), dtype=complex).reshape(self.n_exc, len(n_idx))
        v_seq = np.asarray(self.dual_kernel_rule(n_idx), dtype=complex).reshape(self.n_exc, len(n_idx))
        return d_seq, v_seq

    def tail(self, k_trunc):
        '''Bounds of the squared kernel tails beyond the first k_trunc indices.'''
        if self.is_finite and k_trunc >= self.n_total:
            return 0., 0.
        if self.tail_rule is None:
            raise ToleranceError('Error. Tail bound unavailable at truncation %i'%k_trunc)
        return float(self.tail_rule(k_trunc)), float(self.dual_tail_rule(k_trunc))

    def __repr__(self):
        return 'SecularData(n_exc=%i, n_total=%s)'%(self.n_exc, self.n_total)

def SecularDataFromFrames(symbol, phi, psi, tol=None, idx_exc=None, idx_exc_dual=None):
    '''
    Secular data of a finite instance: d_i from the kernel basis of phi, v_j
    from the kernel basis of psi.
    '''

    sym_val = pylib_frm.SymbolValues(symbol, phi.n_vec)
    kb_phi  = pylib_frm.ComputeKernelBasis(phi, idx_exc, tol)
    kb_psi  = pylib_frm.ComputeKernelBasis(psi, idx_exc_dual, tol)
    if kb_phi.n_exc != kb_psi.n_exc:
        raise InputError('Error. Frames have different excess (%i, %i)'%(kb_phi.n_exc, kb_psi.n_exc))
    if kb_phi.n_exc == 0:
        raise InputError('Error. Secular determinant is undefined for excess 0 (Riesz basis)')

    op_norm = pylib_la.OperatorNorm((phi.synth_mat * sym_val) @ psi.synth_mat.conj().T)

    return SecularData(pylib_sym.Symbol(sym_val), kb_phi.n_exc,
                       lambda n: kb_phi.seqs[:,n], lambda n: kb_psi.seqs[:,n],
                       n_total=phi.n_vec, op_norm=op_norm)

def SecularDataFromStructured(phi_struct, psi_struct, symbol):
    '''Secular data of a structured pair with closed-form kernel rules.'''
    if phi_struct.n_exc != psi_struct.n_exc:
        raise InputError('Error. Structured frames have different excess (%i, %i)'%(phi_struct.n_exc, psi_struct.n_exc))
    if symbol.structure is None or symbol.generator is None:
        raise InputError('Error. Structured secular data needs a symbol generator and a declared structure')

    return SecularData(symbol, phi_struct.n_exc, phi_struct.kernel, psi_struct.kernel,
                       phi_struct.kernel_tail, psi_struct.kernel_tail, name=phi_struct.name)

# Regions and Certificates
#--------------------------------------
class RectangleRegion:
    '''Open rectangle (x0, x1) x (y0, y1), boundary traversed counterclockwise.'''

    kind = 'rectangle'

    def __init__(self, x0, x1, y0, y1):
        if not (x0 < x1 and y0 < y1):
            raise InputError('Error. Rectangle needs x0 < x1 and y0 < y1')
        self.x0, self.x1, self.y0, self.y1 = float(x0), float(x1), float(y0), float(y1)

    @property
    def size(self):
        return max(self.x1 - self.x0, self.y1 - self.y0)

    @property
    def center(self):
        return complex(0.5*(self.x0 + self.x1), 0.5*(self.y0 + self.y1))

    @property
    def scale(self):
        return max(abs(self.x0), abs(self.x1), abs(self.y0), abs(self.y1))

    def path(self, t):
        vert = np.array([complex(self.x0, self.y0), complex(self.x1, self.y0),
                         complex(self.x1, self.y1), complex(self.x0, self.y1), complex(self.x0, self.y0)])
        s = 4.*np.asarray(t, dtype=float)
        k = np.clip(np.floor(s).astype(int), 0, 3)
        return vert[k] + (s - k)*(vert[k+1] - vert[k])

    def contains(self, z):
        z = np.asarray(z)
        return (z.real > self.x0) & (z.real < self.x1) & (z.imag > self.y0) & (z.imag < self.y1)

    def boundary_distance(self, z):
        z = np.asarray(z, dtype=complex)
        dx = np.maximum.reduce([self.x0 - z.real, np.zeros(z.shape), z.real - self.x1])
        dy = np.maximum.reduce([self.y0 - z.imag, np.zeros(z.shape), z.imag - self.y1])
        d_out = np.hypot(dx, dy)
        d_in  = np.minimum.reduce([z.real - self.x0, self.x1 - z.real, z.imag - self.y0, self.y1 - z.imag])
        return np.where(self.contains(z), d_in, d_out)

    def split(self, fx, fy):
        xm = self.x0 + fx*(self.x1 - self.x0)
        ym = self.y0 + fy*(self.y1 - self.y0)
        return [RectangleRegion(self.x0, xm, self.y0, ym), RectangleRegion(xm, self.x1, self.y0, ym),
                RectangleRegion(self.x0, xm, ym, self.y1), RectangleRegion(xm, self.x1, ym, self.y1)]

    def split_x(self, fx):
        xm = self.x0 + fx*(self.x1 - self.x0)
        return [RectangleRegion(self.x0, xm, self.y0, self.y1), RectangleRegion(xm, self.x1, self.y0, self.y1)]

    def split_y(self, fy):
        ym = self.y0 + fy*(self.y1 - self.y0)
        return [RectangleRegion(self.x0, self.x1, self.y0, ym), RectangleRegion(self.x0, self.x1, ym, self.y1)]

    def inflate(self, frac):
        dx, dy = frac*(self.x1 - self.x0), frac*(self.y1 - self.y0)
        return RectangleRegion(self.x0 - dx, self.x1 + dx, self.y0 - dy, self.y1 + dy)

    def to_dict(self):
        return {'kind': 'rectangle', 'bounds': [self.x0, self.x1, self.y0, self.y1]}

    def __repr__(self):
        return 'RectangleRegion(%r, %r, %r, %r)'%(self.x0, self.x1, self.y0, self.y1)

class DiskRegion:
    '''Open disk |z - center| < radius, boundary traversed counterclockwise.'''

    kind = 'disk'

    def __init__(self, center, radius):
        if not radius > 0:
            raise InputError('Error. Disk radius must be positive')
        self.center = complex(center)
        self.radius = float(radius)

    @property
    def size(self):
        return 2.*self.radius

    @property
    def scale(self):
        return abs(self.center) + self.radius

    def path(self, t):
        return self.center + self.radius*np.exp(2j*np.pi*np.asarray(t, dtype=float))

    def contains(self, z):
        return np.abs(np.asarray(z) - self.center) < self.radius

    def boundary_distance(self, z):
        return np.abs(np.abs(np.asarray(z) - self.center) - self.radius)

    def bounding_box(self, frac=1.):
        r = frac*self.radius
        return RectangleRegion(self.center.real - r, self.center.real + r, self.center.imag - r, self.center.imag + r)

    def to_dict(self):
        return {'kind': 'disk', 'center': self.center, 'radius': self.radius}

    def __repr__(self):
        return 'DiskRegion(%r, %r)'%(self.center, self.radius)

class ContourCertificate:
    '''
    Argument-principle count of the zeros of the pole-compensated secular
    determinant inside a region.

    Valid when the sampled phase was resolved and the minimum modulus on the
    boundary exceeds the evaluation error bound.
    '''

    def __init__(self, region, winding_count, min_modulus, tail_bound, sampled_ok=True):
        self.region        = region
        self.winding_count = int(winding_count)
        self.min_modulus   = float(min_modulus)
        self.tail_bound    = float(tail_bound)
        self.sampled_ok    = bool(sampled_ok)

    @property
    def is_valid(self):
        return self.sampled_ok and self.min_modulus > self.tail_bound

    def to_dict(self):
        return {'region': self.region.to_dict(), 'winding_count': self.winding_count,
                'min_modulus_on_boundary': self.min_modulus, 'evaluation_tail_bound': self.tail_bound,
                'valid': self.is_valid}

class SecularRootSearch:
    '''Roots of the secular determinant inside a region with their certificates.'''

    def __init__(self, roots, symbol_zeros, certificate, k_trunc, status):
        self.roots        = roots
        self.symbol_zeros = symbol_zeros
        self.certificate  = certificate
        self.k_trunc      = k_trunc
        self.status       = status

    @property
    def total_multiplicity(self):
        return sum(r[1] for r in self.roots) + sum(z[1] for z in self.symbol_zeros)

    def to_dict(self):
        return {'roots': [{'value': r, 'multiplicity': n, 'certificate': c.to_dict()} for r, n, c in self.roots],
                'symbol_point_zeros': [{'value': r, 'multiplicity': n} for r, n, _ in self.symbol_zeros],
                'certificate': None if self.certificate is None else self.certificate.to_dict(),
                'k_trunc': self.k_trunc, 'status': self.status}

# Series Evaluation
#--------------------------------------
class _SecularEvaluator:
    '''
    A_lambda at fixed truncation, vectorized over lambda, with entrywise error
    bounds.

    Finite data with N + q <= BORDER_MAX also evaluates the pole-compensated
    determinant through the bordered matrix B = [[diag(m - lambda), V^*], [D, 0]],
    det B = (-1)^q prod_n (m_n - lambda) det A_lambda, which has no poles; the
    value with the smaller error bound is used.
    '''

    def __init__(self, data, k_trunc, pole_idx=None):
        self.data    = data
        self.k_trunc = int(k_trunc)
        n_exc = data.n_exc
        d_seq, v_seq = data.kernels(np.arange(self.k_trunc))
        self.sym_val  = data.symbol.prefix(self.k_trunc)
        self.prod     = (d_seq[:,np.newaxis,:] * v_seq.conj()[np.newaxis,:,:]).reshape(n_exc*n_exc, self.k_trunc)
        self.prod_abs = np.abs(self.prod)
        self.tail_d, self.tail_v = data.tail(self.k_trunc)
        self.pole_val = np.zeros(0, dtype=complex) if pole_idx is None else self.sym_val[pole_idx]

        self.bordered = data.is_finite and self.k_trunc >= data.n_total and self.k_trunc + n_exc <= BORDER_MAX
        if self.bordered:
            i_out = np.ones(self.k_trunc, dtype=bool)
            if pole_idx is not None:
                i_out[pole_idx] = False
            self.d_seq, self.v_seq = d_seq, v_seq
            self.out_val = self.sym_val[i_out]

    def tail_distance(self, lams):
        '''Lower bound of |m_n - lambda| over the truncated tail.'''
        if self.data.is_finite and self.k_trunc >= self.data.n_total:
            return np.full(lams.shape, np.inf)
        k_arr = np.array([self.k_trunc])
        d_tail = np.full(lams.shape, np.inf)
        for c in self.data.symbol.structure.classes:
            d_tail = np.minimum(d_tail, np.abs(c.limit - lams) - float(c.majorant(k_arr)[0]))
        return d_tail

    def matrix(self, lams):
        lams = np.atleast_1d(np.asarray(lams, dtype=complex))
        n_lam, n_exc = len(lams), self.data.n_exc
        a_mat = np.zeros((n_lam, n_exc*n_exc), dtype=complex)
        a_err = np.zeros((n_lam, n_exc*n_exc))
        n_chunk = max(1, 2**22 // self.k_trunc)
        for s in range(0, n_lam, n_chunk):
            w = 1./(self.sym_val[np.newaxis,:] - lams[s:s+n_chunk,np.newaxis])
            a_mat[s:s+n_chunk] = w @ self.prod.T
            a_err[s:s+n_chunk] = 4.*self.k_trunc*_EPS * (np.abs(w) @ self.prod_abs.T)
        #truncated tail, Cauchy-Schwarz over n >= k_trunc
        if self.tail_d > 0 or self.tail_v > 0:
            d_tail = self.tail_distance(lams)
            with np.errstate(divide='ignore'):
                t_err = np.where(d_tail > 0, np.sqrt(self.tail_d*self.tail_v)/np.maximum(d_tail, 1e-300), np.inf)
            a_err += t_err[:,np.newaxis]
        return a_mat.reshape(n_lam, n_exc, n_exc), a_err.reshape(n_lam, n_exc, n_exc)

    def det(self, lams):
        a_mat, a_err = self.matrix(lams)
        return _DetWithError(a_mat, a_err)

    def bordered_det(self, lams):
        '''Pole-compensated determinant from the bordered matrix, with its error bound.'''
        lams = np.atleast_1d(np.asarray(lams, dtype=complex))
        if len(lams) > 256:
            res = [self.bordered_det(lams[s:s+256]) for s in range(0, len(lams), 256)]
            return np.concatenate([r[0] for r in res]), np.concatenate([r[1] for r in res])
        n_vec, n_exc = self.k_trunc, self.data.n_exc
        n_tot = n_vec + n_exc
        b_mat = np.zeros((len(lams), n_tot, n_tot), dtype=complex)
        i_diag = np.arange(n_vec)
        b_mat[:,i_diag,i_diag] = self.sym_val[np.newaxis,:] - lams[:,np.newaxis]
        b_mat[:,:n_vec,n_vec:] = self.v_seq.conj().T
        b_mat[:,n_vec:,:n_vec] = self.d_seq
        det_b = np.linalg.det(b_mat)

        #backward error of LU with partial pivoting, growth taken as n_tot
        gam = n_tot*_EPS/(1. - n_tot*_EPS)
        col_norm = np.linalg.norm(b_mat, axis=-2)
        col_err  = gam*n_tot*np.linalg.norm(b_mat, axis=(-2,-1))
        with np.errstate(invalid='ignore', over='ignore'):
            err_b = np.prod(col_norm + col_err[:,np.newaxis], axis=-1) - np.prod(col_norm, axis=-1)
            err_b = err_b + 4.*n_tot*_EPS*np.prod(col_norm, axis=-1)

        out = np.prod(self.out_val[np.newaxis,:] - lams[:,np.newaxis], axis=1)
        g = (-1)**n_exc * det_b/out
        g_err = err_b/np.abs(out) + 4.*n_vec*_EPS*np.abs(g)
        return g, np.where(np.isfinite(g_err), g_err, np.inf)

    def __call__(self, lams):
        '''Pole-compensated determinant det(A_lambda) prod_poles (m_n - lambda).'''
        lams = np.atleast_1d(np.asarray(lams, dtype=complex))
        with np.errstate(divide='ignore', invalid='ignore'):
            det, det_err = self.det(lams)
            fac = np.prod(self.pole_val[np.newaxis,:] - lams[:,np.newaxis], axis=1)
            g, g_err = det*fac, det_err*np.abs(fac)
        if not self.bordered:
            return g, g_err
        g_b, err_b = self.bordered_det(lams)
        use_b = ~(g_err < err_b)
        return np.where(use_b, g_b, g), np.where(use_b, err_b, g_err)

def _DetWithError(a_mat, a_err):
    #Hadamard-type bound: det is multilinear in the columns
    n_exc = a_mat.shape[-1]
    det = np.linalg.det(a_mat)
    col_norm = np.linalg.norm(a_mat, axis=-2)
    col_err  = np.sqrt(np.sum(a_err**2, axis=-2))
    with np.errstate(invalid='ignore'):
        det_err = np.prod(col_norm + col_err, axis=-1) - np.prod(col_norm, axis=-1)
    det_err = det_err + 4.*n_exc*_EPS*np.prod(col_norm, axis=-1)
    return det, np.where(np.isnan(det_err), np.inf, det_err)

def _CheckDistance(data, lam, k_trunc, tol):
    size = data.n_total if data.is_finite else k_trunc
    dist = pylib_sym.DistanceLowerBound(data.symbol, lam, size)
    if dist <= tol.eig_atol:
        raise ToleranceError('Error. lambda = %r is within %.1e of the symbol'%(complex(lam), tol.eig_atol))
    return dist

# Secular Operations
#--------------------------------------
def SecularKernels(data, lam, k_trunc=None, tol=None):
    '''
    Sequences u_i^n = d_i^n/(m_n - lambda)

    Parameters
    ----------
    data : SecularData
        Secular data.
    lam : complex
        Spectral parameter, away from the symbol.
    k_trunc : int, optional
        Number of entries (finite data: all).
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    u_seq : np.array
        q x k_trunc array.
    tail_norm : real
        Bound of the l2 norm of every u_i beyond k_trunc.
    '''

    tol = pylib_la._Tol(tol)
    k_trunc = data.n_total if data.is_finite and k_trunc is None else (K_INIT if k_trunc is None else int(k_trunc))
    _CheckDistance(data, lam, k_trunc, tol)

    d_seq, _ = data.kernels(np.arange(k_trunc))
    u_seq = d_seq / (data.symbol.prefix(k_trunc) - lam)[np.newaxis,:]
    ev = _SecularEvaluator(data, k_trunc)
    d_tail = float(ev.tail_distance(np.array([complex(lam)]))[0])
    tail_norm = 0. if ev.tail_d == 0 else (np.sqrt(ev.tail_d)/d_tail if d_tail > 0 else np.inf)

    return u_seq, tail_norm

def SecularMatrix(data, lam, tol=None, k_trunc=None, k_cap=K_CAP):
    '''
    Matrix A_lambda = (<u_i, v_j>) with an entrywise error bound

    Finite data is summed exactly. Infinite data starts at k_trunc (default
    K_INIT) and doubles the truncation until the determinant error is below
    1e-2 |det|; reaching k_cap gives status 'inconclusive'.

    Returns
    -------
    a_mat : np.array
        q x q matrix.
    a_err : np.array
        Entrywise error bound.
    info : dict
        k_trunc, det, det_err and status.
    '''

    tol = pylib_la._Tol(tol)
    lam = complex(lam)
    if data.is_finite:
        _CheckDistance(data, lam, data.n_total, tol)
        a_mat, a_err = _SecularEvaluator(data, data.n_total).matrix([lam])
        det, det_err = _DetWithError(a_mat, a_err)
        return a_mat[0], a_err[0], {'k_trunc': data.n_total, 'det': det[0], 'det_err': float(det_err[0]), 'status': 'certified'}

    k_cur = K_INIT if k_trunc is None else int(k_trunc)
    while True:
        _CheckDistance(data, lam, k_cur, tol)
        a_mat, a_err = _SecularEvaluator(data, k_cur).matrix([lam])
        det, det_err = _DetWithError(a_mat, a_err)
        logger.debug('secular matrix at %r: K=%i |det|=%.3e err=%.3e', lam, k_cur, abs(det[0]), det_err[0])
        if det_err[0] < 1e-2*abs(det[0]):
            status = 'certified'
            break
        if 2*k_cur > k_cap:
            status = 'inconclusive'
            logger.warning('secular series at %r inconclusive at truncation %i', lam, k_cur)
            break
        k_cur *= 2

    return a_mat[0], a_err[0], {'k_trunc': k_cur, 'det': det[0], 'det_err': float(det_err[0]), 'status': status}

def SecularDeterminant(data, lam, tol=None, k_trunc=None, k_cap=K_CAP):
    '''det A_lambda with its error bound and evaluation info.'''
    _, _, info = SecularMatrix(data, lam, tol, k_trunc, k_cap)
    return info['det'], info['det_err'], info

def _PathWinding(func, path, n_init=64, max_level=30):
    #adaptive phase tracking along a closed path t in [0, 1]
    t = np.linspace(0., 1., n_init+1)
    g, g_err = func(path(t))
    sampled_ok = True
    for level in range(max_level+1):
        with np.errstate(divide='ignore', invalid='ignore'):
            dphi = np.angle(g[1:]/g[:-1])
        bad = ~np.isfinite(dphi) | (np.abs(dphi) > np.pi/4)
        if not np.any(bad):
            break
        if level == max_level:
            sampled_ok = False
            break
        t_mid = 0.5*(t[:-1][bad] + t[1:][bad])
        g_mid, e_mid = func(path(t_mid))
        t = np.concatenate([t, t_mid])
        i_sort = np.argsort(t, kind='stable')
        t, g, g_err = t[i_sort], np.concatenate([g, g_mid])[i_sort], np.concatenate([g_err, e_mid])[i_sort]

    wind = np.nansum(dphi)/(2.*np.pi)
    n_wind = int(np.rint(wind)) if np.isfinite(wind) else 0
    if not np.isfinite(wind) or abs(wind - n_wind) > 0.1:
        sampled_ok = False
    min_mod = float(np.nanmin(np.abs(g))) if np.any(np.isfinite(g)) else 0.

    return n_wind, min_mod, float(np.max(g_err)), sampled_ok

def _Certificate(ev, region):
    n_wind, min_mod, max_err, sampled_ok = _PathWinding(ev, region.path)
    return ContourCertificate(region, n_wind, min_mod, max_err, sampled_ok)

def _CheckRegion(data, region, tol, k_trunc):
    #boundary away from the symbol closure, no limit point inside
    sym_val = data.symbol.prefix(data.n_total if data.is_finite else k_trunc)
    pts = sym_val
    if data.symbol.structure is not None and not data.is_finite:
        limits = data.symbol.structure.limits
        if np.any(region.contains(limits)) or np.any(region.boundary_distance(limits) <= tol.eig_atol):
            raise ToleranceError('Error. Region contains or touches a limit point of the symbol')
        pts = np.concatenate([pts, limits])
    if np.min(region.boundary_distance(pts)) <= tol.eig_atol:
        raise ToleranceError('Error. Region boundary within %.1e of the symbol closure'%tol.eig_atol)

def _RegionEvaluator(data, region, tol, k_trunc=None, k_min=None, k_cap=K_CAP):
    #evaluator with poles inside the region compensated, and its boundary certificate
    if data.is_finite:
        _CheckRegion(data, region, tol, None)
        pole_idx = np.flatnonzero(region.contains(data.symbol.prefix(data.n_total)))
        ev = _SecularEvaluator(data, data.n_total, pole_idx)
        return ev, _Certificate(ev, region), 'certified'

    k_cur = int(k_trunc) if k_trunc is not None else max(K_INIT, 0 if k_min is None else int(k_min))
    ev, cert = None, None
    while True:
        _CheckRegion(data, region, tol, k_cur)
        tail_rad = data.symbol.structure.tail_radius(k_cur)
        tail_ok  = np.min(region.boundary_distance(data.symbol.structure.limits)) > tail_rad + tol.eig_atol
        if tail_ok:
            pole_idx = np.flatnonzero(region.contains(data.symbol.prefix(k_cur)))
            ev = _SecularEvaluator(data, k_cur, pole_idx)
            cert = _Certificate(ev, region)
            logger.debug('region %r: K=%i winding=%i min|g|=%.3e err=%.3e', region, k_cur,
                         cert.winding_count, cert.min_modulus, cert.tail_bound)
            if k_trunc is not None or (cert.sampled_ok and cert.tail_bound < 1e-2*cert.min_modulus):
                return ev, cert, 'certified'
        if 2*k_cur > k_cap:
            logger.warning('region %r inconclusive at truncation %i', region, k_cur)
            return ev, cert, 'inconclusive'
        k_cur *= 2

def DefaultRegion(data):
    '''Bounding box of the symbol values inflated by the operator norm.'''
    if not data.is_finite:
        raise InputError('Error. Infinite secular data needs an explicit region')
    sym_val = data.symbol.prefix(data.n_total)
    r_op = data.op_norm if data.op_norm is not None else float(np.abs(sym_val).max())
    x0, x1 = min(sym_val.real.min(), -r_op), max(sym_val.real.max(), r_op)
    y0, y1 = min(sym_val.imag.min(), -r_op), max(sym_val.imag.max(), r_op)
    pad = 0.05*max(1., x1 - x0, y1 - y0) + 0.1

    return RectangleRegion(x0 - 1.0131*pad, x1 + 0.9877*pad, y0 - 1.0173*pad, y1 + 0.9913*pad)

def _NewtonPolish(ev, box, scale, n_iter=50):
    h = min(1e-6*scale, 1e-2*box.size)
    z = box.center
    box_big = box.inflate(0.1)
    for _ in range(n_iter):
        g, _ = ev(np.array([z, z + h, z - h]))
        if g[0] == 0:
            return z
        deriv = (g[1] - g[2])/(2.*h)
        if deriv == 0 or not np.isfinite(deriv):
            return None
        step = g[0]/deriv
        z = z - step
        if not box_big.contains(z):
            return None
        if abs(step) <= 4.*_EPS*scale:
            break
    #a box of winding one holds exactly one root
    return complex(z) if box.contains(z) else None

def _CutMargin(ev, z0, z1):
    #min of |g| - error bound along a cut segment
    g, g_err = ev(z0 + np.linspace(0., 1., N_CUT_PTS)*(z1 - z0))
    with np.errstate(invalid='ignore'):
        margin = np.abs(g) - g_err
    return float(np.min(np.where(np.isfinite(margin), margin, -np.inf)))

def _RankedCuts(ev, box):
    #cut fractions ordered by decreasing margin
    x_cut = [(f, _CutMargin(ev, complex(box.x0 + f*(box.x1 - box.x0), box.y0),
                                complex(box.x0 + f*(box.x1 - box.x0), box.y1))) for f in SPLIT_FRAC]
    y_cut = [(f, _CutMargin(ev, complex(box.x0, box.y0 + f*(box.y1 - box.y0)),
                                complex(box.x1, box.y0 + f*(box.y1 - box.y0)))) for f in SPLIT_FRAC]
    x_cut.sort(key=lambda c: -c[1])
    y_cut.sort(key=lambda c: -c[1])
    return [c[0] for c in x_cut[:N_CUT_TRY]], [c[0] for c in y_cut[:N_CUT_TRY]]

def _CertifiedSplit(ev, box, n_wind):
    '''
    Children of a box with valid certificates whose windings add up to n_wind:
    four-way splits on the best-ranked cuts first, then two-way splits.
    '''

    fx_list, fy_list = _RankedCuts(ev, box)
    pairs = sorted([(i, j) for i in range(len(fx_list)) for j in range(len(fy_list))], key=lambda p: (p[0] + p[1], p))
    trials  = [box.split(fx_list[i], fy_list[j]) for i, j in pairs]
    trials += [box.split_x(fx) for fx in fx_list] + [box.split_y(fy) for fy in fy_list]
    for sub in trials:
        cert_sub = [_Certificate(ev, b) for b in sub]
        if all(c.is_valid for c in cert_sub) and sum(c.winding_count for c in cert_sub) == n_wind:
            return list(zip(sub, cert_sub))
    return None

def _SubdivideBox(ev, box, box_cert, scale, max_depth, newton_size, min_size):
    roots = []
    queue = [(box, box_cert, 0)]
    while queue:
        box, cert, depth = queue.pop(0)
        n_wind = cert.winding_count
        if n_wind <= 0:
            continue
        if n_wind == 1 and box.size <= newton_size*scale:
            z = _NewtonPolish(ev, box, scale)
            if z is not None:
                roots.append((z, 1, cert))
                continue
        if box.size <= min_size*scale:
            roots.append((box.center, n_wind, cert))
            continue
        if depth >= max_depth:
            raise BudgetError('Error. Subdivision depth %i exceeded'%max_depth)
        children = _CertifiedSplit(ev, box, n_wind)
        if children is None:
            raise BudgetError('Error. No certified subdivision of %r'%box)
        queue.extend((b, c, depth + 1) for b, c in children)

    return roots

def SecularRoots(data, region=None, tol=None, k_trunc=None, k_min=None, max_depth=60, newton_size=1e-3, min_size=1e-9):
    '''
    Zeros of det A_lambda inside a region

    The determinant is multiplied by prod (m_n - lambda) over the symbol values
    inside the region; zeros of this product at symbol values are returned
    separately. Roots are located by subdivision of rectangles with winding
    counts and polished by Newton's method.

    Parameters
    ----------
    data : SecularData
        Secular data.
    region : RectangleRegion or DiskRegion, optional
        Search region. The default is DefaultRegion (finite data only).
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.
    k_trunc : int, optional
        Fixed truncation of infinite data. The default is adaptive.
    k_min : int, optional
        Smallest truncation of the adaptive search.
    max_depth : int, optional
        Maximum subdivision depth.
    newton_size, min_size : real, optional
        Relative box sizes for Newton polishing and for cluster acceptance.

    Returns
    -------
    SecularRootSearch
        Roots (value, multiplicity, certificate), zeros at symbol values and the
        region certificate.
    '''

    tol = pylib_la._Tol(tol)
    if region is None:
        region = DefaultRegion(data)
    scale = max(1., region.scale)

    ev, cert, status = _RegionEvaluator(data, region, tol, k_trunc, k_min)
    if status == 'inconclusive':
        return SecularRootSearch([], [], cert, None if ev is None else ev.k_trunc, 'inconclusive')
    if not cert.is_valid:
        raise ToleranceError('Error. Region boundary passes too close to a zero of the secular determinant')

    roots = []
    if cert.winding_count > 0:
        if region.kind == 'disk':
            box, box_cert = None, None
            for frac in (1.0113, 1.0271, 1.0457, 1.0719):
                box = region.bounding_box(frac)
                box_cert = _Certificate(ev, box)
                if box_cert.is_valid:
                    break
            if not box_cert.is_valid:
                raise BudgetError('Error. No certified bounding box for %r'%region)
        else:
            box, box_cert = region, cert
        roots = [r for r in _SubdivideBox(ev, box, box_cert, scale, max_depth, newton_size, min_size)
                 if region.contains(r[0])]

    #zeros at symbol values
    sym_val = ev.sym_val
    sym_tol = 10.*tol.eig_atol*scale
    off_sym, at_sym = [], []
    for r in roots:
        (at_sym if np.min(np.abs(sym_val - r[0])) <= sym_tol else off_sym).append(r)
    off_sym.sort(key=lambda r: (r[0].real, r[0].imag))
    at_sym.sort(key=lambda r: (r[0].real, r[0].imag))

    search = SecularRootSearch(off_sym, at_sym, cert, ev.k_trunc, status)
    if search.total_multiplicity != cert.winding_count:
        logger.warning('root multiplicities (%i) differ from region winding count (%i)',
                       search.total_multiplicity, cert.winding_count)
        search.status = 'inconsistent'

    return search

def CertifyRootNear(data, lam, radius, tol=None, k_trunc=None):
    '''Winding count of the secular determinant on a small circle around lam.'''
    tol = pylib_la._Tol(tol)
    region = DiskRegion(lam, radius)
    _, cert, _ = _RegionEvaluator(data, region, tol, k_trunc)
    return cert

def SecularHeatGrid(data, re_vals, im_vals, region=None, tol=None, k_trunc=None):
    '''
    |det A_lambda| and its certified error on a grid

    Parameters
    ----------
    data : SecularData
        Secular data.
    re_vals, im_vals : np.array
        Grid coordinates.
    region : RectangleRegion or DiskRegion, optional
        Grid points outside the region are dropped.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.
    k_trunc : int, optional
        Truncation of infinite data. The default is K_INIT.

    Returns
    -------
    df_grid : pd.DataFrame
        Columns re, im, abs_det, error_bound, certified.
    '''

    tol = pylib_la._Tol(tol)
    cols = ['re', 'im', 'abs_det', 'error_bound', 'certified']
    re_g, im_g = np.meshgrid(np.asarray(re_vals, dtype=float), np.asarray(im_vals, dtype=float), indexing='ij')
    lams = (re_g + 1j*im_g).ravel()
    if region is not None:
        lams = lams[region.contains(lams)]
    if len(lams) == 0:
        return pd.DataFrame(columns=cols)

    k_trunc = data.n_total if data.is_finite else (K_INIT if k_trunc is None else int(k_trunc))
    ev = _SecularEvaluator(data, k_trunc)
    #symbol distance of every grid point
    sym_val = ev.sym_val
    dist = np.array([np.abs(sym_val - z).min() for z in lams])
    if not data.is_finite:
        dist = np.minimum(dist, ev.tail_distance(lams))
    i_ok = dist > tol.eig_atol

    abs_det = np.full(len(lams), np.nan)
    det_err = np.full(len(lams), np.inf)
    if np.any(i_ok):
        det, err = ev.det(lams[i_ok])
        abs_det[i_ok], det_err[i_ok] = np.abs(det), err

    df_grid = pd.DataFrame({'re': lams.real, 'im': lams.imag, 'abs_det': abs_det, 'error_bound': det_err})
    df_grid.loc[:,'certified'] = df_grid.abs_det > df_grid.error_bound

    return df_grid[cols]
