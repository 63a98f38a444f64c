#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Fri Sep 18 11:17:45 2026

Dual frame multipliers M = D_{m phi} C_psi: assembly, adjoint, norm bound and
the kernel/range characterizations of injectivity, surjectivity and
bijectivity
"""

# Packages
# ---------------------------
#load libraries
import logging
#arithmetic libraries
import numpy as np
#user libraries
from Python_lib.numerics import pylib_linalg as pylib_la
from Python_lib.numerics.pylib_linalg import InputError
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.frames import pylib_symbols as pylib_sym

logger = logging.getLogger(__name__)

# Multiplier Types
#--------------------------------------
class MultiplierInstance:
    '''
    Multiplier of a symbol and a pair of finite frames

    Attributes
    ----------
    symbol : Symbol or np.array
        Symbol as given.
    sym_val : np.array
        The N symbol values used.
    phi, psi : FiniteFrame
        Left (synthesis) and right (analysis) frame.
    matrix : np.array
        d x d matrix of D_{m phi} C_psi.
    fact_res : real
        ||D_{m phi} C_psi - D_phi C_{m* psi}||.
    '''

    def __init__(self, symbol, sym_val, phi, psi, matrix, fact_res):
        self.symbol   = symbol
        self.sym_val  = sym_val
        self.phi      = phi
        self.psi      = psi
        self.matrix   = matrix
        self.fact_res = fact_res

    @property
    def dim(self):
        return self.phi.dim

    @property
    def n_vec(self):
        return self.phi.n_vec

    def __repr__(self):
        return 'MultiplierInstance(dim=%i, n_vec=%i)'%(self.dim, self.n_vec)

class InvertibilityReport:
    '''
    Injectivity, surjectivity and bijectivity of a multiplier with the subspace
    criteria they were decided by, witnesses and a direct-rank cross check.
    '''

    def __init__(self, injective, surjective, bijective, criteria, witnesses, witness_res, direct, dims):
        self.injective   = bool(injective)
        self.surjective  = bool(surjective)
        self.bijective   = bool(bijective)
        self.criteria    = criteria
        self.witnesses   = witnesses
        self.witness_res = witness_res
        self.direct      = direct
        self.dims        = dims

    @property
    def consistent(self):
        '''Every criterion agrees with the direct rank of the matrix.'''
        inj_dir, surj_dir = self.direct['injective'], self.direct['surjective']
        return all(v == inj_dir for k, v in self.criteria.items() if k.startswith('injective')) and \
               all(v == surj_dir for k, v in self.criteria.items() if k.startswith('surjective')) and \
               all(v == (inj_dir and surj_dir) for k, v in self.criteria.items() if k.startswith('bijective'))

    def to_dict(self):
        return {'injective': self.injective, 'surjective': self.surjective, 'bijective': self.bijective,
                'criteria': dict(self.criteria), 'direct': dict(self.direct), 'consistent': self.consistent,
                'dims': dict(self.dims), 'witnesses': {k: v for k, v in self.witnesses.items()},
                'witness_residuals': dict(self.witness_res)}

# Assembly
#--------------------------------------
def Assemble(symbol, phi, psi, tol=None):
    '''
    Assemble the multiplier matrix D_{m phi} C_psi

    Parameters
    ----------
    symbol : Symbol or array_like
        Symbol with at least N entries.
    phi : FiniteFrame
        Left frame.
    psi : FiniteFrame
        Right frame.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    MultiplierInstance
        Assembled multiplier.
    '''

    if phi.synth_mat.shape != psi.synth_mat.shape:
        raise InputError('Error. Frame shapes differ: %s vs %s'%(phi.synth_mat.shape, psi.synth_mat.shape))
    sym_val = pylib_frm.SymbolValues(symbol, phi.n_vec)

    #D_{m phi} C_psi and D_phi C_{m* psi}
    mat_1 = (phi.synth_mat * sym_val) @ psi.synth_mat.conj().T
    mat_2 = phi.synth_mat @ (psi.synth_mat * sym_val.conj()).conj().T
    fact_res = pylib_la.OperatorNorm(mat_1 - mat_2)

    return MultiplierInstance(symbol, sym_val, phi, psi, mat_1, fact_res)

def Adjoint(inst, tol=None):
    '''Adjoint multiplier M_{m*, psi, phi}.'''
    sym_conj = inst.symbol.conj() if isinstance(inst.symbol, pylib_sym.Symbol) else np.conj(inst.sym_val)
    return Assemble(sym_conj, inst.psi, inst.phi, tol)

def NormBound(inst):
    '''sqrt(B_phi B_psi) sup|m_n|.'''
    return float(np.sqrt(pylib_frm.BesselBound(inst.phi) * pylib_frm.BesselBound(inst.psi)) * np.abs(inst.sym_val).max())

def ParsevalSimilarity(inst, tol=None):
    '''
    Multiplier M_{m, rho, rho} of the canonical Parseval frame rho, similar to
    M_{m, phi, S^-1 phi} through S^1/2.

    Returns
    -------
    inst_rho : MultiplierInstance
        Multiplier of the canonical Parseval frame.
    sim_res : real
        ||S^-1/2 M S^1/2 - M_rho||.
    '''

    s_mat = pylib_frm.FrameOperator(inst.phi)
    rho = pylib_frm.CanonicalParseval(inst.phi, tol)
    inst_rho = Assemble(inst.sym_val, rho, rho, tol)
    sim_res = pylib_la.OperatorNorm(pylib_la.PSDInvSqrt(s_mat, tol) @ inst.matrix @ pylib_la.PSDSqrt(s_mat, tol) - inst_rho.matrix)

    return inst_rho, sim_res

# Invertibility
#--------------------------------------
def _Direct(ker_basis, ran_basis, n_coef):
    #sum is the whole coefficient space and dimensions add up
    return ker_basis.shape[1] + ran_basis.shape[1] == n_coef

def CheckInvertibility(symbol, phi, psi, tol=None):
    '''
    Decide injectivity, surjectivity and bijectivity of M_{m,phi,psi} from
    kernels of synthesis operators and ranges of analysis operators.

    Parameters
    ----------
    symbol : Symbol or array_like
        Symbol with at least N entries.
    phi : FiniteFrame
        Left frame.
    psi : FiniteFrame
        Right frame.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.

    Returns
    -------
    InvertibilityReport
        Decisions, criteria, witnesses and direct-rank cross check.
    '''

    tol = pylib_la._Tol(tol)
    inst = Assemble(symbol, phi, psi, tol)
    sym_val = inst.sym_val
    n_dim, n_coef = phi.dim, phi.n_vec

    #synthesis matrices of phi, psi, m phi, m* psi
    mphi      = pylib_frm.ScaledFrame(sym_val, phi)
    mcpsi     = pylib_frm.ScaledFrame(sym_val.conj(), psi)
    phi_mat   = phi.synth_mat
    psi_mat   = psi.synth_mat
    mphi_mat  = mphi.synth_mat
    mcpsi_mat = mcpsi.synth_mat

    #completeness
    rank = {k: pylib_la.NumericalRank(v, tol) for k, v in
            [('phi', phi_mat), ('psi', psi_mat), ('mphi', mphi_mat), ('mpsi', mcpsi_mat)]}
    cmpl = {k: r == n_dim for k, r in rank.items()}

    #kernels of synthesis operators, ranges of analysis operators
    ker_phi   = pylib_la.NullspaceBasis(phi_mat,   tol)
    ker_psi   = pylib_la.NullspaceBasis(psi_mat,   tol)
    ker_mphi  = pylib_la.NullspaceBasis(mphi_mat,  tol)
    ker_mcpsi = pylib_la.NullspaceBasis(mcpsi_mat, tol)
    ran_phi   = pylib_la.RangeBasis(phi_mat.conj().T,   tol)
    ran_psi   = pylib_la.RangeBasis(psi_mat.conj().T,   tol)
    ran_mphi  = pylib_la.RangeBasis(mphi_mat.conj().T,  tol)
    ran_mcpsi = pylib_la.RangeBasis(mcpsi_mat.conj().T, tol)

    inter_b = pylib_la.IntersectionBasis(ker_mphi, ran_psi, tol)
    inter_c = pylib_la.IntersectionBasis(ker_phi, ran_mcpsi, tol)
    sum_b   = pylib_la.SumRank([ker_phi, ran_mcpsi], n_coef, tol) == n_coef
    sum_c   = pylib_la.SumRank([ker_mphi, ran_psi],  n_coef, tol) == n_coef
    sum_d   = pylib_la.SumRank([ker_psi, ran_mphi],  n_coef, tol) == n_coef
    sum_e   = pylib_la.SumRank([ker_mcpsi, ran_phi], n_coef, tol) == n_coef

    criteria = {'injective_b':  cmpl['psi']  and inter_b.shape[1] == 0,
                'injective_c':  cmpl['mpsi'] and inter_c.shape[1] == 0,
                'surjective_b': cmpl['phi']  and sum_b,
                'surjective_c': cmpl['mphi'] and sum_c,
                'bijective_b':  cmpl['phi']  and sum_b and _Direct(ker_phi,   ran_mcpsi, n_coef),
                'bijective_c':  cmpl['mphi'] and sum_c and _Direct(ker_mphi,  ran_psi,   n_coef),
                'bijective_d':  cmpl['psi']  and sum_d and _Direct(ker_psi,   ran_mphi,  n_coef),
                'bijective_e':  cmpl['mpsi'] and sum_e and _Direct(ker_mcpsi, ran_phi,   n_coef)}
    injective  = criteria['injective_b']
    surjective = criteria['surjective_b']
    bijective  = criteria['bijective_b']

    #direct rank of the assembled matrix
    rank_m = pylib_la.NumericalRank(inst.matrix, tol)
    direct = {'rank': rank_m, 'injective': rank_m == n_dim, 'surjective': rank_m == n_dim}

    #witnesses
    witnesses, witness_res = {}, {}
    m_norm = max(pylib_la.OperatorNorm(inst.matrix), 1.)
    if not injective:
        if not cmpl['psi']:
            ker_vec = pylib_la.NullspaceBasis(psi_mat.conj().T, tol)[:,0]
        else:
            witnesses['intersection'] = pylib_la.NormalizePhase(inter_b[:,0])
            witness_res['intersection'] = pylib_la.OperatorNorm(mphi_mat @ inter_b[:,[0]])
            ker_vec = np.linalg.lstsq(psi_mat.conj().T, inter_b[:,0], rcond=None)[0]
        witnesses['kernel'] = pylib_la.NormalizePhase(ker_vec)
        witness_res['kernel'] = pylib_la.OperatorNorm(inst.matrix @ witnesses['kernel'][:,np.newaxis]) / m_norm
    if not surjective:
        trg_vec = pylib_la.NullspaceBasis(inst.matrix.conj().T, tol)
        if trg_vec.shape[1]:
            witnesses['non_attained'] = pylib_la.NormalizePhase(trg_vec[:,0])
            witness_res['non_attained'] = pylib_la.OperatorNorm(inst.matrix.conj().T @ trg_vec[:,[0]]) / m_norm

    dims = {'dim': n_dim, 'n_vec': n_coef, 'ker_phi': ker_phi.shape[1], 'ker_mphi': ker_mphi.shape[1],
            'ran_psi': ran_psi.shape[1], 'ran_mcpsi': ran_mcpsi.shape[1], 'intersection': inter_b.shape[1],
            'excess_phi': n_coef - rank['phi'], 'excess_mphi': pylib_frm.Excess(mphi, tol)}
    report = InvertibilityReport(injective, surjective, bijective, criteria, witnesses, witness_res, direct, dims)
    if not report.consistent:
        logger.warning('invertibility criteria disagree with direct rank: %s, %s', criteria, direct)
    for k, res in witness_res.items():
        if res > tol.residual_atol:
            logger.warning('%s witness residual %.3e above tolerance', k, res)

    return report
