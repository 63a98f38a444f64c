#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Wed Sep 16 10:25:33 2026

Bounded symbol sequences, their declared limit-point structure and the
splitting of a symbol into a piecewise-constant part and a null sequence
"""

# Packages
# ---------------------------
#load libraries
import logging
#arithmetic libraries
import numpy as np
#user libraries
from Python_lib.numerics import pylib_linalg as pylib_la
from Python_lib.numerics.pylib_linalg import InputError, ToleranceError

logger = logging.getLogger(__name__)

#prefix length used for generator-only symbols when no size is given
DEFAULT_PREFIX = 1024

# Index Selectors and Majorants
#--------------------------------------
class IndexSelector:
    '''
    Membership rule of an index class.

    kind 'all': every index; kind 'modulo': n % modulus == residue;
    kind 'list': explicit (finite) 0-based indices.
    '''

    def __init__(self, kind='all', modulus=None, residue=None, indices=None):
        if kind == 'all':
            pass
        elif kind == 'modulo':
            if modulus is None or residue is None or int(modulus) < 1 or not 0 <= int(residue) < int(modulus):
                raise InputError('Error. Modulo selector needs modulus >= 1 and 0 <= residue < modulus')
            modulus, residue = int(modulus), int(residue)
        elif kind == 'list':
            if indices is None:
                raise InputError('Error. List selector needs indices')
            indices = np.unique(np.asarray(indices, dtype=int))
        else:
            raise InputError('Error. Unknown index selector kind %r'%kind)
        self.kind    = kind
        self.modulus = modulus
        self.residue = residue
        self.indices = indices

    def __call__(self, n_idx):
        n_idx = np.asarray(n_idx, dtype=int)
        if self.kind == 'all':
            return np.ones(n_idx.shape, dtype=bool)
        elif self.kind == 'modulo':
            return n_idx % self.modulus == self.residue
        return np.isin(n_idx, self.indices)

    @property
    def descriptor(self):
        if self.kind == 'modulo':
            return {'kind': 'modulo', 'modulus': self.modulus, 'residue': self.residue}
        elif self.kind == 'list':
            return {'kind': 'list', 'indices': [int(n) for n in self.indices]}
        return {'kind': 'all'}

class Majorant:
    '''
    Non-increasing bound of |m_n - l| on an index class.

    kind 'zero': entries equal the limit; kind 'power': const/(n+offset)^power;
    kind 'custom': user function of the 0-based index (not serializable).
    '''

    def __init__(self, kind='zero', const=None, power=None, offset=None, func=None, label=None):
        if kind == 'power':
            if const is None or power is None or offset is None or const < 0 or power <= 0 or offset <= 0:
                raise InputError('Error. Power majorant needs const >= 0, power > 0, offset > 0')
            const, power, offset = float(const), float(power), float(offset)
        elif kind == 'custom':
            if func is None:
                raise InputError('Error. Custom majorant needs a function')
        elif kind != 'zero':
            raise InputError('Error. Unknown majorant kind %r'%kind)
        self.kind   = kind
        self.const  = const
        self.power  = power
        self.offset = offset
        self.func   = func
        self.label  = label

    def __call__(self, n_idx):
        n_idx = np.asarray(n_idx, dtype=float)
        if self.kind == 'zero':
            return np.zeros(n_idx.shape)
        elif self.kind == 'power':
            return self.const / (n_idx + self.offset)**self.power
        return np.asarray(self.func(n_idx.astype(int)), dtype=float)

    @property
    def exact(self):
        return self.kind == 'zero'

    @property
    def descriptor(self):
        if self.kind == 'power':
            return {'kind': 'power', 'const': self.const, 'power': self.power, 'offset': self.offset}
        elif self.kind == 'custom':
            return {'kind': 'custom', 'label': self.label}
        return {'kind': 'zero'}

# Limit Structure
#--------------------------------------
class LimitClass:
    '''Index class I_k, its limit l_k and the majorant of |m_n - l_k|.'''

    def __init__(self, limit, selector, majorant=None):
        self.limit    = complex(limit)
        self.selector = selector
        self.majorant = Majorant('zero') if majorant is None else majorant

    def __repr__(self):
        return 'LimitClass(limit=%r, selector=%r)'%(self.limit, self.selector.descriptor)

class LimitStructure:
    '''
    Partition of the indices into classes with declared limits.

    Parameters
    ----------
    classes : list of LimitClass
        Disjoint index classes covering every index.
    '''

    def __init__(self, classes):
        if len(classes) == 0:
            raise InputError('Error. Limit structure needs at least one class')
        self.classes = list(classes)

    @property
    def limits(self):
        return np.array([c.limit for c in self.classes])

    def class_of(self, n_idx):
        '''Class index of every index, validating the partition.'''
        n_idx = np.asarray(n_idx, dtype=int)
        member = np.array([c.selector(n_idx) for c in self.classes]).reshape(len(self.classes), -1)
        n_memb = member.sum(axis=0)
        if np.any(n_memb != 1):
            n_bad = n_idx[np.flatnonzero(n_memb != 1)[0]]
            raise InputError('Error. Limit classes do not partition the indices (index %i in %i classes)'%(n_bad, n_memb[n_memb != 1][0]))
        return np.argmax(member, axis=0)

    def limit_of(self, n_idx):
        return self.limits[self.class_of(n_idx)]

    def majorant(self, n_idx):
        n_idx = np.asarray(n_idx, dtype=int)
        i_cls = self.class_of(n_idx)
        maj = np.zeros(len(n_idx))
        for k, c in enumerate(self.classes):
            if np.any(i_cls == k):
                maj[i_cls == k] = c.majorant(n_idx[i_cls == k])
        return maj

    def tail_radius(self, k_trunc):
        '''Bound of |m_n - l(n)| for all n >= k_trunc.'''
        return max(float(c.majorant(np.array([k_trunc]))[0]) for c in self.classes)

    def conj(self):
        return LimitStructure([LimitClass(np.conj(c.limit), c.selector, c.majorant) for c in self.classes])

    def shift(self, lam):
        return LimitStructure([LimitClass(c.limit - lam, c.selector, c.majorant) for c in self.classes])

# Symbol
#--------------------------------------
class Symbol:
    '''
    Bounded complex sequence m = {m_n}

    Parameters
    ----------
    entries : array_like, optional
        Stored prefix (the whole sequence for finite symbols).
    generator : callable, optional
        0-based index array -> entries, for arbitrary prefixes.
    structure : LimitStructure, optional
        Declared limit-point structure.
    name : string, optional
        Label used in reports.
    '''

    def __init__(self, entries=None, generator=None, structure=None, name=None):

        entries = np.zeros(0, dtype=complex) if entries is None else np.asarray(entries, dtype=complex).ravel().copy()
        if len(entries) == 0 and generator is None:
            raise InputError('Error. Empty symbol')
        if not np.all(np.isfinite(entries)):
            raise InputError('Error. Symbol contains non-finite entries')
        entries.flags.writeable = False
        self.entries   = entries
        self.generator = generator
        self.structure = structure
        self.name      = name
        if structure is not None:
            self.check_structure()

    @property
    def is_finite(self):
        return self.generator is None

    def __len__(self):
        return len(self.entries)

    def prefix(self, size):
        '''First size entries.'''
        size = int(size)
        if size <= len(self.entries):
            return self.entries[:size].copy()
        if self.generator is None:
            raise InputError('Error. Symbol has %i entries, %i needed'%(len(self.entries), size))
        sym_val = np.asarray(self.generator(np.arange(size)), dtype=complex)
        if not np.all(np.isfinite(sym_val)):
            raise InputError('Error. Symbol generator produced non-finite entries')
        return sym_val

    def default_size(self, size=None):
        if size is not None:
            return int(size)
        return len(self.entries) if len(self.entries) else DEFAULT_PREFIX

    def check_structure(self, size=None, slack=1e-12):
        '''Check declared majorants against a prefix.'''
        size = min(self.default_size(size), 4096)
        n_idx = np.arange(size)
        sym_val = self.prefix(size)
        dev = np.abs(sym_val - self.structure.limit_of(n_idx))
        maj = self.structure.majorant(n_idx)
        if np.any(dev > maj + slack*(1 + np.abs(sym_val))):
            n_bad = np.flatnonzero(dev > maj + slack*(1 + np.abs(sym_val)))[0]
            raise InputError('Error. Symbol entry %i violates its declared majorant (%.3e > %.3e)'%(n_bad, dev[n_bad], maj[n_bad]))

    def conj(self):
        gen = None if self.generator is None else (lambda n, g=self.generator: np.conj(g(n)))
        struct = None if self.structure is None else self.structure.conj()
        return Symbol(np.conj(self.entries), gen, struct, name=None if self.name is None else self.name + '_conj')

    def shift(self, lam):
        '''Symbol m - lam.'''
        gen = None if self.generator is None else (lambda n, g=self.generator: g(n) - lam)
        struct = None if self.structure is None else self.structure.shift(lam)
        return Symbol(self.entries - lam, gen, struct, name=self.name)

    def sup_norm(self, size=None):
        '''Sup over a prefix and the declared limits.'''
        sup_val = np.abs(self.prefix(self.default_size(size))).max()
        if self.structure is not None:
            sup_val = max(sup_val, np.abs(self.structure.limits).max())
        return float(sup_val)

    def is_real(self, atol, size=None):
        return bool(np.all(np.abs(self.prefix(self.default_size(size)).imag) <= atol))

    def __repr__(self):
        return 'Symbol(n_entries=%i, generator=%s, structure=%s%s)'%(len(self.entries), self.generator is not None,
                                                                    self.structure is not None,
                                                                    '' if self.name is None else ', name=%r'%self.name)

def PeriodicSymbol(values, name=None):
    '''Periodic symbol with one exact limit class per residue.'''
    values = np.asarray(values, dtype=complex).ravel()
    if len(values) == 0:
        raise InputError('Error. Empty symbol')
    n_per = len(values)
    struct = LimitStructure([LimitClass(v, IndexSelector('modulo', modulus=n_per, residue=r)) for r, v in enumerate(values)])

    return Symbol(generator=lambda n: values[np.asarray(n) % n_per], structure=struct, name=name)

def ConstantSymbol(const, name=None):
    return PeriodicSymbol([const], name=name)

# Symbol Operations
#--------------------------------------
def LimitPoints(symbol, tol=None, size=None):
    '''
    Limit points of a symbol

    Declared limits when a structure is present; otherwise a single-linkage
    cluster estimate over the tail half of a prefix of length >= 64.

    Parameters
    ----------
    symbol : Symbol
        Symbol.
    tol : TolerancePolicy, optional
        Tolerance policy. The default is DEFAULT_TOL.
    size : int, optional
        Prefix length for the estimate.

    Returns
    -------
    limits : np.array
        Limit points sorted by (real, imag).
    '''

    tol = pylib_la._Tol(tol)
    if symbol.structure is not None:
        limits, _, _ = pylib_la.ClusterPoints(symbol.structure.limits, tol.eig_atol)
        return limits

    n_pref = symbol.default_size(size)
    if n_pref < 64:
        raise InputError('Error. Limit-point estimation needs a prefix of length >= 64, got %i'%n_pref)
    logger.warning('limit points estimated from a prefix of length %i (heuristic)', n_pref)
    tail = symbol.prefix(n_pref)[n_pref//2:]
    limits, _, _ = pylib_la.ClusterPoints(tail, tol.cluster_eps)

    return limits

def CompactSplit(symbol):
    '''
    Split m = m' + m'' with m' piecewise constant at the declared limits and
    m'' a null sequence.

    Returns
    -------
    sym_p : Symbol
        m'_n = l_k for n in I_k.
    sym_pp : Symbol
        m''_n = m_n - m'_n.
    '''

    struct = symbol.structure
    if struct is None:
        raise InputError('Error. Compact split needs a declared limit structure')

    n_ent = np.arange(len(symbol.entries))
    ent_p  = struct.limit_of(n_ent) if len(n_ent) else None
    ent_pp = symbol.entries - ent_p if len(n_ent) else None
    gen_p  = gen_pp = None
    if symbol.generator is not None:
        gen_p  = lambda n: struct.limit_of(n)
        gen_pp = lambda n: symbol.generator(n) - struct.limit_of(n)

    struct_p  = LimitStructure([LimitClass(c.limit, c.selector) for c in struct.classes])
    struct_pp = LimitStructure([LimitClass(0., IndexSelector('all'),
                                           Majorant('custom', func=struct.majorant, label='class majorants'))])

    sym_p  = Symbol(ent_p,  gen_p,  struct_p,  name=None if symbol.name is None else symbol.name + '_p')
    sym_pp = Symbol(ent_pp, gen_pp, struct_pp, name=None if symbol.name is None else symbol.name + '_pp')

    return sym_p, sym_pp

def IsCompactSymbol(symbol, tol=None):
    '''Every declared limit is zero.'''
    tol = pylib_la._Tol(tol)
    if symbol.structure is None:
        raise InputError('Error. Compactness test needs a declared limit structure')
    return bool(np.all(np.abs(symbol.structure.limits) <= tol.eig_atol))

def DistanceTo(symbol, lam, size=None):
    '''
    Distance of lam to the symbol: prefix minimum combined with the distance to
    the declared limits.
    '''

    sym_val = symbol.prefix(symbol.default_size(size))
    dist = float(np.abs(sym_val - lam).min())
    if symbol.structure is not None:
        dist = min(dist, float(np.abs(symbol.structure.limits - lam).min()))

    return dist

def DistanceLowerBound(symbol, lam, size=None):
    '''
    Certified lower bound of inf_n |m_n - lam|.

    Finite symbols are exact; generator symbols need a declared structure, the
    tail n >= size is bounded through the class majorants.
    '''

    if symbol.is_finite:
        return float(np.abs(symbol.entries - lam).min())
    if symbol.structure is None:
        raise ToleranceError('Error. Certified symbol distance needs a declared limit structure')

    n_pref  = symbol.default_size(size)
    d_pref  = float(np.abs(symbol.prefix(n_pref) - lam).min())
    d_tail  = min(abs(c.limit - lam) - float(c.majorant(np.array([n_pref]))[0]) for c in symbol.structure.classes)

    return max(0., min(d_pref, d_tail))

def SymbolHits(symbol, lam, tol=None, size=None):
    '''
    Indices with |m_n - lam| <= eig_atol

    Returns
    -------
    idx_hit : np.array
        Prefix indices (0-based).
    infinitely_often : bool
        A declared exact class with infinitely many indices has limit lam.
    '''

    tol = pylib_la._Tol(tol)
    sym_val = symbol.prefix(symbol.default_size(size))
    idx_hit = np.flatnonzero(np.abs(sym_val - lam) <= tol.eig_atol)
    inf_often = False
    if symbol.structure is not None and not symbol.is_finite:
        inf_often = any(c.majorant.exact and c.selector.kind != 'list' and abs(c.limit - lam) <= tol.eig_atol
                        for c in symbol.structure.classes)

    return idx_hit, inf_often

# Spectral Points
#--------------------------------------
class SpectralPoint:
    '''
    Labeled point of a spectrum

    Parameters
    ----------
    value : complex
        Location.
    label : string
        One of limit_point, eigenvalue, continuous_candidate, unclassified.
    multiplicity : int, optional
        Multiplicity, None when unknown, np.inf for an infinite-dimensional
        eigenspace.
    provenance : string, optional
        Rule or solver that produced the label.
    part : string, optional
        For limit points: 'point' (eigenvalue) or 'point_or_continuous'.
    '''

    labels = ('limit_point', 'eigenvalue', 'continuous_candidate', 'unclassified')

    def __init__(self, value, label, multiplicity=None, provenance='', part=None):
        if label not in self.labels:
            raise InputError('Error. Unknown spectral label %r'%label)
        if label == 'eigenvalue' and (multiplicity is None or multiplicity < 1):
            raise InputError('Error. Eigenvalue points need multiplicity >= 1')
        self.value        = complex(value)
        self.label        = label
        self.multiplicity = None if multiplicity is None else (np.inf if np.isinf(multiplicity) else int(multiplicity))
        self.provenance   = provenance
        self.part         = part

    def to_dict(self):
        return {'value': self.value, 'label': self.label, 'multiplicity': self.multiplicity,
                'provenance': self.provenance, 'part': self.part}

    def __repr__(self):
        return 'SpectralPoint(%r, %r, multiplicity=%r)'%(self.value, self.label, self.multiplicity)
