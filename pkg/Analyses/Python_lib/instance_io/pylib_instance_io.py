#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Tue Sep 29 10:26:14 2026

Instance files and run reports: versioned JSON schema for frame pairs, scenario
references, symbols and tolerance overrides; canonical JSON emission and
atomic file output
"""

# Packages
# ---------------------------
#load libraries
import os
import json
import pathlib
import logging
#arithmetic libraries
import numpy as np
import pandas as pd
#user libraries
from Python_lib.numerics import pylib_linalg as pylib_la
from Python_lib.numerics.pylib_linalg import InputError
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.frames import pylib_symbols as pylib_sym
from Python_lib.scenarios import pylib_scenarios as pylib_scen

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

# JSON Rendering
#--------------------------------------
def _JsonFloat(val):
    val = float(val)
    if np.isnan(val):
        return 'nan'
    elif np.isinf(val):
        return 'inf' if val > 0 else '-inf'
    return val

def JsonReady(obj):
    '''
    Convert numpy, pandas and complex values into JSON-ready python objects:
    complex as [re, im], non-finite floats as strings.
    '''

    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _JsonFloat(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [_JsonFloat(obj.real), _JsonFloat(obj.imag)]
    if isinstance(obj, dict):
        return {str(k): JsonReady(v) for k, v in obj.items()}
    if isinstance(obj, pd.DataFrame):
        return [JsonReady(r) for r in obj.to_dict(orient='records')]
    if isinstance(obj, np.ndarray):
        return [JsonReady(v) for v in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [JsonReady(v) for v in obj]
    if hasattr(obj, 'to_dict'):
        return JsonReady(obj.to_dict())
    raise InputError('Error. Cannot serialize object of type %s'%type(obj).__name__)

def DumpJSON(obj):
    '''Canonical JSON text: sorted keys, indent 1, trailing newline.'''
    return json.dumps(JsonReady(obj), sort_keys=True, indent=1, allow_nan=False) + '\n'

def WriteTextAtomic(path, text):
    '''Write to a temporary sibling and move it into place.'''
    path = pathlib.Path(path)
    tmp_path = path.with_name('.' + path.name + '.tmp')
    try:
        with open(tmp_path, 'w', encoding='utf-8', newline='\n') as fid:
            fid.write(text)
        os.replace(tmp_path, path)
    except OSError as err:
        raise InputError('Error. Cannot write %s: %s'%(path, err)) from err

def WriteCSVAtomic(df, path):
    '''DataFrame to CSV without index, written atomically.'''
    WriteTextAtomic(path, df.to_csv(index=False, lineterminator='\n'))

# Parsing Helpers
#--------------------------------------
def _ParseComplex(val, where):
    if isinstance(val, bool):
        raise InputError('Error. %s: expected a number or [re, im], got %r'%(where, val))
    if isinstance(val, (int, float)):
        return complex(val)
    if isinstance(val, list) and len(val) == 2 and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in val):
        return complex(val[0], val[1])
    raise InputError('Error. %s: expected a number or [re, im], got %r'%(where, val))

def _ParseFrame(block, where):
    if not isinstance(block, dict) or 'dim' not in block or 'vectors' not in block:
        raise InputError('Error. %s: frame block needs dim and vectors'%where)
    n_dim, vectors = block['dim'], block['vectors']
    if not isinstance(n_dim, int) or n_dim < 1:
        raise InputError('Error. %s: dim must be a positive integer'%where)
    if not isinstance(vectors, list) or len(vectors) == 0:
        raise InputError('Error. %s: vectors must be a non-empty list'%where)
    vec_list = []
    for n, vec in enumerate(vectors):
        if not isinstance(vec, list) or len(vec) != n_dim:
            raise InputError('Error. %s: vector %i must have %i entries'%(where, n, n_dim))
        vec_list.append([_ParseComplex(v, '%s vector %i'%(where, n)) for v in vec])

    return pylib_frm.FiniteFrame.from_vectors(vec_list, name=block.get('name'))

def _EmitFrame(frame):
    block = {'dim': frame.dim, 'vectors': [[complex(v) for v in frame.vector(n)] for n in range(frame.n_vec)]}
    if frame.name is not None:
        block['name'] = frame.name
    return block

def _ParseSelector(block):
    if not isinstance(block, dict):
        raise InputError('Error. Class selector must be an object')
    kind = block.get('kind', 'all')
    return pylib_sym.IndexSelector(kind, modulus=block.get('modulus'), residue=block.get('residue'), indices=block.get('indices'))

def _ParseMajorant(block):
    if block is None:
        return pylib_sym.Majorant('zero')
    if not isinstance(block, dict):
        raise InputError('Error. Class majorant must be an object')
    kind = block.get('kind', 'zero')
    if kind == 'custom':
        raise InputError('Error. Custom majorants cannot be read from instance files')
    return pylib_sym.Majorant(kind, const=block.get('const'), power=block.get('power'), offset=block.get('offset'))

def _ParseClass(block, i_cls):
    if not isinstance(block, dict) or 'limit' not in block:
        raise InputError('Error. Symbol class %i must be an object with a limit'%i_cls)
    try:
        return pylib_sym.LimitClass(_ParseComplex(block['limit'], 'class %i limit'%i_cls),
                                    _ParseSelector(block.get('selector', {})), _ParseMajorant(block.get('majorant')))
    except InputError:
        raise
    except (TypeError, ValueError) as err:
        raise InputError('Error. Symbol class %i: %s'%(i_cls, err)) from err

def _ParseSymbol(block):
    if not isinstance(block, dict) or not isinstance(block.get('entries'), list) or len(block['entries']) == 0:
        raise InputError('Error. Symbol block needs a non-empty entries list')
    entries = [_ParseComplex(v, 'symbol entry %i'%n) for n, v in enumerate(block['entries'])]
    struct = None
    if block.get('classes'):
        if not isinstance(block['classes'], list):
            raise InputError('Error. Symbol classes must be a list')
        struct = pylib_sym.LimitStructure([_ParseClass(c, i) for i, c in enumerate(block['classes'])])

    return pylib_sym.Symbol(entries, structure=struct, name=block.get('name'))

def _EmitSymbol(symbol):
    block = {'entries': [complex(v) for v in symbol.entries]}
    if symbol.structure is not None:
        block['classes'] = [{'limit': c.limit, 'selector': c.selector.descriptor, 'majorant': c.majorant.descriptor}
                            for c in symbol.structure.classes]
    if symbol.name is not None:
        block['name'] = symbol.name
    return block

# Instance Files
#--------------------------------------
class InstanceFile:
    '''
    Parsed instance file

    Attributes
    ----------
    phi, psi : FiniteFrame or None
        Explicit frame pair (psi defaults to the canonical dual of phi).
    scenario : dict or None
        Scenario reference: name, size, seed, params.
    symbol : Symbol or None
        Explicit symbol.
    tolerance : dict
        Tolerance overrides.
    '''

    def __init__(self, phi=None, psi=None, scenario=None, symbol=None, tolerance=None, schema_version=SCHEMA_VERSION):
        if (phi is None) == (scenario is None):
            raise InputError('Error. Instance needs exactly one of a frames block or a scenario block')
        if phi is not None and symbol is None:
            raise InputError('Error. Instance with explicit frames needs a symbol block')
        self.phi            = phi
        self.psi            = psi
        self.scenario       = scenario
        self.symbol         = symbol
        self.tolerance      = {} if tolerance is None else dict(tolerance)
        self.schema_version = schema_version

    def to_dict(self):
        inst_dict = {'schema_version': self.schema_version}
        if self.phi is not None:
            inst_dict['frames'] = {'phi': _EmitFrame(self.phi)}
            if self.psi is not None:
                inst_dict['frames']['psi'] = _EmitFrame(self.psi)
        if self.scenario is not None:
            inst_dict['scenario'] = dict(self.scenario)
        if self.symbol is not None:
            inst_dict['symbol'] = _EmitSymbol(self.symbol)
        if self.tolerance:
            inst_dict['tolerance'] = dict(self.tolerance)
        return inst_dict

def ParseInstance(text):
    '''
    Parse instance-file text

    Raises
    ------
    InputError
        Malformed JSON (with line and column), unknown schema version, invalid
        blocks.
    '''

    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError('Error. Malformed JSON at line %i column %i: %s'%(err.lineno, err.colno, err.msg)) from err
    if not isinstance(raw, dict):
        raise InputError('Error. Instance file must hold a JSON object')
    if raw.get('schema_version') != SCHEMA_VERSION:
        raise InputError('Error. Unsupported schema_version %r (expected %i)'%(raw.get('schema_version'), SCHEMA_VERSION))
    unknown = set(raw) - {'schema_version', 'frames', 'scenario', 'symbol', 'tolerance'}
    if unknown:
        raise InputError('Error. Unknown instance blocks %s'%sorted(unknown))

    phi = psi = None
    if 'frames' in raw:
        frames = raw['frames']
        if not isinstance(frames, dict) or 'phi' not in frames:
            raise InputError('Error. Frames block needs phi')
        phi = _ParseFrame(frames['phi'], 'phi')
        psi = _ParseFrame(frames['psi'], 'psi') if 'psi' in frames else None
    scenario = raw.get('scenario')
    if scenario is not None:
        if not isinstance(scenario, dict) or 'name' not in scenario:
            raise InputError('Error. Scenario block needs a name')
        params = scenario.get('params', {})
        if not isinstance(params, dict):
            raise InputError('Error. Scenario params must be an object')
        size, seed = scenario.get('size'), scenario.get('seed', 0)
        if not (size is None or isinstance(size, int)) or not isinstance(seed, int):
            raise InputError('Error. Scenario size and seed must be integers')
        scenario = {'name': scenario['name'], 'size': size, 'seed': seed, 'params': dict(params)}
    symbol = _ParseSymbol(raw['symbol']) if 'symbol' in raw else None
    tolerance = raw.get('tolerance', {})
    if not isinstance(tolerance, dict):
        raise InputError('Error. Tolerance block must be an object')
    pylib_la.DEFAULT_TOL.replace(**tolerance)

    return InstanceFile(phi, psi, scenario, symbol, tolerance)

def LoadInstance(path):
    try:
        with open(path, 'r', encoding='utf-8') as fid:
            text = fid.read()
    except OSError as err:
        raise InputError('Error. Cannot read %s: %s'%(path, err)) from err
    return ParseInstance(text)

def EmitInstance(inst_file):
    '''Canonical instance-file text.'''
    return DumpJSON(inst_file.to_dict())

def ResolveInstance(inst_file):
    '''
    Frame pair and symbol of an instance file as a ScenarioInstance; an explicit
    symbol block overrides a scenario's symbol.
    '''

    if inst_file.scenario is not None:
        scn = inst_file.scenario
        try:
            scen = pylib_scen.BuildScenario(scn['name'], scn['size'], scn['seed'], **scn['params'])
        except TypeError as err:
            raise InputError('Error. Scenario %r rejects params %s: %s'%(scn['name'], sorted(scn['params']), err)) from err
        if inst_file.symbol is not None:
            scen.symbol = inst_file.symbol
        return scen

    psi = inst_file.psi
    if psi is None:
        psi = pylib_frm.CanonicalDual(inst_file.phi)
        logger.info('psi missing, using the canonical dual of phi')

    return pylib_scen.ScenarioInstance('instance_file', inst_file.phi.n_vec, None, inst_file.phi, psi, inst_file.symbol,
                                       metadata={'psi': 'file' if inst_file.psi is not None else 'canonical dual'})

def InstanceFromScenario(scen, tolerance=None):
    '''Instance file with the explicit frames and symbol values of a scenario.'''
    symbol = scen.symbol if isinstance(scen.symbol, pylib_sym.Symbol) and scen.symbol.is_finite \
             else pylib_sym.Symbol(scen.sym_val, name=getattr(scen.symbol, 'name', None))
    return InstanceFile(scen.phi, scen.psi, None, symbol, tolerance)
