#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Thu Oct  8 15:27:40 2026

Tests of instance files and canonical JSON output
"""

# Packages
# ---------------------------
import json
import numpy as np
import pandas as pd
import pytest
#user libraries
from Python_lib.numerics.pylib_linalg import InputError
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.scenarios import pylib_scenarios as pylib_scen
from Python_lib.instance_io import pylib_instance_io as pylib_io

MERCEDES_TEXT = '''{
 "schema_version": 1,
 "frames": {"phi": {"dim": 2, "vectors": [[0, 1], [-0.8660254037844386, -0.5], [0.8660254037844386, -0.5]]}},
 "symbol": {"entries": [1, 2, [3, 1]]},
 "tolerance": {"eig_atol": 1e-8}
}'''

def test_json_ready():
    obj = {'z': 1 + 2j, 'arr': np.array([1., np.inf]), 'flag': np.bool_(True), 'n': np.int64(3), 'nan': np.nan}
    assert pylib_io.JsonReady(obj) == {'z': [1., 2.], 'arr': [1., 'inf'], 'flag': True, 'n': 3, 'nan': 'nan'}
    with pytest.raises(InputError):
        pylib_io.JsonReady(object())

def test_dump_json_canonical():
    text = pylib_io.DumpJSON({'b': -np.inf, 'a': [0.1, 1j]})
    assert text == '{\n "a": [\n  0.1,\n  [\n   0.0,\n   1.0\n  ]\n ],\n "b": "-inf"\n}\n'

def test_parse_explicit_instance():
    inst_file = pylib_io.ParseInstance(MERCEDES_TEXT)
    assert inst_file.phi.synth_mat.shape == (2,3)
    np.testing.assert_allclose(inst_file.symbol.entries, [1., 2., 3. + 1j])
    assert inst_file.tolerance == {'eig_atol': 1e-8}
    scen = pylib_io.ResolveInstance(inst_file)
    np.testing.assert_allclose(scen.psi.synth_mat, inst_file.phi.synth_mat*2/3, atol=1e-12)
    assert scen.metadata['psi'] == 'canonical dual'

def test_parse_scenario_instance():
    inst_file = pylib_io.ParseInstance('{"schema_version": 1, "scenario": {"name": "example_duplicated_onb", '
                                       '"size": 4, "params": {"profile": "constant", "const": 2.0}}}')
    scen = pylib_io.ResolveInstance(inst_file)
    assert scen.phi.n_vec == 8
    np.testing.assert_allclose(scen.sym_val, 2.)

def test_malformed_json_position():
    with pytest.raises(InputError, match='line 2 column'):
        pylib_io.ParseInstance('{\n "schema_version": 1,,\n}')

@pytest.mark.parametrize('text', ['[]', '{"schema_version": 2, "scenario": {"name": "x"}}',
                                  '{"schema_version": 1, "scenario": {"name": "x"}, "extra": 1}',
                                  '{"schema_version": 1, "frames": {"phi": {"dim": 2, "vectors": [[1, 0]]}}}',
                                  '{"schema_version": 1, "frames": {"phi": {"dim": 2, "vectors": [[1]]}}, "symbol": {"entries": [1]}}',
                                  '{"schema_version": 1, "scenario": {"name": "x"}, "tolerance": {"eig_atol": -1}}',
                                  '{"schema_version": 1, "scenario": {"name": "x"}, "symbol": {"entries": []}}',
                                  '{"schema_version": 1, "scenario": {"name": "x", "params": [1]}}',
                                  '{"schema_version": 1, "scenario": {"name": "x", "size": "big"}}',
                                  '{"schema_version": 1}'])
def test_invalid_instances(text):
    with pytest.raises(InputError):
        pylib_io.ParseInstance(text)

def test_emit_parse_cycle():
    scen = pylib_scen.RandomInstance(5, 2, 3, 'generic')
    text = pylib_io.EmitInstance(pylib_io.InstanceFromScenario(scen, {'rank_rtol': 1e-9}))
    inst_file = pylib_io.ParseInstance(text)
    np.testing.assert_array_equal(inst_file.phi.synth_mat, scen.phi.synth_mat)
    np.testing.assert_array_equal(inst_file.psi.synth_mat, scen.psi.synth_mat)
    np.testing.assert_array_equal(inst_file.symbol.entries, scen.sym_val)
    assert pylib_io.EmitInstance(inst_file) == text

def test_atomic_writes(tmp_path):
    pylib_io.WriteTextAtomic(tmp_path / 'report.json', pylib_io.DumpJSON({'a': 1}))
    assert json.loads((tmp_path / 'report.json').read_text()) == {'a': 1}
    pylib_io.WriteCSVAtomic(pd.DataFrame(columns=['re', 'im']), tmp_path / 'empty.csv')
    assert (tmp_path / 'empty.csv').read_text() == 're,im\n'
    assert sorted(p.name for p in tmp_path.iterdir()) == ['empty.csv', 'report.json']
    with pytest.raises(InputError):
        pylib_io.WriteTextAtomic(tmp_path / 'missing' / 'report.json', '')

def test_load_missing_file(tmp_path):
    with pytest.raises(InputError):
        pylib_io.LoadInstance(tmp_path / 'none.json')

ONB_FRAME = '"frames": {"phi": {"dim": 2, "vectors": [[1, 0], [0, 1]]}}'

@pytest.mark.parametrize('classes', ['[{"selector": {"kind": "all"}}]', '[[0, 1]]', '{"limit": 0}',
                                     '[{"limit": 0, "selector": "all"}]', '[{"limit": 0, "majorant": [1, 2]}]',
                                     '[{"limit": 0, "selector": {"kind": "modulo", "modulus": "two", "residue": 0}}]'])
def test_invalid_symbol_classes(classes):
    text = '{"schema_version": 1, %s, "symbol": {"entries": [1, 2], "classes": %s}}'%(ONB_FRAME, classes)
    with pytest.raises(InputError):
        pylib_io.ParseInstance(text)

def test_symbol_classes_parse():
    text = ('{"schema_version": 1, %s, "symbol": {"entries": [1, 2], "classes": '
            '[{"limit": 1, "selector": {"kind": "modulo", "modulus": 2, "residue": 0}}, '
            '{"limit": [2, 0], "selector": {"kind": "modulo", "modulus": 2, "residue": 1}}]}}'%ONB_FRAME)
    symbol = pylib_io.ParseInstance(text).symbol
    np.testing.assert_allclose(symbol.structure.limits, [1., 2.])

def test_unknown_scenario_param():
    inst_file = pylib_io.ParseInstance('{"schema_version": 1, "scenario": {"name": "example_interleaved_onb", '
                                       '"size": 4, "params": {"colour": "red"}}}')
    with pytest.raises(InputError, match='colour'):
        pylib_io.ResolveInstance(inst_file)
