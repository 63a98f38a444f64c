#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Mon Oct 12 10:31:48 2026

Run the acceptance suites at full instance counts and sizes, write a CSV
summary with wall times and the JSON report of every suite
"""

# %% Required Packages
# ======================================
#load libraries
import os
import sys
import time
import pathlib
#arithmetic libraries
import numpy as np
#statistics libraries
import pandas as pd
#user libraries
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))
from Python_lib.numerics import pylib_linalg as pylib_la
from Python_lib.verification import pylib_suites as pylib_suite
from Python_lib.instance_io import pylib_instance_io as pylib_io

# %% Define Variables
# ======================================
# USER SETS THE SEED, WORKERS AND OUTPUT DIRECTORY
# ++++++++++++++++++++++++++++++++++++++++
seed   = int(os.environ.get('SPECTRA_FRAMES_SEED', 0))
n_jobs = -1
dir_out = '../../../Data/Verification/acceptance/'
# ++++++++++++++++++++++++++++++++++++++++

# USER SETS THE ACCEPTANCE RUNS
# ++++++++++++++++++++++++++++++++++++++++
#criterion: (suite, instances, sizes, wall-time limit in s)
acc_runs = {1:  ('duality',                    1000, None,           30),
            2:  ('invertibility',              1000, None,           60),
            3:  ('riesz-spectra',              200,  None,           30),
            4:  ('secular-vs-dense',           500,  None,           300),
            5:  ('example_interleaved_onb',    None, [200],          60),
            6:  ('example_fourier_x2',         None, [200],          60),
            7:  ('example_diagonal_pair',      None, [100],          10),
            8:  ('example_duplicated_onb',     None, [50],           10),
            9:  ('example_excess_one_langley', None, [2**14],        300),
            10: ('behncke-count',              500,  None,           120),
            11: ('eigenvalue-tails',           None, [50, 100, 200], 30),
            12: ('adjoint-symmetry',           500,  None,           300)}
# ++++++++++++++++++++++++++++++++++++++++

#tolerances
tol = pylib_la.DEFAULT_TOL

# %% Run Suites
# ======================================
#create output directory
pathlib.Path(dir_out).mkdir(parents=True, exist_ok=True)

df_summary = []
for crit, (suite, n_inst, sizes, t_max) in acc_runs.items():
    print('Criterion %i, suite: %s'%(crit, suite))
    t_start = time.time()
    res = pylib_suite.RunSuites([suite], seed, n_inst, sizes, tol, n_jobs)[0]
    t_run = time.time() - t_start
    #suite report
    fname_rep = 'acceptance_%02i_%s.json'%(crit, suite)
    pylib_io.WriteTextAtomic(dir_out + fname_rep, pylib_io.DumpJSON(res.to_dict(timing=True)))
    df_summary.append({'criterion': crit, 'suite': suite, 'n_cases': res.n_cases, 'n_fail': res.n_fail,
                       'n_discrepancy': len(res.discrepancies), 'passed': res.passed,
                       'time_s': t_run, 'time_limit_s': t_max, 'within_time': t_run < t_max})
    print('\tcases: %i, failures: %i, discrepancies: %i, time: %.1fs'%(res.n_cases, res.n_fail,
                                                                       len(res.discrepancies), t_run))
    for disc in res.discrepancies:
        print('\tdiscrepancy: %s (%s)'%(disc.get('fact'), disc.get('statement')))
df_summary = pd.DataFrame(df_summary)

# %% Output
# ======================================
pylib_io.WriteCSVAtomic(df_summary, dir_out + 'acceptance_summary.csv')
print('Passed %i of %i criteria'%(np.sum(df_summary.passed), len(df_summary)))
sys.exit(0 if df_summary.passed.all() else 1)
