#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Wed Oct 14 16:02:11 2026

Create instance files of the structured scenarios (explicit truncated frames
and symbols) and of seeded random multipliers, with a per-file summary of
their frame bounds and invertibility
"""

# %% Required Packages
# ======================================
#load libraries
import os
import sys
import pathlib
#statistics libraries
import pandas as pd
#user libraries
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..', 'Analyses')))
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.multipliers import pylib_multipliers as pylib_mult
from Python_lib.scenarios import pylib_scenarios as pylib_scen
from Python_lib.instance_io import pylib_instance_io as pylib_io

# %% Define Variables
# ======================================
# USER SETS THE SCENARIOS AND TRUNCATION SIZES
# ++++++++++++++++++++++++++++++++++++++++
scen_list = [('example_interleaved_onb', 20),
             ('example_fourier_x2',      16),
             ('example_diagonal_pair',   12),
             ('example_duplicated_onb',  10)]
# ++++++++++++++++++++++++++++++++++++++++

# USER SETS THE RANDOM INSTANCES
# ++++++++++++++++++++++++++++++++++++++++
#(seed, d, N, profile)
rand_list = [(1, 3, 5, 'generic'),
             (2, 4, 7, 'planted_zeros'),
             (3, 3, 6, 'planted_collisions'),
             (4, 4, 4, 'riesz_canonical')]
# ++++++++++++++++++++++++++++++++++++++++

#output directory
dir_out = '../../Data/Examples/example2/'

# %% Create Instances
# ======================================
pathlib.Path(dir_out).mkdir(parents=True, exist_ok=True)

df_info = []
def WriteInstance(scen, fname):
    inst_file = pylib_io.InstanceFromScenario(scen)
    pylib_io.WriteTextAtomic(dir_out + fname, pylib_io.EmitInstance(inst_file))
    bnd = pylib_frm.ComputeFrameBounds(scen.phi)
    rep = pylib_mult.CheckInvertibility(scen.sym_val, scen.phi, scen.psi)
    df_info.append({'file': fname, 'dim': scen.phi.dim, 'n_vec': scen.phi.n_vec, 'A': bnd.lower, 'B': bnd.upper,
                    'invertible': rep.bijective, 'hash': pylib_scen.InstanceHash(scen)})

#structured scenarios
for name, size in scen_list:
    print('Scenario: %s, size: %i'%(name, size))
    WriteInstance(pylib_scen.BuildScenario(name, size), '%s_%i.json'%(name, size))

#random multipliers
for seed, d, N, profile in rand_list:
    print('Random instance: seed %i, d=%i, N=%i, %s'%(seed, d, N, profile))
    scen = pylib_scen.BuildScenario('random_instance', seed=seed, d=d, N=N, profile=profile)
    WriteInstance(scen, 'random_%s_s%i.json'%(profile, seed))

# %% Output
# ======================================
df_info = pd.DataFrame(df_info)
pylib_io.WriteCSVAtomic(df_info, dir_out + 'instances_summary.csv')
print(df_info.to_string(index=False))
