#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Tue Oct  6 09:12:30 2026

Shared fixtures of the test-suite
"""

# Packages
# ---------------------------
import os
import sys
#arithmetic libraries
import numpy as np
import pytest
#user libraries
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))
from Python_lib.numerics import pylib_linalg as pylib_la

@pytest.fixture
def rng():
    return np.random.default_rng(20260)

@pytest.fixture
def tol():
    return pylib_la.DEFAULT_TOL

@pytest.fixture
def mercedes():
    '''Mercedes-Benz frame: three unit vectors at 120 degrees in R^2.'''
    ang = np.pi/2 + 2*np.pi*np.arange(3)/3
    return np.vstack([np.cos(ang), np.sin(ang)]).astype(complex)
