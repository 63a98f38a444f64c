#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Mon Oct  5 16:41:02 2026

Entry point of the spectra_frames command line

Usage: spectra_frames.py {frame-info,spectrum,invertibility,verify,emit-plot-data} ...
"""

# Packages
# ---------------------------
import os
import sys
#user libraries
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from Python_lib.cli import pylib_cli

if __name__ == '__main__':
    sys.exit(pylib_cli.Main())
