#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Created on Mon Oct  5 11:08:46 2026

Command-line front door: frame information, spectra, invertibility, property
suites and plot-data emission for multiplier instance files
"""

# Packages
# ---------------------------
#load libraries
import os
import sys
import time
import pathlib
import logging
import argparse
#arithmetic libraries
import numpy as np
import pandas as pd
#user libraries
from Python_lib.numerics import pylib_linalg as pylib_la
from Python_lib.numerics.pylib_linalg import InputError, ToleranceError, BudgetError
from Python_lib.frames import pylib_frames as pylib_frm
from Python_lib.frames import pylib_symbols as pylib_sym
from Python_lib.multipliers import pylib_multipliers as pylib_mult
from Python_lib.multipliers import pylib_secular as pylib_sec
from Python_lib.multipliers import pylib_spectra as pylib_spec
from Python_lib.scenarios import pylib_scenarios as pylib_scen
from Python_lib.instance_io import pylib_instance_io as pylib_io
from Python_lib.verification import pylib_suites as pylib_suite

logger = logging.getLogger(__name__)

SEED_ENV = 'SPECTRA_FRAMES_SEED'
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

# Argument Parsing
#--------------------------------------
def ParseRegion(text):
    '''Region from 'disk:cx,cy,r' or 'rect:x0,x1,y0,y1'.'''
    try:
        kind, vals = text.split(':', 1)
        vals = [float(v) for v in vals.split(',')]
    except ValueError:
        raise InputError('Error. Region must read disk:cx,cy,r or rect:x0,x1,y0,y1, got %r'%text)
    if kind == 'disk' and len(vals) == 3:
        return pylib_sec.DiskRegion(complex(vals[0], vals[1]), vals[2])
    if kind == 'rect' and len(vals) == 4:
        return pylib_sec.RectangleRegion(*vals)
    raise InputError('Error. Region must read disk:cx,cy,r or rect:x0,x1,y0,y1, got %r'%text)

def _SizeList(text):
    try:
        return [int(s) for s in text.split(',') if s]
    except ValueError:
        raise argparse.ArgumentTypeError('sizes must be comma-separated integers')

def BuildParser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None, help='base seed (default: $%s or 0)'%SEED_ENV)
    common.add_argument('--output', default=None, help='report path (default: stdout)')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v info, -vv debug logging')
    common.add_argument('--jobs', type=int, default=1, help='joblib workers for suites (<1: all cores)')
    common.add_argument('--timing', action='store_true', help='include wall times in the report')
    for flag in ('rank-rtol', 'eig-atol', 'residual-atol', 'cluster-eps'):
        common.add_argument('--' + flag, type=float, default=None)

    parser = argparse.ArgumentParser(prog='spectra_frames', description='Spectra of multipliers of finite-excess frames')
    sub = parser.add_subparsers(dest='command', required=True)

    p_info = sub.add_parser('frame-info', parents=[common], help='frame bounds, excess, Riesz/Parseval/dual status')
    p_info.add_argument('instance')

    p_spec = sub.add_parser('spectrum', parents=[common], help='spectrum of the multiplier')
    p_spec.add_argument('instance')
    p_spec.add_argument('--method', choices=['dense', 'secular', 'both'], default='dense')
    p_spec.add_argument('--region', type=ParseRegion, default=None, help='disk:cx,cy,r or rect:x0,x1,y0,y1')
    p_spec.add_argument('--truncation', type=int, default=None, help='secular truncation of structured models')
    p_spec.add_argument('--csv', default=None, help='spectrum point cloud CSV')

    p_inv = sub.add_parser('invertibility', parents=[common], help='injectivity, surjectivity, bijectivity')
    p_inv.add_argument('instance')

    p_ver = sub.add_parser('verify', parents=[common], help='run property suites')
    p_ver.add_argument('suites', nargs='+', help='suite names, result tags (th_inv, pro_Riesz, ...) or all')
    p_ver.add_argument('--instances', type=int, default=None)
    p_ver.add_argument('--sizes', type=_SizeList, default=None)

    p_plot = sub.add_parser('emit-plot-data', parents=[common], help='CSV point clouds, heat grid, convergence table')
    p_plot.add_argument('instance')
    p_plot.add_argument('output_dir')
    p_plot.add_argument('--region', type=ParseRegion, default=None)
    p_plot.add_argument('--grid', type=int, default=100, help='heat-grid points per axis (0: header only)')
    p_plot.add_argument('--truncation', type=int, default=None)
    p_plot.add_argument('--sizes', type=_SizeList, default=None)

    return parser

def ResolveSeed(arg_seed):
    if arg_seed is not None:
        return arg_seed
    env_seed = os.environ.get(SEED_ENV)
    if env_seed is None:
        return 0
    try:
        return int(env_seed)
    except ValueError:
        raise InputError('Error. %s must be an integer, got %r'%(SEED_ENV, env_seed))

def ResolveTolerance(args, file_tol=None):
    '''defaults < instance-file tolerance block < command-line flags'''
    tol = pylib_la.DEFAULT_TOL.replace(**(file_tol or {}))
    return tol.replace(rank_rtol=args.rank_rtol, eig_atol=args.eig_atol, residual_atol=args.residual_atol,
                       cluster_eps=args.cluster_eps)

# Commands
#--------------------------------------
def _FrameSummary(frame, tol):
    is_frame = pylib_frm.IsFrame(frame, tol)
    summary = {'dim': frame.dim, 'n_vec': frame.n_vec, 'is_frame': is_frame, 'excess': pylib_frm.Excess(frame, tol),
               'bounds': None, 'parseval': False, 'riesz': False}
    if is_frame:
        bnds = pylib_frm.ComputeFrameBounds(frame, tol)
        summary.update({'bounds': bnds.to_dict(), 'parseval': bnds.is_parseval(tol.residual_atol),
                        'riesz': pylib_frm.IsRieszBasis(frame, tol)})
    else:
        logger.warning('%s is not a frame', frame.name or 'sequence')
    return summary

def CmdFrameInfo(scen, args, tol):
    results = {'phi': _FrameSummary(scen.phi, tol), 'psi': _FrameSummary(scen.psi, tol)}
    if scen.phi.dim == scen.psi.dim and scen.phi.n_vec == scen.psi.n_vec:
        flag, res = pylib_frm.IsDualPair(scen.phi, scen.psi, tol)
        results['dual_pair'] = {'flag': flag, 'residual': res}
    symbol = scen.symbol
    if symbol is not None:
        sym_val = scen.sym_val
        results['symbol'] = {'n_entries': len(sym_val), 'sup_norm': float(np.abs(sym_val).max()),
                             'real': bool(np.all(np.abs(sym_val.imag) <= tol.eig_atol))}
        if isinstance(symbol, pylib_sym.Symbol) and symbol.structure is not None:
            results['symbol'].update({'limits': pylib_sym.LimitPoints(symbol, tol),
                                      'compact': pylib_sym.IsCompactSymbol(symbol, tol)})
    return results, EXIT_OK

def _StructuredData(scen):
    phi_struct, psi_struct = scen.structured
    if phi_struct.n_exc == 0:
        return None
    return pylib_sec.SecularDataFromStructured(phi_struct, psi_struct, scen.symbol)

def _SecularSpectrum(scen, args, tol):
    #secular roots of a finite instance or of a structured model
    if scen.structured is not None:
        phi_struct, psi_struct = scen.structured
        region = args.region if args.region is not None else pylib_sec.DiskRegion(0., 0.99)
        essential = pylib_spec.EssentialSpectrum(phi_struct, psi_struct, scen.symbol, tol)
        points = [pylib_sym.SpectralPoint(l, 'limit_point', provenance='essential spectrum') for l in essential]
        data = _StructuredData(scen)
        if data is None:
            raise InputError('Error. Secular method needs positive excess; structured model has excess 0')
        search = pylib_sec.SecularRoots(data, region, tol, k_trunc=args.truncation)
    else:
        essential = []
        points = []
        n_exc = pylib_frm.Excess(scen.phi, tol)
        if n_exc == 0:
            sym_val = scen.sym_val
            region = args.region
            if region is not None and np.min(region.boundary_distance(sym_val)) <= tol.eig_atol:
                raise InputError('Error. Secular method with excess 0 (Riesz basis): the region boundary touches the '
                                 'symbol values, where the eigenvalues lie; choose a region away from them')
            sel = np.ones(len(sym_val), dtype=bool) if region is None else region.contains(sym_val)
            values, mult = pylib_la.GroupEigenvalues(sym_val[sel], 1e3*tol.eig_atol)
            points = [pylib_sym.SpectralPoint(v, 'eigenvalue', k, provenance='excess 0: symbol values') for v, k in zip(values, mult)]
            return pylib_spec.SpectralReport(points, provenance={'rule': 'excess 0: eigenvalues are the symbol values'}), None
        data = pylib_sec.SecularDataFromFrames(scen.sym_val, scen.phi, scen.psi, tol)
        search = pylib_sec.SecularRoots(data, args.region, tol)

    points += [pylib_sym.SpectralPoint(r, 'eigenvalue', k, provenance='secular root') for r, k, _ in search.roots]
    points += [pylib_sym.SpectralPoint(r, 'eigenvalue', k, provenance='secular zero at symbol value')
               for r, k, _ in search.symbol_zeros]
    if search.status != 'certified':
        logger.warning('secular search status: %s', search.status)
    report = pylib_spec.SpectralReport(points, essential, {'rule': 'secular determinant', 'status': search.status},
                                       {'secular': search.to_dict()})
    return report, search

def CmdSpectrum(scen, args, tol):
    results = {}
    rep_dense = rep_sec = search = None
    if args.method in ('dense', 'both'):
        rep_dense = pylib_spec.FiniteSpectrum(scen.assemble(tol), tol)
        results['dense'] = rep_dense.to_dict()
    if args.method in ('secular', 'both'):
        rep_sec, search = _SecularSpectrum(scen, args, tol)
        results['secular'] = rep_sec.to_dict()

    if args.method == 'both' and search is not None:
        region = search.certificate.region
        eig_in = rep_dense.eigenvalues[region.contains(rep_dense.eigenvalues)]
        root_dist = [float(np.abs(eig_in - r).min()) if len(eig_in) else np.inf for r, _, _ in search.roots]
        cross = {'dense_in_region': len(eig_in), 'winding': search.certificate.winding_count,
                 'max_root_distance': max(root_dist, default=0.)}
        if scen.structured is None:
            scale = max(1., float(np.abs(rep_dense.eigenvalues).max())) if len(rep_dense.eigenvalues) else 1.
            cross['passed'] = cross['dense_in_region'] == cross['winding'] and cross['max_root_distance'] <= 1e-8*scale
        else:
            cross['passed'] = None
            cross['note'] = 'dense values are eigenvalues of a truncation of the structured model'
        results['cross_validation'] = cross

    if args.csv is not None:
        df_pts = (rep_sec if rep_sec is not None else rep_dense).to_dataframe()
        pylib_io.WriteCSVAtomic(df_pts, args.csv)
    exit_code = EXIT_FAIL if results.get('cross_validation', {}).get('passed') is False else EXIT_OK

    return results, exit_code

def CmdInvertibility(scen, args, tol):
    rep = pylib_mult.CheckInvertibility(scen.sym_val, scen.phi, scen.psi, tol)
    return rep.to_dict(), EXIT_OK

def CmdVerify(args, tol, seed):
    results = pylib_suite.RunSuites(args.suites, seed, args.instances, args.sizes, tol, args.jobs)
    res_list = [r.to_dict(args.timing) for r in results]
    discrepancies = [dict(d, suite=r.name) for r in results for d in r.discrepancies]
    report = {'suites': res_list, 'discrepancies': discrepancies, 'passed': all(r.passed for r in results)}
    return report, EXIT_OK if report['passed'] else EXIT_FAIL

def _ConvergenceTable(scen, sizes, tol):
    cols = ['size', 'n_eig', 'frac_within_eps', 'n_outside', 'hausdorff_outside', 'tail_k', 'tail_norm_bound', 'tail_norm_actual']
    symbol = scen.symbol
    if not isinstance(symbol, pylib_sym.Symbol) or symbol.structure is None or scen.name not in pylib_scen.SCENARIOS:
        return pd.DataFrame(columns=cols)
    sym_p, _ = pylib_sym.CompactSplit(symbol)

    def builder(size):
        scen_s = pylib_scen.BuildScenario(scen.name, size, scen.seed)
        return scen_s.phi, scen_s.psi, scen_s.sym_val, sym_p.prefix(scen_s.phi.n_vec)

    df_conv, _ = pylib_spec.TruncatedSpectrumFamily(builder, sizes, pylib_sym.LimitPoints(symbol, tol), 0.1, tol)
    return df_conv

def CmdEmitPlotData(scen, args, tol):
    out_dir = pathlib.Path(args.output_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as err:
        raise InputError('Error. Cannot create %s: %s'%(out_dir, err)) from err

    #spectrum cloud
    rep = pylib_spec.FiniteSpectrum(scen.assemble(tol), tol)
    df_cloud = rep.to_dataframe()
    pylib_io.WriteCSVAtomic(df_cloud, out_dir / 'spectrum_cloud.csv')

    #secular heat grid
    cols = ['re', 'im', 'abs_det', 'error_bound', 'certified']
    df_grid = pd.DataFrame(columns=cols)
    if args.grid > 0:
        data = None
        if scen.structured is not None:
            data = _StructuredData(scen)
            region = args.region if args.region is not None else pylib_sec.DiskRegion(0., 0.99)
        elif pylib_frm.Excess(scen.phi, tol) > 0:
            data = pylib_sec.SecularDataFromFrames(scen.sym_val, scen.phi, scen.psi, tol)
            region = args.region if args.region is not None else pylib_sec.DefaultRegion(data)
        if data is not None:
            #disks mask the bounding-box grid, rectangles keep their edges
            box, mask = (region.bounding_box(), region) if region.kind == 'disk' else (region, None)
            re_vals = np.linspace(box.x0, box.x1, args.grid)
            im_vals = np.linspace(box.y0, box.y1, args.grid)
            df_grid = pylib_sec.SecularHeatGrid(data, re_vals, im_vals, mask, tol, args.truncation)
    pylib_io.WriteCSVAtomic(df_grid, out_dir / 'secular_heat_grid.csv')

    #convergence table
    sizes = args.sizes
    if sizes is None:
        sizes = sorted(set(s for s in (scen.size//4, scen.size//2, scen.size) if isinstance(s, int) and s >= 2))
    df_conv = _ConvergenceTable(scen, sizes, tol)
    pylib_io.WriteCSVAtomic(df_conv, out_dir / 'convergence.csv')

    n_cert = int(df_grid.certified.sum()) if len(df_grid) else 0
    results = {'files': ['spectrum_cloud.csv', 'secular_heat_grid.csv', 'convergence.csv'],
               'rows': {'spectrum_cloud': len(df_cloud), 'secular_heat_grid': len(df_grid), 'convergence': len(df_conv)},
               'heat_grid_certified': n_cert}
    if len(df_grid):
        results['heat_grid_min_abs_det'] = float(df_grid.abs_det.min())
        results['heat_grid_max_error_bound'] = float(df_grid.error_bound.max())

    return results, EXIT_OK

# Main
#--------------------------------------
def Main(argv=None):
    '''Run the command line; returns the exit code.'''
    parser = BuildParser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code == 0 else EXIT_INPUT

    log_level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=log_level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')

    t_start = time.time()
    try:
        seed = ResolveSeed(args.seed)
        if args.command == 'verify':
            tol = ResolveTolerance(args)
            results, exit_code = CmdVerify(args, tol, seed)
        else:
            inst_file = pylib_io.LoadInstance(args.instance)
            tol = ResolveTolerance(args, inst_file.tolerance)
            scen = pylib_io.ResolveInstance(inst_file)
            cmd_fun = {'frame-info': CmdFrameInfo, 'spectrum': CmdSpectrum, 'invertibility': CmdInvertibility,
                       'emit-plot-data': CmdEmitPlotData}[args.command]
            results, exit_code = cmd_fun(scen, args, tol)

        report = {'command': [args.command] + [a for a in argv if a != args.command], 'tolerance': tol.to_dict(),
                  'seed': seed, 'results': results}
        if args.timing:
            report['timing'] = {'elapsed_s': time.time() - t_start}
        text = pylib_io.DumpJSON(report)
        if args.output is not None:
            pylib_io.WriteTextAtomic(args.output, text)
        else:
            sys.stdout.write(text)
    except (InputError, ToleranceError, BudgetError, OSError) as err:
        logger.error('%s', err)
        sys.stderr.write('%s\n'%err)
        return EXIT_INPUT
    logger.info('%s finished in %.2fs with exit code %i', args.command, time.time() - t_start, exit_code)

    return exit_code
