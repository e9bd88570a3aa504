################################################################################
# COPYRIGHT(c) 2024 The ShellSpec Authors                                      #
#                                                                              #
# Redistribution and use in source and binary forms, with or without           #
# modification, are permitted provided that the following conditions are met:  #
#   1. Redistributions of source code must retain the above copyright notice,  #
#      this list of conditions and the following disclaimer.                   #
#   2. Redistributions in binary form must reproduce the above copyright       #
#      notice, this list of conditions and the following disclaimer in the     #
#      documentation and/or other materials provided with the distribution.    #
#   3. Neither the name of the copyright holder nor the names of its           #
#      contributors may be used to endorse or promote products derived from    #
#      this software without specific prior written permission.                #
#                                                                              #
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"  #
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE    #
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE   #
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE    #
# LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR          #
# CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF         #
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS     #
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN      #
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE)      #
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE   #
# POSSIBILITY OF SUCH DAMAGE.                                                  #
################################################################################


"""cli

The cli module is the batch front-end of the library: it reads a run
configuration, dispatches one subcommand and writes its results as CSV, or as
JSON lines for `classify`.

Exit codes:

- 0: success;
- 1: configuration or usage error;
- 2: critical couplings;
- 3: confining couplings;
- 4: numerical failure.

The verbosity is set by the environment variable SHELLSPEC_LOG (DEBUG, INFO,
WARNING, ERROR; WARNING by default).
"""


# IMPORT

import argparse
import logging
import os
import sys

import numpy as np

from shellspec.approximation.field_checks import HEADER as FIELDS_HEADER
from shellspec.approximation.field_checks import field_checks
from shellspec.approximation.radial_shell_problem import ApproximationStudy
from shellspec.config import RunConfig
from shellspec.couplings import classify
from shellspec.couplings import confinement_split
from shellspec.couplings import gauge_reduce
from shellspec.couplings import renormalize_forward
from shellspec.disk_oracle import disk_eigenvalues
from shellspec.disk_oracle import zigzag_spectrum
from shellspec.geometry import CircleCurve
from shellspec.kernels import SpectralParameter
from shellspec.shell_operator.discretization import ShellDiscretization
from shellspec.shell_operator.eigenvalue_scan import eigenvalue_scan
from shellspec.shell_operator.krein_resolvent import BumpSource
from shellspec.shell_operator.krein_resolvent import dirac_residual
from shellspec.shell_operator.krein_resolvent import krein_resolvent_apply
from shellspec.shell_operator.layer_potential import plemelj_check
from shellspec.spin_algebra import transmission_matrix_R
from shellspec.utils.result_writer import ResultWriter
from shellspec.utils.shellspec_exceptions import ShellSpecConfiningCouplingsException
from shellspec.utils.shellspec_exceptions import ShellSpecCriticalCouplingsException
from shellspec.utils.shellspec_exceptions import ShellSpecException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidOperationException
from shellspec.utils.shellspec_exceptions import ShellSpecNumericalFailureException


# CONSTANTS

EXIT_SUCCESS = 0
EXIT_USAGE = 1
EXIT_CRITICAL = 2
EXIT_CONFINING = 3
EXIT_NUMERICAL_FAILURE = 4

LOG_VARIABLE = 'SHELLSPEC_LOG'
"""Environment variable selecting the logging level."""

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

SPECTRUM_HEADER = ('z_refined', 'sigma_min', 'multiplicity_estimate', 'N',
                   'curve_kind')

ORACLE_HEADER = ('oracle_z', 'nystrom_z', 'abs_diff')

ZIGZAG_HEADER = ('eigenvalue', 'negative_eigenvalue', 'dirichlet_eigenvalue',
                 'bessel_order', 'bessel_index')

RESOLVENT_HEADER = ('quantity', 'value')

_RESOLVENT_SAMPLES = 4
"""Boundary and off-curve sample points of the resolvent check."""

_LOGGER = logging.getLogger('ShellSpec')


# CLASSES

class ShellSpecArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with the usage code on errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write('%s: error: %s\n' % (self.prog, message))
        sys.exit(EXIT_USAGE)


# FUNCTIONS

def build_parser():
    """Build the command-line parser.

    Returns:
        :class:`ShellSpecArgumentParser`: The parser.
    """
    parser = ShellSpecArgumentParser(
        prog='shellspec',
        description='Spectral computations for Dirac operators with '
                    'delta-shell interactions on closed curves.')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    for name, (_, text) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=text, description=text)
        sub.add_argument('--config', metavar='PATH',
                         help='run configuration; defaults apply when omitted')
        sub.add_argument('--out', metavar='PATH', default='-',
                         help='output file, standard output by default')
        sub.add_argument('--threads', metavar='K', type=int, default=1,
                         help='number of worker threads')
        sub.add_argument('--seed', metavar='S', type=int, default=0,
                         help='seed of randomized sample points')
    return parser


def configure_logging(environ=None):
    """Configure the root handler from SHELLSPEC_LOG."""
    environ = os.environ if environ is None else environ
    name = environ.get(LOG_VARIABLE, 'WARNING').strip().upper()
    level = getattr(logging, name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def main(argv=None):
    """Run the command line.

    Args:
        argv (list): Arguments without the program name; sys.argv[1:] when
        None.

    Returns:
        int: The exit code.
    """
    configure_logging()
    args = build_parser().parse_args(sys.argv[1:] if argv is None else argv)
    try:
        config = RunConfig.from_file(args.config) if args.config \
            else RunConfig()
        handler = COMMANDS[args.command][0]
        with ResultWriter(args.out) as writer:
            handler(config, args, writer)
        return EXIT_SUCCESS
    except ShellSpecCriticalCouplingsException as e:
        _LOGGER.error(str(e))
        return EXIT_CRITICAL
    except ShellSpecConfiningCouplingsException as e:
        _LOGGER.error(str(e))
        return EXIT_CONFINING
    except (ShellSpecNumericalFailureException, np.linalg.LinAlgError) as e:
        _LOGGER.error(str(e))
        return EXIT_NUMERICAL_FAILURE
    except ShellSpecException as e:
        _LOGGER.error(str(e))
        return EXIT_USAGE


def classify_cmd(config, args, writer):
    """Write the classification of the configured couplings as one JSON
    record, with a text summary on the standard error."""
    curve = config.get_curve()
    c = config.get_couplings(curve)
    report = classify(c)
    record = report.as_dict()
    record['couplings'] = str(c)
    record['flags'] = describe_flags(report)
    if not c.omega_vanishes():
        reduction = gauge_reduce(c)
        record['gauge'] = {
            'X': reduction.get_X(),
            'z': reduction.get_z(),
            'abs_z': abs(reduction.get_z()),
            'quadratic_residual': reduction.quadratic_residual(
                reduction.get_X()),
            'reduced': str(reduction.get_reduced())
        }
    if report.is_confining():
        split = confinement_split(c)
        record['boundary_condition'] = split.get_kind().value
        record['description'] = split.get_description()
    writer.write_record(record)
    sys.stderr.write('%s\n' % _classification_text(record))


def spectrum_cmd(config, args, writer):
    """Write the gap eigenvalues found by the boundary integral scan."""
    curve = config.get_curve()
    c = _reduced_couplings(config, curve)
    disc = ShellDiscretization(curve, config.get_nodes())
    found = eigenvalue_scan(disc, c, config.get_mass(),
                            config.get_grid_points(),
                            config.get('scan.threshold'),
                            config.get_grid_margin(), args.threads)
    writer.write_header(SPECTRUM_HEADER)
    for e in found:
        writer.write_row((e.get_z(), e.get_sigma_min(), e.get_multiplicity(),
                          disc.get_N(), curve.get_kind().value))


def oracle_compare_cmd(config, args, writer):
    """Write the disk-oracle eigenvalues next to the scanned ones."""
    curve = _require_circle(config, 'oracle-compare')
    c = _reduced_couplings(config, curve)
    oracle = [e.get_z() for e in disk_eigenvalues(
        curve.get_radius(), config.get_mass(), c, config.get('channels.max'),
        config.get_grid_points(), args.threads)]
    disc = ShellDiscretization(curve, config.get_nodes())
    scanned = [e.get_z() for e in eigenvalue_scan(
        disc, c, config.get_mass(), config.get_grid_points(),
        config.get('scan.threshold'), config.get_grid_margin(),
        args.threads)]
    writer.write_header(ORACLE_HEADER)
    for a, b in match_sorted(oracle, scanned):
        writer.write_row((a, b, abs(a - b)))


def approx_converge_cmd(config, args, writer):
    """Write the convergence of regular-potential eigenvalues to the
    δ-shell eigenvalues of the renormalized couplings."""
    curve = _require_circle(config, 'approx-converge')
    c = config.get_couplings(curve)
    renormalize_forward(c, config.get('tolerance.exceptional'))
    study = ApproximationStudy(curve.get_radius(), config.get_mass(), c,
                               config.get_profile(), config.get_epsilons(),
                               config.get('approx.channels'),
                               config.get_grid_points(), args.threads)
    writer.write_header(ApproximationStudy.HEADER)
    writer.write_rows(row.as_tuple() for row in study.run())


def zigzag_cmd(config, args, writer):
    """Write the embedded eigenvalues of the zig-zag interaction."""
    spectrum = zigzag_spectrum(config.get('zigzag.radius'), config.get_mass(),
                               config.get('zigzag.count'))
    writer.write_header(ZIGZAG_HEADER)
    writer.write_rows(spectrum.rows())


def fields_cmd(config, args, writer):
    """Write the convergence table of the magnetic layer fields."""
    rows = field_checks(config.get_curve(), config.get('fields.lambda'),
                        config.get_profile(), config.get('fields.epsilon'))
    writer.write_header(FIELDS_HEADER)
    writer.write_rows(row.as_tuple() for row in rows)


def resolvent_check_cmd(config, args, writer):
    """Write residual diagnostics of the Krein resolvent formula."""
    curve = config.get_curve()
    c = _reduced_couplings(config, curve)
    disc = ShellDiscretization(curve, config.get_nodes())
    sp = SpectralParameter(complex(config.get('resolvent.z_real'),
                                   config.get('resolvent.z_imag')),
                           config.get_mass())
    source = BumpSource((config.get('resolvent.source_x'),
                         config.get('resolvent.source_y')),
                        config.get('resolvent.source_radius'))
    resolvent = krein_resolvent_apply(disc, sp, c, source)
    rng = np.random.default_rng(args.seed)
    arcs = rng.uniform(0.0, curve.get_length(), _RESOLVENT_SAMPLES)
    offset = 0.5 * curve.max_tube_halfwidth()

    pde = 0.0
    for s in arcs:
        for p in (-offset, offset):
            x = curve.tubular_to_cartesian(s, p)
            if np.hypot(*(x - source.get_center())) > source.get_radius() \
                    + 0.01:
                pde = max(pde, dirac_residual(resolvent.evaluate, sp, x))
    mismatch = 0.0
    for s in arcs:
        frame = curve.frame_at(s)
        R = transmission_matrix_R(c.at(s), frame)
        inner = resolvent.one_sided_trace(s, True)
        outer = resolvent.one_sided_trace(s, False)
        mismatch = max(mismatch, float(np.max(np.abs(inner - R.dot(outer)))))
    writer.write_header(RESOLVENT_HEADER)
    writer.write_row(('sigma_min', resolvent.get_sigma_min()))
    writer.write_row(('pde_residual', pde))
    writer.write_row(('transmission_mismatch', mismatch))
    writer.write_row(('plemelj_residual',
                      plemelj_check(disc, sp, resolvent.get_density())))


def describe_flags(report):
    """Get the comma-separated flags of a classification report."""
    flags = []
    if report.is_confining():
        flags.append('confining')
    flags.append('critical' if report.is_critical() else 'non-critical')
    if report.is_zigzag():
        flags.append('zig-zag')
    return ', '.join(flags)


def match_sorted(first, second):
    """Pair two ascending lists by nearest values.

    Unpaired values are matched with NaN.

    Returns:
        list: Pairs (a, b).
    """
    first = sorted(first)
    second = sorted(second)
    pairs = []
    i = j = 0
    while i < len(first) and j < len(second):
        a, b = first[i], second[j]
        if i + 1 < len(first) and abs(first[i + 1] - b) < abs(a - b):
            pairs.append((a, float('nan')))
            i += 1
        elif j + 1 < len(second) and abs(second[j + 1] - a) < abs(a - b):
            pairs.append((float('nan'), b))
            j += 1
        else:
            pairs.append((a, b))
            i += 1
            j += 1
    pairs.extend((a, float('nan')) for a in first[i:])
    pairs.extend((float('nan'), b) for b in second[j:])
    return pairs


# UTILITY FUNCTIONS

def _reduced_couplings(config, curve):
    c = config.get_couplings(curve)
    if c.omega_vanishes():
        return c
    reduction = gauge_reduce(c)
    _LOGGER.info('Couplings gauge-reduced with X = %.15g, z = %s.'
                 % (reduction.get_X(), reduction.get_z()))
    return reduction.get_reduced()


def _require_circle(config, command):
    curve = config.get_curve()
    if not isinstance(curve, CircleCurve):
        raise ShellSpecInvalidOperationException(
            'Command %s needs curve.kind = circle.' % command)
    return curve


def _classification_text(record):
    lines = ['couplings: %s' % record['couplings'],
             'flags: %s' % record['flags'],
             'd: %s' % (record['d'],),
             'criticality: %s' % (record['criticality'],)]
    if 'gauge' in record:
        lines.append('gauge: X = %.15g, z = %s' % (record['gauge']['X'],
                                                   record['gauge']['z']))
    if 'boundary_condition' in record:
        lines.append('boundary condition: %s' % record['description'])
    return '\n'.join(lines)


COMMANDS = {
    'classify': (classify_cmd, 'classify the configured couplings'),
    'spectrum': (spectrum_cmd, 'scan the gap for shell eigenvalues'),
    'oracle-compare': (oracle_compare_cmd,
                       'compare the scan with the disk oracle'),
    'approx-converge': (approx_converge_cmd,
                        'convergence of regular potentials to the shell'),
    'zigzag': (zigzag_cmd, 'spectrum of the zig-zag interaction on the disk'),
    'fields': (fields_cmd, 'convergence of the magnetic layer fields'),
    'resolvent-check': (resolvent_check_cmd,
                        'residuals of the Krein resolvent formula; the '
                        'source disk given by resolvent.source_x, '
                        'resolvent.source_y and resolvent.source_radius '
                        'must not meet the curve'),
}
"""Subcommands with their handlers and help texts."""


if __name__ == '__main__':
    sys.exit(main())
