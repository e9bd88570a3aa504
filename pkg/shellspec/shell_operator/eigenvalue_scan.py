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


"""eigenvalue_scan

The eigenvalue_scan module searches the gap (-|m|, |m|) for discrete
eigenvalues of a δ-shell operator, i.e. for the real spectral parameters at
which the Birman-Schwinger operator 𝕀 + B C_z has a nontrivial kernel.
"""


# IMPORT

from abc import ABCMeta
from abc import abstractmethod
import logging

import numpy as np
from scipy.optimize import minimize_scalar

from shellspec.couplings import classify
from shellspec.kernels import SpectralParameter
from shellspec.shell_operator.boundary_operator import bs_operator
from shellspec.utils.python_utils import lock
from shellspec.utils.python_utils import ordered_parallel_map
from shellspec.utils.shellspec_exceptions import ShellSpecConfiningCouplingsException
from shellspec.utils.shellspec_exceptions import ShellSpecCriticalCouplingsException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidOperationException


# CLASSES

class ScanEigenvalue(object):
    """Gap eigenvalue found by a scan."""

    def __init__(self, z, sigma_min, multiplicity, grid_z):
        """Constructor.

        Args:
            z (float): Refined eigenvalue.
            sigma_min (float): Smallest singular value at z.
            multiplicity (int): Number of singular values below 10 σ_min.
            grid_z (float): Grid point whose local minimum was refined.
        """
        self._z = float(z)
        self._sigma_min = float(sigma_min)
        self._multiplicity = int(multiplicity)
        self._grid_z = float(grid_z)

    def get_z(self):
        return self._z

    def get_sigma_min(self):
        return self._sigma_min

    def get_multiplicity(self):
        return self._multiplicity

    def get_grid_z(self):
        return self._grid_z

    def __str__(self):
        return 'z = %.15g (sigma_min = %.3g, multiplicity %d)' % \
            (self._z, self._sigma_min, self._multiplicity)


class EigenvalueScan(object):
    """Scan of σ_min(𝕀 + B C_z) over a grid of the gap, followed by the
    refinement of its local minima.

    Grid points are evaluated on a pool of threads and merged in z order, so
    the results do not depend on scheduling.
    """

    DEFAULT_POINTS = 200
    """Default number of grid points."""

    DEFAULT_THRESHOLD = 1e-4
    """Default acceptance threshold on σ_min."""

    MARGIN_FACTOR = 1e-3
    """The grid stays at distance MARGIN_FACTOR·|m| from the gap edges."""

    REFINEMENT_TOLERANCE = 1e-10
    """Absolute tolerance of the refined eigenvalues."""

    _CRITICALITY_MARGIN = 1e-8

    _DUPLICATE_DISTANCE = 1e-8

    def __init__(self, disc, couplings, mass, points=DEFAULT_POINTS,
                 threshold=DEFAULT_THRESHOLD, margin=None, threads=1):
        """Constructor.

        Args:
            disc (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
            Quadrature of the curve.
            couplings (:class:`shellspec.couplings.Couplings`): Gauge-reduced
            couplings.
            mass (float): Mass m, nonzero.
            points (int): Number of grid points, at least 3.
            threshold (float): Acceptance threshold on σ_min.
            margin (float): Distance of the grid from the gap edges;
            MARGIN_FACTOR·|m| by default.
            threads (int): Number of worker threads.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if the gap is empty or the grid too small.
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidOperationException`
            if ω does not vanish.
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecConfiningCouplingsException`
            if the couplings are confining.
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecCriticalCouplingsException`
            if the couplings are critical.
        """
        if mass == 0:
            raise ShellSpecInvalidDataException(
                'The gap (-|m|, |m|) is empty for m = 0.')
        if int(points) < 3:
            raise ShellSpecInvalidDataException(
                'Eigenvalue scan needs at least 3 grid points.')
        if not couplings.omega_vanishes():
            raise ShellSpecInvalidOperationException(
                'Eigenvalue scan needs gauge-reduced couplings.')
        report = classify(couplings)
        if report.is_confining():
            raise ShellSpecConfiningCouplingsException(
                'Confining couplings decouple the operator; the shell '
                'eigenvalue scan does not apply.')
        criticality = np.atleast_1d(report.get_criticality())
        if np.min(np.abs(criticality)) < self._CRITICALITY_MARGIN \
            or report.is_critical():
            raise ShellSpecCriticalCouplingsException(
                'Critical couplings are rejected by the eigenvalue scan.')
        self._disc = disc
        self._couplings = couplings
        self._mass = float(mass)
        self._points = int(points)
        self._threshold = float(threshold)
        self._margin = self.MARGIN_FACTOR * abs(self._mass) \
            if margin is None else float(margin)
        self._threads = int(threads) if threads else 1
        self._listeners = []
        self._grid = None
        self._sigma = None
        self._logger = logging.getLogger('ShellSpec')

    def add_listener(self, listener):
        """Add a listener.

        Args:
            listener (:class:`shellspec.shell_operator.eigenvalue_scan.EigenvalueScanListener`):
            Listener to be added.
        """
        if listener is not None:
            with lock(self):
                if not listener in self._listeners:
                    self._listeners.append(listener)

    def remove_listener(self, listener):
        """Remove a listener.

        Args:
            listener (:class:`shellspec.shell_operator.eigenvalue_scan.EigenvalueScanListener`):
            Listener to be removed.
        """
        if listener is not None:
            with lock(self):
                if listener in self._listeners:
                    self._listeners.remove(listener)

    def get_grid(self):
        """Get the scanned grid, None before :meth:`run`."""
        return self._grid

    def get_sigma_values(self):
        """Get σ_min on the grid, None before :meth:`run`."""
        return self._sigma

    def get_discretization(self):
        return self._disc

    def sigma_min(self, z):
        """Get σ_min(𝕀 + B C_z) at a real spectral parameter.

        Args:
            z (float): Point of the gap.

        Returns:
            float: The smallest singular value.
        """
        sp = SpectralParameter(z, self._mass)
        return bs_operator(self._disc, sp, self._couplings) \
            .smallest_singular_value()

    def run(self):
        """Scan the gap and refine the eigenvalues.

        Returns:
            list: :class:`shellspec.shell_operator.eigenvalue_scan.ScanEigenvalue`
            objects, ascending in z.
        """
        edge = abs(self._mass) - self._margin
        grid = np.linspace(-edge, edge, self._points)
        sigma = np.array(ordered_parallel_map(self.sigma_min, grid,
                                              self._threads))
        self._grid = grid
        self._sigma = sigma
        for z, value in zip(grid, sigma):
            self._notify_scan_point(z, value)
        slope = np.max(np.abs(np.diff(sigma)) / np.diff(grid))
        self._logger.info('Scan of %d points, largest slope of sigma_min '
                          '%.3g.' % (self._points, slope))

        candidates = []
        for i in range(self._points):
            left = sigma[i - 1] if i > 0 else np.inf
            right = sigma[i + 1] if i < self._points - 1 else np.inf
            if sigma[i] <= left and sigma[i] <= right:
                candidates.append(i)
        refined = ordered_parallel_map(
            lambda i: self._refine(grid, i), candidates, self._threads)

        found = []
        for i, (z, value) in zip(candidates, refined):
            if value >= self._threshold:
                self._logger.info('Local minimum %.3g of sigma_min at z = '
                                  '%.6g discarded.' % (value, z))
                continue
            if any(abs(z - e.get_z()) < self._DUPLICATE_DISTANCE
                   for e in found):
                continue
            operator = bs_operator(self._disc,
                                   SpectralParameter(z, self._mass),
                                   self._couplings)
            eigenvalue = ScanEigenvalue(z, operator.smallest_singular_value(),
                                        operator.multiplicity_estimate(),
                                        grid[i])
            found.append(eigenvalue)
            self._notify_eigenvalue_found(eigenvalue)
        return sorted(found, key=lambda e: e.get_z())

    def _refine(self, grid, i):
        lower = grid[max(i - 1, 0)]
        upper = grid[min(i + 1, len(grid) - 1)]
        result = minimize_scalar(self.sigma_min, bounds=(lower, upper),
                                 method='bounded',
                                 options={'xatol': self.REFINEMENT_TOLERANCE})
        return float(result.x), float(result.fun)

    def _notify_scan_point(self, z, sigma_min):
        for listener in list(self._listeners):
            listener.on_scan_point(self, z, sigma_min)

    def _notify_eigenvalue_found(self, eigenvalue):
        for listener in list(self._listeners):
            listener.on_eigenvalue_found(self, eigenvalue)


# INTERFACES

class EigenvalueScanListener(object):
    """Interface used by the
    :class:`shellspec.shell_operator.eigenvalue_scan.EigenvalueScan` class to
    notify the progress of a scan.
    """
    __metaclass__ = ABCMeta

    @abstractmethod
    def on_scan_point(self, scan, z, sigma_min):
        """To be called for every grid point, in ascending z order.

        Args:
            scan (:class:`shellspec.shell_operator.eigenvalue_scan.EigenvalueScan`):
            Scan in progress.
            z (float): Grid point.
            sigma_min (float): Smallest singular value at z.

        Raises:
            :exc:`NotImplementedError` if the method has not been implemented.
        """
        raise NotImplementedError('You must implement "on_scan_point()" to '
                                  'use the "EigenvalueScanListener" class.')

    @abstractmethod
    def on_eigenvalue_found(self, scan, eigenvalue):
        """To be called whenever a refined minimum is accepted.

        Args:
            scan (:class:`shellspec.shell_operator.eigenvalue_scan.EigenvalueScan`):
            Scan in progress.
            eigenvalue (:class:`shellspec.shell_operator.eigenvalue_scan.ScanEigenvalue`):
            Eigenvalue found.

        Raises:
            :exc:`NotImplementedError` if the method has not been implemented.
        """
        raise NotImplementedError('You must implement "on_eigenvalue_found()" '
                                  'to use the "EigenvalueScanListener" class.')


# FUNCTIONS

def eigenvalue_scan(disc, c, m, points=EigenvalueScan.DEFAULT_POINTS,
                    threshold=EigenvalueScan.DEFAULT_THRESHOLD, margin=None,
                    threads=1):
    """Search the gap for eigenvalues of the δ-shell operator.

    Args:
        disc (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
        Quadrature of the curve.
        c (:class:`shellspec.couplings.Couplings`): Gauge-reduced couplings.
        m (float): Mass.
        points (int): Number of grid points.
        threshold (float): Acceptance threshold on σ_min.
        margin (float): Distance of the grid from the gap edges.
        threads (int): Number of worker threads.

    Returns:
        list: :class:`shellspec.shell_operator.eigenvalue_scan.ScanEigenvalue`
        objects, ascending in z.
    """
    return EigenvalueScan(disc, c, m, points, threshold, margin,
                          threads).run()
