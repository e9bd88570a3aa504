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


"""radial_shell_problem

The radial_shell_problem module computes gap eigenvalues of the operators
D₀ + V_ε on the disk, where V_ε = B h_ε(r - R) is a regular potential of
width ε around the circle of radius R, and compares them with the δ-shell
eigenvalues of the renormalized couplings as ε → 0.

In channel n the spinor (f e^{inθ}, -i G e^{i(n+1)θ}) solves
(D₀ + V_ε - z)ψ = 0 iff, with h = h_ε(r - R),

    f' = (n/r + λh) f + (z + m - h(η - τ)) G,
    G' = -(z - m - h(η + τ)) f - ((n + 1)/r + λh) G.

Outside the layer the solutions are the Bessel ones of
:mod:`shellspec.disk_oracle`; inside it the system is integrated from
r = R - ε to r = R + ε.
"""


# IMPORT

import logging

import numpy as np
from scipy.optimize import brentq

from shellspec.couplings import renormalize_forward
from shellspec.disk_oracle import DEFAULT_GRID_POINTS
from shellspec.disk_oracle import DiskProblem
from shellspec.disk_oracle import exterior_solution
from shellspec.disk_oracle import interior_solution
from shellspec.spin_algebra import exp2x2
from shellspec.utils.python_utils import ordered_parallel_map
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidOperationException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidSpectralParameterException
from shellspec.utils.shellspec_exceptions import ShellSpecNumericalFailureException


# CONSTANTS

LAYER_STEPS = 400
"""Minimum number of integration steps through the layer, so that the step
does not exceed ε/200."""

MAX_WIDTH_RATIO = 0.9
"""Largest admissible ratio ε/R."""

DEFAULT_EPSILONS = (1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4)
"""Widths of the default convergence study."""

DEFAULT_STUDY_CHANNELS = 3
"""Channels |n| ≤ DEFAULT_STUDY_CHANNELS are studied by default."""

_ROOT_TOLERANCE = 1e-12

_GAUSS_OFFSET = np.sqrt(3.0) / 6.0


# CLASSES

class RadialShellProblem(object):
    """Operator D₀ + V_ε on the disk in one angular channel."""

    def __init__(self, R, m, couplings, epsilon, profile, n, steps=LAYER_STEPS):
        """Constructor.

        Args:
            R (float): Radius of the circle, positive.
            m (float): Mass, nonzero.
            couplings (:class:`shellspec.couplings.Couplings`): Constant
            couplings with ω = 0.
            epsilon (float): Width ε of the layer, 0 < ε < 0.9 R.
            profile (:class:`shellspec.approximation.profile.Profile`):
            Transverse profile.
            n (int): Angular channel.
            steps (int): Integration steps through the layer, at least
            :data:`LAYER_STEPS`.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if a parameter is out of range or n is not an integer.
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidOperationException`
            if the couplings are not constant or ω does not vanish.
        """
        if not R > 0:
            raise ShellSpecInvalidDataException(
                'Disk radius must be positive, got %r.' % (R,))
        if m == 0:
            raise ShellSpecInvalidDataException(
                'Radial eigenvalues need a nonzero mass.')
        if not 0.0 < epsilon < MAX_WIDTH_RATIO * R:
            raise ShellSpecInvalidDataException(
                'Width %r is not in (0, %.6g).' % (epsilon, MAX_WIDTH_RATIO * R))
        if int(n) != n:
            raise ShellSpecInvalidDataException(
                'Angular channel must be an integer, got %r.' % (n,))
        if int(steps) != steps or steps < LAYER_STEPS:
            raise ShellSpecInvalidDataException(
                'At least %d steps through the layer are needed, got %r.'
                % (LAYER_STEPS, steps))
        eta, tau, lam, omega = couplings.get_constants()
        if omega != 0.0:
            raise ShellSpecInvalidOperationException(
                'Radial problem needs couplings with omega = 0.')
        self._R = float(R)
        self._m = float(m)
        self._couplings = couplings
        self._eta, self._tau, self._lam = eta, tau, lam
        self._epsilon = float(epsilon)
        self._profile = profile
        self._n = int(n)
        self._steps = int(steps)
        # Piecewise-constant profiles go through the Magnus scheme, which
        # never samples h at the jumps.
        self._magnus = bool(profile.get_jumps())

    def get_radius(self):
        return self._R

    def get_mass(self):
        return self._m

    def get_couplings(self):
        return self._couplings

    def get_epsilon(self):
        return self._epsilon

    def get_profile(self):
        return self._profile

    def get_channel(self):
        return self._n

    def get_step(self):
        return 2.0 * self._epsilon / self._steps

    def generator(self, r, z):
        """Get the coefficient matrix of the channel system at radius r.

        Args:
            r (float): Radius inside the layer.
            z (:class:`numpy.ndarray`): Points of the gap.

        Returns:
            :class:`numpy.ndarray`: Real matrices, shape z.shape + (2, 2).
        """
        z = np.asarray(z, dtype=float)
        h = float(self._profile.scaled(r - self._R, self._epsilon))
        A = np.empty(z.shape + (2, 2))
        A[..., 0, 0] = self._n / r + self._lam * h
        A[..., 0, 1] = z + self._m - h * (self._eta - self._tau)
        A[..., 1, 0] = -(z - self._m) + h * (self._eta + self._tau)
        A[..., 1, 1] = -(self._n + 1) / r - self._lam * h
        return A

    def layer_transfer(self, z):
        """Get the transfer matrix of the channel system through the layer.

        The matrix maps (f, G) at r = R - ε to (f, G) at r = R + ε. As ε → 0
        it tends to the inverse of the transmission matrix R̃ of the
        renormalized couplings.

        Args:
            z (:class:`numpy.ndarray`): Points of the gap.

        Returns:
            :class:`numpy.ndarray`: Shape z.shape + (2, 2).

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecNumericalFailureException`
            if the integration overflows.
        """
        z = np.asarray(z, dtype=float)
        dr = self.get_step()
        start = self._R - self._epsilon
        transfer = np.broadcast_to(np.eye(2), z.shape + (2, 2)).copy()
        for i in range(self._steps):
            r = start + i * dr
            if self._magnus:
                transfer = np.matmul(self._magnus_step(r, dr, z), transfer)
            else:
                transfer = self._runge_kutta_step(r, dr, z, transfer)
        if not np.all(np.isfinite(transfer)):
            raise ShellSpecNumericalFailureException(
                'Layer transfer overflowed for channel %d at width %.3g.'
                % (self._n, self._epsilon))
        return transfer

    def dispersion(self, z):
        """Get the matching determinant of the channel.

        The regular interior solution is carried through the layer and
        compared with the decaying exterior one at r = R + ε.

        Args:
            z (:class:`numpy.ndarray`): Points of the gap.

        Returns:
            :class:`numpy.ndarray`: The determinants; their zeros are the
            eigenvalues of the channel.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidSpectralParameterException`
            if a point is not in the gap.
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecNumericalFailureException`
            if the determinant is not finite.
        """
        z = np.asarray(z, dtype=float)
        if np.any(np.abs(z) >= abs(self._m)):
            raise ShellSpecInvalidSpectralParameterException(
                'Radial dispersion needs points of the gap (-%.15g, %.15g).'
                % (abs(self._m), abs(self._m)))
        u_in = interior_solution(self._n, self._m, z, self._R - self._epsilon)
        u_out = exterior_solution(self._n, self._m, z, self._R + self._epsilon)
        v = np.matmul(self.layer_transfer(z), u_in[..., None])[..., 0]
        v = v / np.linalg.norm(v, axis=-1)[..., None]
        value = v[..., 0] * u_out[..., 1] - v[..., 1] * u_out[..., 0]
        if not np.all(np.isfinite(value)):
            raise ShellSpecNumericalFailureException(
                'Radial dispersion is not finite for channel %d.' % self._n)
        return value

    def eigenvalues(self, points=DEFAULT_GRID_POINTS, margin=None):
        """Find the zeros of the dispersion in the gap.

        Args:
            points (int): Grid points bracketing sign changes.
            margin (float): Distance of the grid from the gap edges,
            1e-3·|m| by default.

        Returns:
            list: Eigenvalues of the channel, ascending.
        """
        if margin is None:
            margin = 1e-3 * abs(self._m)
        edge = abs(self._m) - margin
        grid = np.linspace(-edge, edge, points)
        values = self.dispersion(grid)
        scalar = lambda z: float(self.dispersion(np.array(z)))
        roots = []
        for i in range(points - 1):
            if values[i] == 0.0:
                roots.append(float(grid[i]))
            elif values[i] * values[i + 1] < 0.0:
                roots.append(float(brentq(scalar, grid[i], grid[i + 1],
                                          xtol=_ROOT_TOLERANCE)))
        if values[-1] == 0.0:
            roots.append(float(grid[-1]))
        return roots

    def _runge_kutta_step(self, r, dr, z, transfer):
        k1 = np.matmul(self.generator(r, z), transfer)
        middle = self.generator(r + 0.5 * dr, z)
        k2 = np.matmul(middle, transfer + 0.5 * dr * k1)
        k3 = np.matmul(middle, transfer + 0.5 * dr * k2)
        k4 = np.matmul(self.generator(r + dr, z), transfer + dr * k3)
        return transfer + dr / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    def _magnus_step(self, r, dr, z):
        # Fourth-order Magnus expansion on the two Gauss points of the step.
        A1 = self.generator(r + (0.5 - _GAUSS_OFFSET) * dr, z)
        A2 = self.generator(r + (0.5 + _GAUSS_OFFSET) * dr, z)
        commutator = np.matmul(A2, A1) - np.matmul(A1, A2)
        omega = 0.5 * dr * (A1 + A2) + np.sqrt(3.0) / 12.0 * dr ** 2 * commutator
        return exp2x2(omega).real


class ApproximationRow(object):
    """Eigenvalue of one width and channel, next to its δ-shell limit."""

    def __init__(self, epsilon, channel, eigenvalue, oracle_limit, profile):
        self._epsilon = float(epsilon)
        self._channel = int(channel)
        self._eigenvalue = float(eigenvalue)
        self._oracle_limit = float(oracle_limit)
        self._profile = str(profile)

    def get_epsilon(self):
        return self._epsilon

    def get_channel(self):
        return self._channel

    def get_eigenvalue(self):
        return self._eigenvalue

    def get_oracle_limit(self):
        return self._oracle_limit

    def get_abs_err(self):
        return abs(self._eigenvalue - self._oracle_limit)

    def get_profile(self):
        return self._profile

    def as_tuple(self):
        """Get the row in output order (epsilon, channel, eigenvalue,
        oracle_limit, abs_err, profile)."""
        return (self._epsilon, self._channel, self._eigenvalue,
                self._oracle_limit, self.get_abs_err(), self._profile)


class ApproximationStudy(object):
    """Convergence of radial-channel eigenvalues along a sequence of widths.

    For every width and channel the eigenvalues of D₀ + V_ε are matched to
    the nearest disk-oracle eigenvalue of the renormalized couplings in the
    same channel. The eigenvalues of the two smallest widths are combined by
    first-order Richardson extrapolation.
    """

    HEADER = ('epsilon', 'channel', 'eigenvalue', 'oracle_limit', 'abs_err',
              'profile')
    """Column names of the study rows."""

    def __init__(self, R, m, couplings, profile, epsilons=DEFAULT_EPSILONS,
                 max_channel=DEFAULT_STUDY_CHANNELS,
                 points=DEFAULT_GRID_POINTS, threads=1,
                 coupling_schedule=None):
        """Constructor.

        Args:
            R (float): Radius of the circle.
            m (float): Mass, nonzero.
            couplings (:class:`shellspec.couplings.Couplings`): Constant
            couplings with ω = 0 of the approximating potentials.
            profile (:class:`shellspec.approximation.profile.Profile`):
            Transverse profile.
            epsilons (list): Widths, in decreasing order.
            max_channel (int): Channels -max_channel ≤ n ≤ max_channel are
            studied.
            points (int): Grid points per channel.
            threads (int): Number of worker threads.
            coupling_schedule (callable): Optional map ε ↦ Couplings used in
            place of the fixed couplings. No convergence is claimed for it;
            the oracle then follows the renormalized couplings of each width.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if the widths are empty or not decreasing.
        """
        epsilons = [float(e) for e in epsilons]
        if not epsilons or any(a <= b for a, b in zip(epsilons, epsilons[1:])):
            raise ShellSpecInvalidDataException(
                'Widths must be a non-empty decreasing sequence.')
        couplings.get_constants()
        self._R = float(R)
        self._m = float(m)
        self._couplings = couplings
        self._profile = profile
        self._epsilons = epsilons
        self._channels = list(range(-int(max_channel), int(max_channel) + 1))
        self._points = int(points)
        self._threads = threads
        self._schedule = coupling_schedule
        self._rows = None
        self._extrapolations = None
        self._logger = logging.getLogger('ShellSpec')

    def get_epsilons(self):
        return self._epsilons

    def get_channels(self):
        return self._channels

    def couplings_for(self, epsilon):
        """Get the couplings of the approximating potential of width ε."""
        if self._schedule is None:
            return self._couplings
        return self._schedule(epsilon)

    def oracle_limits(self, epsilon=None):
        """Get the δ-shell eigenvalues of the renormalized couplings.

        Args:
            epsilon (float): Width selecting the scheduled couplings; ignored
            without a schedule.

        Returns:
            dict: Channel ↦ ascending list of eigenvalues.
        """
        c = self._couplings if epsilon is None else self.couplings_for(epsilon)
        limit = renormalize_forward(c)
        found = ordered_parallel_map(
            lambda n: DiskProblem(self._R, self._m, limit, n).roots(
                self._points),
            self._channels, self._threads)
        return dict(zip(self._channels, found))

    def run(self):
        """Compute the study rows.

        Returns:
            list: :class:`ApproximationRow` objects ordered by decreasing
            width, then channel, then eigenvalue.
        """
        if self._schedule is not None:
            self._logger.info('Coupling schedule in use; oracle limits follow '
                              'the renormalized couplings of each width.')
            limits = dict((e, self.oracle_limits(e)) for e in self._epsilons)
        else:
            fixed = self.oracle_limits()
            limits = dict((e, fixed) for e in self._epsilons)
        tasks = [(e, n) for e in self._epsilons for n in self._channels]
        found = ordered_parallel_map(
            lambda task: RadialShellProblem(
                self._R, self._m, self.couplings_for(task[0]), task[0],
                self._profile, task[1]).eigenvalues(self._points),
            tasks, self._threads)
        rows = []
        for (epsilon, n), eigenvalues in zip(tasks, found):
            oracle = limits[epsilon][n]
            for value in eigenvalues:
                nearest = min(oracle, key=lambda z: abs(z - value)) \
                    if oracle else float('nan')
                rows.append(ApproximationRow(epsilon, n, value, nearest,
                                             self._profile))
            if len(eigenvalues) != len(oracle):
                self._logger.info(
                    'Channel %d at width %.3g has %d eigenvalues, the limit '
                    'has %d.' % (n, epsilon, len(eigenvalues), len(oracle)))
        self._rows = rows
        self._extrapolations = self._extrapolate(rows)
        for n, limit, value in self._extrapolations:
            self._logger.info('Channel %d: extrapolated eigenvalue %.12g, '
                              'limit %.12g.' % (n, value, limit))
        return rows

    def get_rows(self):
        """Get the rows of the last run, running the study if needed."""
        if self._rows is None:
            self.run()
        return self._rows

    def get_extrapolations(self):
        """Get the Richardson-extrapolated eigenvalues.

        Returns:
            list: Tuples (channel, oracle limit, extrapolated eigenvalue), one
            per limit eigenvalue tracked at the two smallest widths.
        """
        if self._extrapolations is None:
            self.run()
        return self._extrapolations

    def _extrapolate(self, rows):
        if len(self._epsilons) < 2:
            return []
        e1, e2 = self._epsilons[-2], self._epsilons[-1]
        tracked = {}
        for row in rows:
            if np.isnan(row.get_oracle_limit()):
                continue
            key = (row.get_channel(), row.get_oracle_limit())
            tracked.setdefault(key, {})[row.get_epsilon()] = row.get_eigenvalue()
        result = []
        for (n, limit), values in sorted(tracked.items()):
            if e1 in values and e2 in values:
                v1, v2 = values[e1], values[e2]
                result.append((n, limit, v2 + (v2 - v1) * e2 / (e1 - e2)))
        return result


# FUNCTIONS

def radial_channel_eigenvalues(rp, points=DEFAULT_GRID_POINTS, margin=None):
    """Get the gap eigenvalues of D₀ + V_ε in one channel.

    Args:
        rp (:class:`RadialShellProblem`): The channel problem.
        points (int): Grid points bracketing sign changes.
        margin (float): Distance of the grid from the gap edges.

    Returns:
        list: Ascending eigenvalues.
    """
    return rp.eigenvalues(points, margin)
