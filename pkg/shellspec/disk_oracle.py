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


"""disk_oracle

The disk_oracle module computes semi-analytic spectra on the disk of radius R,
independent of the boundary integral machinery: gap eigenvalues of δ-shell
operators by angular mode matching, Dirichlet-Laplacian eigenvalues from
Bessel zeros, and the spectrum of the critical zig-zag interaction.

Separation of variables: in channel n ∈ ℤ the spinor
ψ = (f(r) e^{inθ}, -i G(r) e^{i(n+1)θ}) solves (D₀ - z)ψ = 0 off r = R iff

    f' = (n/r) f + (z + m) G,    G' = -(z - m) f - ((n + 1)/r) G.

With k = √(m² - z²) the regular interior solution is
((z + m) I_n(kr), k I_{n+1}(kr)) and the decaying exterior one is
((z + m) K_n(kr), -k K_{n+1}(kr)). In the (f, G) coordinates the transmission
matrix R becomes the real matrix

    R̃ = 4/(4 + d) [[(4 - d)/4 - λ, η - τ], [-(η + τ), (4 - d)/4 + λ]],

and z is an eigenvalue iff the interior solution at r = R is parallel to R̃
times the exterior one.
"""


# IMPORT

import logging

import numpy as np
from scipy.optimize import brentq
from scipy.special import ive
from scipy.special import jn_zeros
from scipy.special import jv
from scipy.special import jvp
from scipy.special import kve

from shellspec.utils.python_utils import ordered_parallel_map
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidOperationException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidSpectralParameterException
from shellspec.utils.shellspec_exceptions import ShellSpecNumericalFailureException


# CONSTANTS

DEFAULT_MAX_CHANNEL = 40
"""Channels |n| ≤ DEFAULT_MAX_CHANNEL are searched by default."""

DEFAULT_GRID_POINTS = 400
"""Grid points per channel used to bracket roots of the dispersion."""

_ROOT_TOLERANCE = 1e-12

_LOGGER = logging.getLogger('ShellSpec')


# CLASSES

class DiskProblem(object):
    """δ-shell operator on the circle of radius R in one angular channel."""

    def __init__(self, R, m, couplings, n):
        """Constructor.

        Args:
            R (float): Radius, positive.
            m (float): Mass.
            couplings (:class:`shellspec.couplings.Couplings`): Constant
            couplings with ω = 0.
            n (int): Angular channel.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if the radius is not positive or n is not an integer.
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidOperationException`
            if the couplings are not constant or ω does not vanish.
        """
        if not R > 0:
            raise ShellSpecInvalidDataException(
                'Disk radius must be positive, got %r.' % (R,))
        if int(n) != n:
            raise ShellSpecInvalidDataException(
                'Angular channel must be an integer, got %r.' % (n,))
        eta, tau, lam, omega = couplings.get_constants()
        if omega != 0.0:
            raise ShellSpecInvalidOperationException(
                'Disk oracle needs gauge-reduced couplings.')
        self._R = float(R)
        self._m = float(m)
        self._couplings = couplings
        self._n = int(n)
        d = eta ** 2 - tau ** 2 - lam ** 2
        c = (4.0 - d) / 4.0
        self._transmission = 4.0 / (4.0 + d) * np.array(
            [[c - lam, eta - tau], [-(eta + tau), c + lam]])

    def get_radius(self):
        return self._R

    def get_mass(self):
        return self._m

    def get_channel(self):
        return self._n

    def get_transmission(self):
        """Get the transmission matrix R̃ in (f, G) coordinates."""
        return self._transmission

    def channel_solutions(self, z):
        """Get the interior and exterior channel solutions at r = R, each
        normalized to unit length.

        Args:
            z (float): Point of the gap.

        Returns:
            tuple: Real 2-vectors (u_in, u_out) in (f, G) coordinates.
        """
        self._wavenumber(z)
        return (interior_solution(self._n, self._m, z, self._R),
                exterior_solution(self._n, self._m, z, self._R))

    def dispersion(self, z):
        """Get the matching determinant det[u_in, R̃ u_out] at r = R.

        Args:
            z (float): Point of the gap.

        Returns:
            float: The determinant; its zeros are the eigenvalues of the
            channel.
        """
        u_in, u_out = self.channel_solutions(z)
        v = self._transmission.dot(u_out)
        return float(u_in[0] * v[1] - u_in[1] * v[0])

    def _wavenumber(self, z):
        z = complex(z)
        if z.imag != 0.0 or not abs(z.real) < abs(self._m):
            raise ShellSpecInvalidSpectralParameterException(
                'Mode dispersion needs a real z in the gap, got %s.' % z)
        return np.sqrt(self._m ** 2 - z.real ** 2)

    def roots(self, points=DEFAULT_GRID_POINTS, margin=None):
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
        values = np.array([self.dispersion(z) for z in grid])
        roots = []
        for i in range(points - 1):
            if values[i] == 0.0:
                roots.append(float(grid[i]))
            elif values[i] * values[i + 1] < 0.0:
                roots.append(float(brentq(self.dispersion, grid[i],
                                          grid[i + 1], xtol=_ROOT_TOLERANCE)))
        if values[-1] == 0.0:
            roots.append(float(grid[-1]))
        return roots


class DiskEigenvalue(object):
    """Gap eigenvalue found by the disk oracle."""

    def __init__(self, z, channel):
        self._z = float(z)
        self._channel = int(channel)

    def get_z(self):
        return self._z

    def get_channel(self):
        return self._channel

    def __str__(self):
        return 'z = %.15g (channel %d)' % (self._z, self._channel)


class ZigzagSpectrum(object):
    """Spectrum of the zig-zag interaction (0, 0, ±2) on the disk.

    The continuous spectrum is (-∞, -|m|] ∪ [|m|, ∞); ±m are eigenvalues of
    infinite multiplicity; every Dirichlet eigenvalue λ_k of the disk gives the
    embedded eigenvalues ±√(m² + λ_k).
    """

    def __init__(self, m, dirichlet, orders, indices):
        self._m = float(m)
        self._dirichlet = np.asarray(dirichlet, dtype=float)
        self._orders = list(orders)
        self._indices = list(indices)

    def get_mass(self):
        return self._m

    def get_dirichlet_eigenvalues(self):
        return self._dirichlet

    def get_embedded_eigenvalues(self):
        """Get the positive embedded eigenvalues √(m² + λ_k), ascending.

        Returns:
            :class:`numpy.ndarray`: The eigenvalues; their negatives are
            eigenvalues too.
        """
        return np.sqrt(self._m ** 2 + self._dirichlet)

    def get_flat_eigenvalues(self):
        """Get the eigenvalues of infinite multiplicity.

        Returns:
            tuple: (-|m|, |m|).
        """
        return (-abs(self._m), abs(self._m))

    def get_continuous_spectrum(self):
        return '(-inf, %.15g] U [%.15g, inf)' % (-abs(self._m), abs(self._m))

    def rows(self):
        """Get one record per Dirichlet eigenvalue.

        Returns:
            list: Tuples (eigenvalue, negative eigenvalue, Dirichlet
            eigenvalue, Bessel order, Bessel zero index).
        """
        positive = self.get_embedded_eigenvalues()
        return [(positive[i], -positive[i], self._dirichlet[i],
                 self._orders[i], self._indices[i])
                for i in range(len(positive))]


# FUNCTIONS

def interior_solution(n, m, z, r):
    """Get the regular channel solution ((z + m) I_n(kr), k I_{n+1}(kr)),
    normalized to unit length.

    Args:
        n (int): Angular channel.
        m (float): Mass.
        z (:class:`numpy.ndarray`): Points of the gap.
        r (float): Radius.

    Returns:
        :class:`numpy.ndarray`: Shape z.shape + (2,).
    """
    z = np.asarray(z, dtype=float)
    k = np.sqrt(m ** 2 - z ** 2)
    u = np.stack([(z + m) * ive(n, k * r), k * ive(n + 1, k * r)], axis=-1)
    return u / np.linalg.norm(u, axis=-1)[..., None]


def exterior_solution(n, m, z, r):
    """Get the decaying channel solution ((z + m) K_n(kr), -k K_{n+1}(kr)),
    normalized to unit length.

    Args:
        n (int): Angular channel.
        m (float): Mass.
        z (:class:`numpy.ndarray`): Points of the gap.
        r (float): Radius.

    Returns:
        :class:`numpy.ndarray`: Shape z.shape + (2,).
    """
    z = np.asarray(z, dtype=float)
    k = np.sqrt(m ** 2 - z ** 2)
    u = np.stack([(z + m) * kve(n, k * r), -k * kve(n + 1, k * r)], axis=-1)
    return u / np.linalg.norm(u, axis=-1)[..., None]


def mode_dispersion(dp, z):
    """Get the matching determinant of a disk problem at z.

    Args:
        dp (:class:`shellspec.disk_oracle.DiskProblem`): Disk problem.
        z (float): Real point of the gap.

    Returns:
        float: The determinant.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidSpectralParameterException`
        if z is not a real point of the gap.
    """
    return dp.dispersion(z)


def mode_boundary_operator(R, m, z, n):
    """Get C_z restricted to the angular channel n of the circle of radius R.

    Densities of the channel are (a e^{inθ}, b e^{i(n+1)θ}); C_z maps them to
    densities of the same form.

    Args:
        R (float): Radius.
        m (float): Mass.
        z (float): Real point of the gap.
        n (int): Angular channel.

    Returns:
        :class:`numpy.ndarray`: 2x2 complex matrix acting on (a, b).
    """
    k = np.sqrt(m ** 2 - z ** 2)
    x = k * R
    u_in = np.array([(z + m) * ive(n, x), -1j * k * ive(n + 1, x)])
    u_out = np.array([(z + m) * kve(n, x), 1j * k * kve(n + 1, x)])
    # The scalings of ive and kve cancel in α u_in and β u_out.
    system = np.column_stack([u_in, -u_out])
    result = np.zeros((2, 2), dtype=complex)
    for column, (a, b) in enumerate(((1.0, 0.0), (0.0, 1.0))):
        try:
            alpha, beta = np.linalg.solve(system, -1j * np.array([b, a]))
        except np.linalg.LinAlgError:
            raise ShellSpecNumericalFailureException(
                'Channel %d solutions are dependent at z = %.15g.' % (n, z))
        result[:, column] = 0.5 * (alpha * u_in + beta * u_out)
    return result


def disk_eigenvalues(R, m, couplings, max_channel=DEFAULT_MAX_CHANNEL,
                     points=DEFAULT_GRID_POINTS, threads=1):
    """Enumerate the gap eigenvalues of a δ-shell operator on the disk.

    Args:
        R (float): Radius.
        m (float): Mass, nonzero.
        couplings (:class:`shellspec.couplings.Couplings`): Constant couplings
        with ω = 0.
        max_channel (int): Channels -max_channel ≤ n ≤ max_channel are
        searched.
        points (int): Grid points per channel.
        threads (int): Number of worker threads.

    Returns:
        list: :class:`shellspec.disk_oracle.DiskEigenvalue` objects ascending
        in z.
    """
    channels = list(range(-int(max_channel), int(max_channel) + 1))
    found = ordered_parallel_map(
        lambda n: DiskProblem(R, m, couplings, n).roots(points),
        channels, threads)
    result = []
    for n, roots in zip(channels, found):
        result.extend(DiskEigenvalue(z, n) for z in roots)
    for n in (channels[0], channels[-1]):
        if found[channels.index(n)]:
            _LOGGER.warning('Eigenvalues found in the outermost channel %d; '
                            'consider more channels.' % n)
    return sorted(result, key=lambda e: (e.get_z(), e.get_channel()))


def bessel_zero(n, k):
    """Get the k-th positive zero j_{n,k} of the Bessel function J_n.

    The zero from :func:`scipy.special.jn_zeros` is polished by Newton steps.

    Args:
        n (int): Order, non-negative.
        k (int): Index, at least 1.

    Returns:
        float: The zero.
    """
    if int(n) != n or n < 0 or int(k) != k or k < 1:
        raise ShellSpecInvalidDataException(
            'Bessel zero needs n >= 0 and k >= 1, got %r, %r.' % (n, k))
    root = float(jn_zeros(int(n), int(k))[-1])
    for _ in range(3):
        root -= jv(n, root) / jvp(n, root)
    return root


def disk_dirichlet_eigenvalues(R, count, with_labels=False):
    """Get the first Dirichlet-Laplacian eigenvalues of the disk of radius R.

    Eigenvalues are (j_{n,k}/R)², repeated twice for n ≥ 1.

    Args:
        R (float): Radius.
        count (int): Number of eigenvalues, at least 1.
        with_labels (bool): Also return the Bessel orders and zero indices.

    Returns:
        list: Ascending eigenvalues, counted with multiplicity; with labels, a
        tuple (eigenvalues, orders, indices).
    """
    if int(count) != count or count < 1:
        raise ShellSpecInvalidDataException(
            'Number of eigenvalues must be a positive integer, got %r.'
            % (count,))
    count = int(count)
    labelled = []
    for n in range(count + 1):
        for k, root in enumerate(jn_zeros(n, count), start=1):
            labelled.extend([(root, n, k)] * (1 if n == 0 else 2))
    labelled.sort(key=lambda item: item[0])
    labelled = labelled[:count]
    eigenvalues = [(bessel_zero(n, k) / R) ** 2 for _, n, k in labelled]
    if with_labels:
        return (eigenvalues, [n for _, n, _ in labelled],
                [k for _, _, k in labelled])
    return eigenvalues


def zigzag_spectrum(R, m, count):
    """Get the spectrum of the zig-zag interaction on the disk.

    Args:
        R (float): Radius.
        m (float): Mass.
        count (int): Number of Dirichlet eigenvalues used.

    Returns:
        :class:`shellspec.disk_oracle.ZigzagSpectrum`: The spectrum.
    """
    eigenvalues, orders, indices = disk_dirichlet_eigenvalues(R, count, True)
    return ZigzagSpectrum(m, eigenvalues, orders, indices)


def antiholomorphic_kernel_check(m, k, points=100, seed=0):
    """Check that f = (0, z̄^k) solves (D₀ + m)f = 0 in the unit disk.

    Derivatives are the exact ones of the polynomial.

    Args:
        m (float): Mass.
        k (int): Degree, 0 ≤ k ≤ 20.
        points (int): Number of sample points.
        seed (int): Seed of the sample points.

    Returns:
        float: Largest pointwise residual.
    """
    z = _sample_points(k, points, seed, 0.0, 1.0)
    g = np.conj(z) ** k
    dg = k * np.conj(z) ** (k - 1) if k > 0 else np.zeros_like(z)
    d1, d2 = dg, -1j * dg
    # (D₀ + m)(0, g) = (-i(∂₁g - i∂₂g), -mg + mg)
    first = -1j * (d1 - 1j * d2)
    second = -m * g + m * g
    return float(np.max(np.hypot(np.abs(first), np.abs(second))))


def holomorphic_exterior_check(m, k, points=100, seed=0, center=0.0):
    """Check that f = ((z - z₀)^{-k}, 0) solves (D₀ - m)f = 0 outside the
    unit disk, for z₀ inside it.

    Args:
        m (float): Mass.
        k (int): Degree, 2 ≤ k ≤ 20.
        points (int): Number of sample points.
        seed (int): Seed of the sample points.
        center (complex): The pole z₀.

    Returns:
        float: Largest pointwise residual.
    """
    if k < 2:
        raise ShellSpecInvalidDataException(
            'Exterior check needs k >= 2, got %r.' % (k,))
    z = _sample_points(k, points, seed, 1.5, 3.0)
    h = (z - center) ** (-k)
    dh = -k * (z - center) ** (-k - 1)
    d1, d2 = dh, 1j * dh
    # (D₀ - m)(h, 0) = (mh - mh, -i(∂₁h + i∂₂h))
    first = m * h - m * h
    second = -1j * (d1 + 1j * d2)
    return float(np.max(np.hypot(np.abs(first), np.abs(second))))


# UTILITY FUNCTIONS

def _sample_points(k, points, seed, inner, outer):
    if int(k) != k or k < 0 or k > 20:
        raise ShellSpecInvalidDataException(
            'Polynomial degree must be an integer in [0, 20], got %r.' % (k,))
    rng = np.random.default_rng(seed)
    radius = np.sqrt(rng.uniform(inner ** 2, outer ** 2, points))
    angle = rng.uniform(0.0, 2.0 * np.pi, points)
    return radius * np.exp(1j * angle)
