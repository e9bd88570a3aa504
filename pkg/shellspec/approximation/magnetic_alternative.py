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


"""magnetic_alternative

The magnetic_alternative module approximates the purely magnetic δ-shell
interaction (0, 0, λ̂) by the regular magnetic potentials
λ(σ₂, -σ₁)·∇χ_ε, where χ_ε is the radial mollification of the indicator of
the exterior of the disk. Since ∇χ_ε = h_ε(r - R) n, the potential equals
λ h_ε σ·t, and the strength λ = 2 artanh(λ̂/2) produces the limit λ̂ without
further renormalization.
"""


# IMPORT

import logging

import numpy as np

from shellspec.approximation.profile import bump_profile
from shellspec.approximation.radial_shell_problem import RadialShellProblem
from shellspec.couplings import Couplings
from shellspec.disk_oracle import DEFAULT_GRID_POINTS
from shellspec.disk_oracle import DiskEigenvalue
from shellspec.disk_oracle import DiskProblem
from shellspec.disk_oracle import disk_eigenvalues
from shellspec.spin_algebra import SIGMA_1
from shellspec.spin_algebra import SIGMA_2
from shellspec.spin_algebra import SIGMA_3
from shellspec.spin_algebra import exp2x2
from shellspec.utils.python_utils import ordered_parallel_map
from shellspec.utils.shellspec_exceptions import ShellSpecExceptionalCouplingsException
from shellspec.utils.shellspec_exceptions import ShellSpecNumericalFailureException


# CONSTANTS

DEFAULT_MAGNETIC_CHANNELS = 3
"""Channels |n| ≤ DEFAULT_MAGNETIC_CHANNELS are searched by default."""

_RESIDUAL_SAMPLES = 64


# CLASSES

class MagneticAlternative(object):
    """Magnetic approximation of the shell interaction (0, 0, λ̂) on the
    disk."""

    def __init__(self, R, m, lam_hat, epsilon, profile=None,
                 max_channel=DEFAULT_MAGNETIC_CHANNELS):
        """Constructor.

        Args:
            R (float): Radius of the disk.
            m (float): Mass, nonzero.
            lam_hat (float): Limit coupling λ̂, |λ̂| < 2.
            epsilon (float): Width of the mollifier.
            profile (:class:`shellspec.approximation.profile.Profile`):
            Mollifier profile, the standard bump by default.
            max_channel (int): Channels -max_channel ≤ n ≤ max_channel are
            searched.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecExceptionalCouplingsException`
            if |λ̂| ≥ 2.
        """
        if not abs(lam_hat) < 2.0:
            raise ShellSpecExceptionalCouplingsException(
                'Magnetic approximation needs |lambda_hat| < 2, got %r.'
                % (lam_hat,))
        self._R = float(R)
        self._m = float(m)
        self._lam_hat = float(lam_hat)
        self._lam = 2.0 * np.arctanh(0.5 * self._lam_hat)
        self._epsilon = float(epsilon)
        self._profile = bump_profile() if profile is None else profile
        self._channels = list(range(-int(max_channel), int(max_channel) + 1))

    def get_lambda(self):
        """Get the strength λ = 2 artanh(λ̂/2) of the regular potentials."""
        return self._lam

    def get_lambda_hat(self):
        return self._lam_hat

    def get_epsilon(self):
        return self._epsilon

    def get_limit_couplings(self):
        return Couplings(0.0, 0.0, self._lam_hat, 0.0)

    def channel_problem(self, n):
        """Get the radial problem of the regular potential in channel n."""
        return RadialShellProblem(self._R, self._m,
                                  Couplings(0.0, 0.0, self._lam, 0.0),
                                  self._epsilon, self._profile, n)

    def mollified_indicator(self, r):
        """Evaluate χ_ε, the mollified indicator of the exterior, at radii."""
        return self._profile.primitive((np.asarray(r, dtype=float) - self._R)
                                       / self._epsilon)

    def identity_residual(self):
        """Check W σ_j W = σ_j for W = exp(-λχ_ε σ₃), j = 1, 2, across the
        layer.

        Returns:
            float: Largest entry of W σ_j W - σ_j.
        """
        r = np.linspace(self._R - self._epsilon, self._R + self._epsilon,
                        _RESIDUAL_SAMPLES)
        W = exp2x2(-self._lam * self.mollified_indicator(r)[:, None, None]
                   * SIGMA_3)
        return float(max(np.max(np.abs(np.matmul(np.matmul(W, sigma), W)
                                       - sigma))
                         for sigma in (SIGMA_1, SIGMA_2)))

    def transfer_mismatch(self, z=0.0, n=0):
        """Get the distance of the layer transfer from the inverse
        transmission matrix of (0, 0, λ̂).

        Args:
            z (float): Point of the gap.
            n (int): Angular channel.

        Returns:
            float: Spectral norm of the difference.
        """
        transfer = self.channel_problem(n).layer_transfer(np.array(z))
        transmission = DiskProblem(self._R, self._m,
                                   self.get_limit_couplings(),
                                   n).get_transmission()
        try:
            target = np.linalg.inv(transmission)
        except np.linalg.LinAlgError:
            raise ShellSpecNumericalFailureException(
                'Transmission matrix of channel %d is singular.' % n)
        return float(np.linalg.norm(transfer - target, 2))

    def eigenvalues(self, points=DEFAULT_GRID_POINTS, threads=1):
        """Get the gap eigenvalues of the regular magnetic operator.

        Returns:
            list: :class:`shellspec.disk_oracle.DiskEigenvalue` objects
            ascending in z.
        """
        found = ordered_parallel_map(
            lambda n: self.channel_problem(n).eigenvalues(points),
            self._channels, threads)
        result = []
        for n, roots in zip(self._channels, found):
            result.extend(DiskEigenvalue(z, n) for z in roots)
        return sorted(result, key=lambda e: (e.get_z(), e.get_channel()))

    def oracle_eigenvalues(self, points=DEFAULT_GRID_POINTS, threads=1):
        """Get the gap eigenvalues of the δ-shell limit (0, 0, λ̂)."""
        return disk_eigenvalues(self._R, self._m, self.get_limit_couplings(),
                                self._channels[-1], points, threads)


class MagneticAlternativeResult(object):
    """Eigenvalues and algebraic checks of a magnetic approximation."""

    def __init__(self, alternative, eigenvalues, oracle, identity_residual,
                 transfer_mismatch):
        self._alternative = alternative
        self._eigenvalues = eigenvalues
        self._oracle = oracle
        self._identity_residual = identity_residual
        self._transfer_mismatch = transfer_mismatch

    def get_alternative(self):
        return self._alternative

    def get_eigenvalues(self):
        return self._eigenvalues

    def get_oracle_eigenvalues(self):
        return self._oracle

    def get_identity_residual(self):
        return self._identity_residual

    def get_transfer_mismatch(self):
        return self._transfer_mismatch

    def max_eigenvalue_error(self):
        """Get the largest distance between matched eigenvalues.

        Returns:
            float: Largest distance per channel between eigenvalues and limit
            eigenvalues, 0 when both lists are empty, infinity when the
            counts differ.
        """
        if len(self._eigenvalues) != len(self._oracle):
            return float('inf')
        errors = [abs(a.get_z() - b.get_z())
                  for a, b in zip(self._eigenvalues, self._oracle)]
        return max(errors) if errors else 0.0


# FUNCTIONS

def magnetic_alternative(R, m, lam_hat, epsilon, points=DEFAULT_GRID_POINTS,
                         max_channel=DEFAULT_MAGNETIC_CHANNELS, threads=1):
    """Approximate the shell interaction (0, 0, λ̂) by mollified magnetic
    potentials of width ε.

    Returns:
        :class:`MagneticAlternativeResult`: Eigenvalues of the regular
        operator and of its limit, the residual of W σ_j W = σ_j and the
        mismatch of the layer transfer.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecExceptionalCouplingsException`
        if |λ̂| ≥ 2.
    """
    alternative = MagneticAlternative(R, m, lam_hat, epsilon,
                                      max_channel=max_channel)
    result = MagneticAlternativeResult(
        alternative,
        alternative.eigenvalues(points, threads),
        alternative.oracle_eigenvalues(points, threads),
        alternative.identity_residual(),
        alternative.transfer_mismatch())
    logging.getLogger('ShellSpec').info(
        'Magnetic approximation lambda_hat = %.6g, epsilon = %.3g: %d '
        'eigenvalues, transfer mismatch %.3g.'
        % (lam_hat, epsilon, len(result.get_eigenvalues()),
           result.get_transfer_mismatch()))
    return result
