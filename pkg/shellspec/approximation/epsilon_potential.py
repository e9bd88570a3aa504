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


"""epsilon_potential

The epsilon_potential module defines the regular potentials
V_ε(x) = B(x_Σ) h_ε(p) supported in the tube of half-width ε around a curve,
which approximate the δ-shell interaction with matrix B as ε → 0.
"""


# IMPORT

import numpy as np
from numpy.polynomial.legendre import leggauss

from shellspec.spin_algebra import coupling_matrix
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecOutOfTubeException


# CLASSES

class EpsilonPotential(object):
    """Potential V_ε = B(x_Σ) h_ε(p) of width ε around a curve."""

    _GAUSS_NODES = 32
    """Gauss-Legendre nodes per half of the transverse interval."""

    _ARC_NODES = 512
    """Trapezoidal nodes along the curve."""

    def __init__(self, curve, couplings, profile, epsilon):
        """Constructor.

        Args:
            curve (:class:`shellspec.geometry.Curve`): The curve.
            couplings (:class:`shellspec.couplings.Couplings`): Couplings with
            ω = 0.
            profile (:class:`shellspec.approximation.profile.Profile`):
            Transverse profile.
            epsilon (float): Width ε, with 0 < ε < β₀.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if ε is not in (0, β₀) or ω does not vanish.
        """
        if not 0.0 < epsilon < curve.max_tube_halfwidth():
            raise ShellSpecInvalidDataException(
                'Width %r is not in (0, %.6g).'
                % (epsilon, curve.max_tube_halfwidth()))
        if not couplings.omega_vanishes():
            raise ShellSpecInvalidDataException(
                'Approximating potentials need couplings with omega = 0.')
        self._curve = curve
        self._couplings = couplings
        self._profile = profile
        self._epsilon = float(epsilon)

    def get_epsilon(self):
        return self._epsilon

    def get_profile(self):
        return self._profile

    def get_couplings(self):
        return self._couplings

    def get_curve(self):
        return self._curve

    def potential_at(self, x):
        """Evaluate V_ε at a plane point.

        Args:
            x (:class:`numpy.ndarray`): Plane point.

        Returns:
            :class:`numpy.ndarray`: The Hermitian 2x2 matrix V_ε(x), zero
            outside the tube of width ε.
        """
        x = np.asarray(x, dtype=float)
        try:
            point = self._curve.cartesian_to_tubular(x)
        except ShellSpecOutOfTubeException:
            return np.zeros((2, 2), dtype=complex)
        if abs(point.get_p()) >= self._epsilon:
            return np.zeros((2, 2), dtype=complex)
        frame = self._curve.frame_at(point.get_s())
        pc = self._couplings.at(point.get_s())
        B = coupling_matrix(pc.eta, pc.tau, pc.lam, frame.get_tangent())
        return B * self._profile.scaled(point.get_p(), self._epsilon)

    def pairing(self, phi):
        """Integrate V_ε φ over the plane in tubular coordinates.

        Args:
            phi (callable): Scalar test function of points of shape (..., 2).

        Returns:
            :class:`numpy.ndarray`: The 2x2 matrix ∫ V_ε φ dx.
        """
        s, weights_s, x, t, n, kappa = self.arc_grid()
        q, weights_q = self.transverse_rule()
        p = self._epsilon * q
        points = x[:, None, :] + p[None, :, None] * n[:, None, :]
        jacobian = 1.0 + p[None, :] * kappa[:, None]
        radial = np.sum(self._profile.h(q)[None, :] * weights_q[None, :]
                        * phi(points) * jacobian, axis=1)
        eta, tau, lam, _ = self._couplings.evaluate(s)
        B = coupling_matrix(eta, tau, lam, t)
        return np.sum((weights_s * radial)[:, None, None] * B, axis=0)

    def limit_pairing(self, phi):
        """Integrate B φ over the curve, the ε → 0 limit of
        :meth:`pairing`.

        Args:
            phi (callable): Scalar test function.

        Returns:
            :class:`numpy.ndarray`: The 2x2 matrix ∫_Σ B φ ds.
        """
        s, weights_s, x, t, _, _ = self.arc_grid()
        eta, tau, lam, _ = self._couplings.evaluate(s)
        B = coupling_matrix(eta, tau, lam, t)
        return np.sum((weights_s * phi(x))[:, None, None] * B, axis=0)

    def transverse_rule(self):
        """Get a Gauss rule on (-1, 1) split at 0.

        Returns:
            tuple: Nodes and weights.
        """
        nodes, weights = leggauss(self._GAUSS_NODES)
        half = 0.5 * (nodes + 1.0)
        return (np.concatenate([half - 1.0, half]),
                np.concatenate([0.5 * weights, 0.5 * weights]))

    def arc_grid(self):
        """Get the trapezoidal rule along the curve.

        Returns:
            tuple: Arc lengths, weights, positions, tangents, normals and
            curvatures at the nodes.
        """
        length = self._curve.get_length()
        s = np.arange(self._ARC_NODES) * length / self._ARC_NODES
        x, t, kappa = self._curve.evaluate(s)
        n = np.stack([t[:, 1], -t[:, 0]], axis=-1)
        weights = np.full(self._ARC_NODES, length / self._ARC_NODES)
        return s, weights, x, t, n, kappa
