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


"""conjugation_field

The conjugation_field module defines the matrix field
U_ε(x) = exp[i(σ·n)B H_ε(p)] in the tube of width ε, identity outside, which
conjugates the approximating operators into operators with bounded
coefficients. Its one-sided limits on the curve produce the transmission
matrix of the renormalized δ-shell interaction.
"""


# IMPORT

import numpy as np
from numpy.polynomial.legendre import leggauss

from shellspec.spin_algebra import IDENTITY
from shellspec.spin_algebra import SIGMA_3
from shellspec.spin_algebra import coupling_matrix
from shellspec.spin_algebra import exp2x2
from shellspec.spin_algebra import sigma_dot
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecOutOfTubeException


# CLASSES

class ConjugationField(object):
    """Conjugation field U_ε of an approximating potential.

    Gradients use the Wilcox formula
    ∂ e^X = ∫₀¹ e^{uX} (∂X) e^{(1-u)X} du, integrated by 16-point Gauss.
    """

    _WILCOX_NODES = 16

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
            if ε is not in (0, β₀).
        """
        if not 0.0 < epsilon < curve.max_tube_halfwidth():
            raise ShellSpecInvalidDataException(
                'Width %r is not in (0, %.6g).'
                % (epsilon, curve.max_tube_halfwidth()))
        self._curve = curve
        self._couplings = couplings
        self._profile = profile
        self._epsilon = float(epsilon)
        nodes, weights = leggauss(self._WILCOX_NODES)
        self._u = 0.5 * (nodes + 1.0)
        self._w = 0.5 * weights

    def get_epsilon(self):
        return self._epsilon

    def H(self, p):
        """Evaluate H_ε(p)."""
        return self._profile.H(p, self._epsilon)

    def generator(self, s):
        """Get A(s) = i(σ·n)B at a boundary point.

        Args:
            s (float): Arc length.

        Returns:
            :class:`numpy.ndarray`: The 2x2 matrix.
        """
        frame = self._curve.frame_at(s)
        pc = self._couplings.at(s)
        B = coupling_matrix(pc.eta, pc.tau, pc.lam, frame.get_tangent())
        return 1j * sigma_dot(frame.get_normal()).dot(B)

    def field_at(self, x):
        """Evaluate U_ε at a plane point.

        Args:
            x (:class:`numpy.ndarray`): Plane point.

        Returns:
            :class:`numpy.ndarray`: The 2x2 matrix U_ε(x).
        """
        point = self._tubular(x)
        if point is None:
            return IDENTITY.copy()
        return exp2x2(self.generator(point.get_s())
                      * float(self.H(point.get_p())))

    def boundary_limits(self, s):
        """Get the one-sided limits of U_ε at a boundary point.

        Args:
            s (float): Arc length.

        Returns:
            tuple: (U⁺, U⁻), the interior and exterior limits
            exp[-i(∫₋₁⁰ h)(σ·n)B] and exp[i(∫₀¹ h)(σ·n)B].
        """
        A = self.generator(s)
        return (exp2x2(-self._profile.mass_below() * A),
                exp2x2(self._profile.mass_above() * A))

    def gradient_at(self, x):
        """Evaluate (∂₁U_ε, ∂₂U_ε) by the Wilcox formula.

        Args:
            x (:class:`numpy.ndarray`): Plane point off the curve.

        Returns:
            :class:`numpy.ndarray`: Shape (2, 2, 2), the derivative along
            x_j in slot j.
        """
        point = self._tubular(x)
        if point is None:
            return np.zeros((2, 2, 2), dtype=complex)
        s, p = point.get_s(), point.get_p()
        frame = self._curve.frame_at(s)
        t, n, kappa = frame.get_tangent(), frame.get_normal(), \
            frame.get_curvature()
        A = self.generator(s)
        H = float(self.H(p))
        h = float(self._profile.scaled(p, self._epsilon))
        X = A * H
        U = exp2x2(X)

        pc = self._couplings.at(s)
        derivatives = self._couplings.derivatives(np.array([s]))
        d_eta, d_tau, d_lam = (float(v[0]) for v in derivatives[:3])
        st = sigma_dot(t)
        sn = sigma_dot(n)
        B = coupling_matrix(pc.eta, pc.tau, pc.lam, t)
        dB = d_eta * IDENTITY + d_tau * SIGMA_3 + d_lam * st \
            - pc.lam * kappa * sn
        dA = 1j * kappa * st.dot(B) + 1j * sn.dot(dB)
        tangential = sum(w * exp2x2(u * X).dot(dA).dot(exp2x2((1.0 - u) * X))
                         for u, w in zip(self._u, self._w)) * H
        normal = -h * A.dot(U)
        stretch = 1.0 + p * kappa
        return np.stack([normal * n[j] + tangential * t[j] / stretch
                         for j in (0, 1)])

    def condition_bound(self, s):
        """Get the bound e^{2‖B‖} on the condition number of U_ε."""
        frame = self._curve.frame_at(s)
        pc = self._couplings.at(s)
        B = coupling_matrix(pc.eta, pc.tau, pc.lam, frame.get_tangent())
        return float(np.exp(2.0 * np.linalg.norm(B, 2)))

    def _tubular(self, x):
        try:
            point = self._curve.cartesian_to_tubular(np.asarray(x, dtype=float))
        except ShellSpecOutOfTubeException:
            return None
        if abs(point.get_p()) >= self._epsilon:
            return None
        return point
