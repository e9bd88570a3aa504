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


"""discretization

The discretization module defines the periodic quadrature of a closed curve
on which boundary integral operators are assembled.
"""


# IMPORT

import numpy as np
from scipy.linalg import toeplitz

from shellspec.utils.python_utils import lock
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException


# CLASSES

class ShellDiscretization(object):
    """N-node periodic quadrature of a curve.

    Nodes are equispaced in arc length, s_j = jℓ/N, and are mapped to the
    parameter t_j = 2πs_j/ℓ = 2πj/N of the periodic quadrature rules:

    - the trapezoidal rule for smooth kernels, weight ℓ/N;
    - the log-kernel rule, exact for ∫ log(4 sin²((t - τ)/2)) f(τ) dτ on
      trigonometric polynomials of degree lower than N/2;
    - the alternating-point rule for the Hilbert kernel
      (1/2π) p.v. ∫ cot((τ - t)/2) f(τ) dτ.

    Discretizations are immutable and can be shared among threads.
    """

    MIN_NODES = 8
    """Smallest admissible number of nodes."""

    def __init__(self, curve, N):
        """Constructor.

        Args:
            curve (:class:`shellspec.geometry.Curve`): The curve.
            N (int): Number of nodes, even and at least 8.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if N is not an even integer not lower than 8.
        """
        if int(N) != N or N < self.MIN_NODES or N % 2 != 0:
            raise ShellSpecInvalidDataException(
                'Discretization needs an even number of nodes >= %d, got %r.'
                % (self.MIN_NODES, N))
        self._curve = curve
        self._N = int(N)
        self._frames = curve.equispaced_nodes(self._N)
        self._s = np.array([f.get_s() for f in self._frames])
        self._x = np.array([f.get_position() for f in self._frames])
        self._t = np.array([f.get_tangent() for f in self._frames])
        self._n = np.array([f.get_normal() for f in self._frames])
        self._kappa = np.array([f.get_curvature() for f in self._frames])
        self._log_weights = None
        self._hilbert_weights = None

    def get_curve(self):
        return self._curve

    def get_N(self):
        return self._N

    def get_length(self):
        return self._curve.get_length()

    def get_step(self):
        """Get the trapezoidal weight h = ℓ/N."""
        return self._curve.get_length() / self._N

    def get_frames(self):
        """Get the nodes.

        Returns:
            list: The N :class:`shellspec.geometry.FramePoint` nodes.
        """
        return self._frames

    def get_arc_lengths(self):
        return self._s

    def get_parameters(self):
        """Get the periodic parameters t_j = 2πj/N of the nodes."""
        return 2.0 * np.pi * np.arange(self._N) / self._N

    def get_positions(self):
        return self._x

    def get_tangents(self):
        return self._t

    def get_normals(self):
        return self._n

    def get_curvatures(self):
        return self._kappa

    def get_complex_positions(self):
        """Get the nodes as complex numbers x₁ + ix₂."""
        return self._x[:, 0] + 1j * self._x[:, 1]

    def get_complex_tangents(self):
        """Get the tangents as complex numbers T = t₁ + it₂."""
        return self._t[:, 0] + 1j * self._t[:, 1]

    def log_weights(self):
        """Get the matrix of the log-kernel rule.

        Entry (j, k) is R_k(t_j) = -(2π/n) Σ_{q=1}^{n-1} cos(q(t_j - t_k))/q
        - (π/n²) cos(n(t_j - t_k)), with N = 2n.

        Returns:
            :class:`numpy.ndarray`: Symmetric N x N Toeplitz matrix.
        """
        with lock(self):
            if self._log_weights is None:
                n = self._N // 2
                delta = self.get_parameters()
                q = np.arange(1, n)
                column = -(2.0 * np.pi / n) * np.sum(
                    np.cos(np.outer(delta, q)) / q, axis=1) \
                    - (np.pi / n ** 2) * np.cos(n * delta)
                self._log_weights = toeplitz(column)
            return self._log_weights

    def hilbert_weights(self):
        """Get the matrix of the alternating-point Hilbert-kernel rule.

        Entry (j, k) is (2/N) cot((t_k - t_j)/2) when j - k is odd and zero
        otherwise, so that the matrix approximates (1/2π) p.v. ∫ cot((τ - t)/2)
        f(τ) dτ. It is real and antisymmetric.

        Returns:
            :class:`numpy.ndarray`: N x N matrix.
        """
        with lock(self):
            if self._hilbert_weights is None:
                index = np.arange(self._N)
                offset = np.subtract.outer(index, index)
                odd = (offset % 2) != 0
                half_angle = np.pi * (-offset) / self._N
                safe = np.where(odd, half_angle, 0.5 * np.pi)
                self._hilbert_weights = np.where(
                    odd, (2.0 / self._N) / np.tan(safe), 0.0)
            return self._hilbert_weights

    def log_rule_residual(self):
        """Get the error of the log-kernel rule on ∫₀^{2π} log(4 sin²(t/2)) dt = 0.

        Returns:
            float: The absolute error of the rule at the first node.
        """
        return float(abs(np.sum(self.log_weights()[0])))

    def integrate(self, values):
        """Integrate nodal values over the curve with the trapezoidal rule.

        Args:
            values (:class:`numpy.ndarray`): Values at the nodes, shape (N, ...).

        Returns:
            The integral.
        """
        return self.get_step() * np.sum(values, axis=0)

    def __str__(self):
        return 'ShellDiscretization(%s, N=%d)' % \
            (self._curve.get_kind().value, self._N)
