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


"""layer_potential

The layer_potential module evaluates the single-layer potential

    Φ_z φ(x) = ∫_Σ φ_z(x - y) φ(y) ds(y),   x ∉ Σ,

of a nodal density, and its one-sided boundary traces.
"""


# IMPORT

import logging

import numpy as np
from scipy.signal import resample

from shellspec.kernels import green_phi_batch
from shellspec.shell_operator.boundary_operator import apply_Cz
from shellspec.spin_algebra import sigma_dot
from shellspec.utils.python_utils import lock
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException


# CLASSES

class LayerPotential(object):
    """Single-layer potential of a density given at the nodes of a
    discretization.

    Near the curve the trapezoidal rule loses accuracy like
    exp(-2π dist / h); the density is therefore Fourier-upsampled to a grid
    whose step is a fixed fraction of the distance of the target.
    """

    _RESOLUTION = 6.0
    """Nodes per unit of ℓ/dist used near the curve."""

    _MAX_NODES = 1 << 17
    """Cap of the upsampled grid."""

    TRACE_OFFSET = 1e-3
    """Default normal offset of the one-sided traces."""

    def __init__(self, disc, sp, density):
        """Constructor.

        Args:
            disc (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
            Quadrature of the curve.
            sp (:class:`shellspec.kernels.SpectralParameter`): Spectral
            parameter.
            density (:class:`numpy.ndarray`): Nodal density, shape (N, 2).

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if the density does not match the discretization.
        """
        density = np.asarray(density, dtype=complex)
        if density.shape != (disc.get_N(), 2):
            raise ShellSpecInvalidDataException(
                'Density must have shape (%d, 2), got %s.'
                % (disc.get_N(), density.shape))
        self._disc = disc
        self._sp = sp
        self._density = density
        self._fine = {}
        self._logger = logging.getLogger('ShellSpec')

    def get_density(self):
        return self._density

    def _grid(self, count):
        with lock(self):
            if count not in self._fine:
                curve = self._disc.get_curve()
                s = np.arange(count) * curve.get_length() / count
                x, _, _ = curve.evaluate(s)
                if count == self._disc.get_N():
                    values = self._density
                else:
                    values = resample(self._density, count, axis=0)
                self._fine[count] = (x, values)
            return self._fine[count]

    def _node_count(self, distance):
        N = self._disc.get_N()
        if distance <= 0:
            return N
        wanted = int(np.ceil(self._RESOLUTION * self._disc.get_length()
                             / distance))
        if wanted <= N:
            return N
        count = min(wanted + wanted % 2, self._MAX_NODES)
        if count == self._MAX_NODES:
            self._logger.warning('Layer potential target at distance %.3g '
                                 'needs more than %d nodes.'
                                 % (distance, self._MAX_NODES))
        return count

    def evaluate(self, x):
        """Evaluate the potential at an off-curve point.

        Args:
            x (:class:`numpy.ndarray`): Plane point, not on the curve.

        Returns:
            :class:`numpy.ndarray`: The spinor Φ_z φ(x), shape (2,).

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if x lies on the curve.
        """
        x = np.asarray(x, dtype=float)
        distance = self._disc.get_curve().distance_to(x)
        if distance == 0.0:
            raise ShellSpecInvalidDataException(
                'Layer potential evaluated on the curve.')
        count = self._node_count(distance)
        y, values = self._grid(count)
        kernel = green_phi_batch(self._sp, x[None, :] - y)
        weight = self._disc.get_length() / count
        return weight * np.einsum('kab,kb->a', kernel, values)

    def one_sided_trace(self, s, interior, offset=TRACE_OFFSET):
        """Get a one-sided boundary trace by Richardson extrapolation.

        Values at normal offsets δ and δ/2 are combined as 2u(δ/2) - u(δ).

        Args:
            s (float): Arc length of the boundary point.
            interior (bool): True for the trace from the enclosed region.
            offset (float): Normal offset δ.

        Returns:
            :class:`numpy.ndarray`: The trace, shape (2,).
        """
        curve = self._disc.get_curve()
        sign = -1.0 if interior else 1.0
        near = self.evaluate(curve.tubular_to_cartesian(s, sign * 0.5 * offset))
        far = self.evaluate(curve.tubular_to_cartesian(s, sign * offset))
        return 2.0 * near - far


# FUNCTIONS

def plemelj_check(disc, sp, density, node_indices=None,
                  offset=LayerPotential.TRACE_OFFSET):
    """Compare extrapolated one-sided traces with the jump relations
    𝒯± Φ_z φ = ∓(i/2)(σ·n)φ + C_z φ, + denoting the interior side.

    Args:
        disc (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
        Quadrature of the curve.
        sp (:class:`shellspec.kernels.SpectralParameter`): Spectral parameter.
        density (:class:`numpy.ndarray`): Nodal density, shape (N, 2).
        node_indices (list): Nodes at which the traces are compared; four
        spread nodes by default.
        offset (float): Normal offset of the traces.

    Returns:
        float: Largest absolute discrepancy.
    """
    density = np.asarray(density, dtype=complex)
    N = disc.get_N()
    if node_indices is None:
        node_indices = [0, N // 4, N // 2, 3 * N // 4]
    potential = LayerPotential(disc, sp, density)
    cz_density = apply_Cz(disc, sp, density)
    frames = disc.get_frames()
    error = 0.0
    for j in node_indices:
        jump = 0.5j * sigma_dot(frames[j].get_normal()).dot(density[j])
        for interior, sign in ((True, -1.0), (False, 1.0)):
            expected = sign * jump + cz_density[j]
            trace = potential.one_sided_trace(frames[j].get_s(), interior,
                                              offset)
            error = max(error, float(np.max(np.abs(trace - expected))))
    return error
