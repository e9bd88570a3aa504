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


"""krein_resolvent

The krein_resolvent module applies the resolvent of a δ-shell operator to a
compactly supported source through the Krein-type formula

    u = F - Φ_z (𝕀 + B C_z)⁻¹ B 𝒯F,   F = (D₀ - z)⁻¹ f,

where 𝒯F is the trace of F on the curve. It is used to validate the
boundary integral machinery: u solves (D₀ - z)u = f off the curve and its
one-sided traces satisfy the transmission condition.
"""


# IMPORT

import logging

import numpy as np
from numpy.polynomial.legendre import leggauss

from shellspec.kernels import green_phi_batch
from shellspec.shell_operator.boundary_operator import bs_operator
from shellspec.shell_operator.layer_potential import LayerPotential
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecNumericalFailureException


# CONSTANTS

NEAR_SINGULAR_THRESHOLD = 1e-4
"""Smallest σ_min(𝕀 + B C_z) accepted by the resolvent."""


# CLASSES

class BumpSource(object):
    """Compactly supported smooth spinor field
    f(x) = v exp(-1/(1 - |x - x₀|²/ρ²)) on the disk |x - x₀| < ρ.

    The resolvent only accepts sources whose closed support stays off the
    curve.
    """

    _RADIAL_NODES = 64
    _ANGULAR_NODES = 64

    def __init__(self, center, radius, spinor=(1.0, 0.0)):
        """Constructor.

        Args:
            center (tuple): Center x₀ of the support.
            radius (float): Radius ρ of the support, positive.
            spinor (tuple): Constant spinor v.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if the radius is not positive.
        """
        if not radius > 0:
            raise ShellSpecInvalidDataException(
                'Source radius must be positive, got %r.' % (radius,))
        self._center = np.asarray(center, dtype=float)
        self._radius = float(radius)
        self._spinor = np.asarray(spinor, dtype=complex)
        nodes, weights = leggauss(self._RADIAL_NODES)
        self._unit_nodes = 0.5 * (nodes + 1.0)
        self._unit_weights = 0.5 * weights
        angles = 2.0 * np.pi * np.arange(self._ANGULAR_NODES) \
            / self._ANGULAR_NODES
        self._directions = np.stack([np.cos(angles), np.sin(angles)], axis=-1)

    def get_center(self):
        return self._center

    def get_radius(self):
        return self._radius

    def evaluate(self, x):
        """Evaluate the field at points.

        Args:
            x (:class:`numpy.ndarray`): Points, shape (..., 2).

        Returns:
            :class:`numpy.ndarray`: Spinors, shape (..., 2).
        """
        x = np.asarray(x, dtype=float)
        q = np.sum((x - self._center) ** 2, axis=-1) / self._radius ** 2
        inside = q < 1.0
        profile = np.where(inside,
                           np.exp(-1.0 / np.where(inside, 1.0 - q, 1.0)), 0.0)
        return profile[..., None] * self._spinor

    def is_disjoint_from(self, curve):
        """Tell whether the closed support avoids the curve."""
        return curve.distance_to(self._center) > self._radius

    def free_resolvent(self, sp, x):
        """Apply the free resolvent (D₀ - z)⁻¹ to the field at a point.

        The convolution with φ_z is computed in polar coordinates centered at
        x₀ when x lies outside the support, at x otherwise, so that the
        integrand is smooth.

        Args:
            sp (:class:`shellspec.kernels.SpectralParameter`): Spectral
            parameter.
            x (:class:`numpy.ndarray`): Evaluation point.

        Returns:
            :class:`numpy.ndarray`: The spinor ((D₀ - z)⁻¹ f)(x).
        """
        x = np.asarray(x, dtype=float)
        offset = x - self._center
        d_theta = 2.0 * np.pi / self._ANGULAR_NODES
        if np.hypot(offset[0], offset[1]) >= self._radius:
            r = self._radius * self._unit_nodes
            points = self._center + r[:, None, None] * self._directions[None]
            weights = self._radius * self._unit_weights * r * d_theta
            weights = np.broadcast_to(weights[:, None], points.shape[:2])
        else:
            b = self._directions.dot(offset)
            c = np.dot(offset, offset) - self._radius ** 2
            ray = -b + np.sqrt(b ** 2 - c)
            r = ray[None, :] * self._unit_nodes[:, None]
            points = x + r[..., None] * self._directions[None]
            weights = ray[None, :] * self._unit_weights[:, None] * r * d_theta
        displacement = x - points
        keep = np.hypot(displacement[..., 0], displacement[..., 1]) > 0
        kernel = green_phi_batch(sp, displacement[keep])
        values = self.evaluate(points[keep])
        return np.einsum('k,kab,kb->a', weights[keep], kernel, values)


class KreinResolvent(object):
    """Resolvent of the δ-shell operator applied to a compact source."""

    def __init__(self, disc, sp, couplings, source):
        """Constructor.

        Args:
            disc (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
            Quadrature of the curve.
            sp (:class:`shellspec.kernels.SpectralParameter`): Spectral
            parameter, not an eigenvalue.
            couplings (:class:`shellspec.couplings.Couplings`): Gauge-reduced
            couplings.
            source (:class:`shellspec.shell_operator.krein_resolvent.BumpSource`):
            Source, with support disjoint from the curve.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if the support of the source meets the curve.
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecNumericalFailureException`
            if 𝕀 + B C_z is nearly singular.
        """
        if not source.is_disjoint_from(disc.get_curve()):
            raise ShellSpecInvalidDataException(
                'Support of the source must not meet the curve.')
        self._disc = disc
        self._sp = sp
        self._couplings = couplings
        self._source = source
        self._logger = logging.getLogger('ShellSpec')

        operator = bs_operator(disc, sp, couplings)
        self._sigma_min = operator.smallest_singular_value()
        if self._sigma_min < NEAR_SINGULAR_THRESHOLD:
            raise ShellSpecNumericalFailureException(
                'Birman-Schwinger operator nearly singular at z = %s '
                '(sigma_min = %.3g).' % (sp.get_z(), self._sigma_min))
        N = disc.get_N()
        trace = np.array([source.free_resolvent(sp, x)
                          for x in disc.get_positions()])
        self._trace = trace
        eta, tau, lam, _ = couplings.evaluate(disc.get_arc_lengths())
        T = disc.get_complex_tangents()
        b_trace = np.stack([(eta + tau) * trace[:, 0]
                            + lam * np.conj(T) * trace[:, 1],
                            lam * T * trace[:, 0]
                            + (eta - tau) * trace[:, 1]], axis=-1)
        psi = operator.solve(b_trace.T.reshape(2 * N))
        self._density = psi.reshape(2, N).T
        self._potential = LayerPotential(disc, sp, self._density)
        self._logger.info('Krein resolvent set up at z = %s, sigma_min = '
                          '%.3g.' % (sp.get_z(), self._sigma_min))

    def get_sigma_min(self):
        return self._sigma_min

    def get_density(self):
        """Get the density ψ = (𝕀 + B C_z)⁻¹ B 𝒯F at the nodes."""
        return self._density

    def get_layer_potential(self):
        return self._potential

    def free_part(self, x):
        """Get F = (D₀ - z)⁻¹ f at a point."""
        return self._source.free_resolvent(self._sp, x)

    def evaluate(self, x):
        """Evaluate u at an off-curve point.

        Args:
            x (:class:`numpy.ndarray`): Plane point, not on the curve.

        Returns:
            :class:`numpy.ndarray`: The spinor u(x).
        """
        return self.free_part(x) - self._potential.evaluate(x)

    def one_sided_trace(self, s, interior,
                        offset=LayerPotential.TRACE_OFFSET):
        """Get a one-sided trace of u by Richardson extrapolation.

        Args:
            s (float): Arc length of the boundary point.
            interior (bool): True for the trace from the enclosed region.
            offset (float): Normal offset.

        Returns:
            :class:`numpy.ndarray`: The trace.
        """
        curve = self._disc.get_curve()
        sign = -1.0 if interior else 1.0
        values = [self.evaluate(curve.tubular_to_cartesian(s, sign * p))
                  for p in (0.5 * offset, offset)]
        return 2.0 * values[0] - values[1]


# FUNCTIONS

def krein_resolvent_apply(disc, sp, c, f):
    """Apply the resolvent of the δ-shell operator to a compact source.

    Args:
        disc (:class:`shellspec.shell_operator.discretization.ShellDiscretization`):
        Quadrature of the curve.
        sp (:class:`shellspec.kernels.SpectralParameter`): Spectral parameter.
        c (:class:`shellspec.couplings.Couplings`): Gauge-reduced couplings.
        f (:class:`shellspec.shell_operator.krein_resolvent.BumpSource`):
        Source.

    Returns:
        :class:`shellspec.shell_operator.krein_resolvent.KreinResolvent`: An
        evaluator of u = (𝒟 - z)⁻¹ f.
    """
    return KreinResolvent(disc, sp, c, f)


def dirac_residual(evaluator, sp, x, step=1e-3):
    """Residual of (D₀ - z)u = 0 at an off-curve point outside the support of
    the source, by fourth-order centered differences.

    Args:
        evaluator (callable): Point ↦ spinor u.
        sp (:class:`shellspec.kernels.SpectralParameter`): Spectral parameter.
        x (:class:`numpy.ndarray`): Evaluation point.
        step (float): Difference step.

    Returns:
        float: |(D₀ - z)u(x)| relative to |u(x)|.
    """
    x = np.asarray(x, dtype=float)
    stencil = ((-2, 1.0 / 12.0), (-1, -2.0 / 3.0), (1, 2.0 / 3.0),
               (2, -1.0 / 12.0))
    derivatives = []
    for axis in (0, 1):
        shift = np.zeros(2)
        shift[axis] = step
        derivatives.append(sum(weight * evaluator(x + k * shift)
                               for k, weight in stencil) / step)
    d1, d2 = derivatives
    u = evaluator(x)
    m = sp.get_mass()
    z = sp.get_z()
    # -i(σ₁∂₁ + σ₂∂₂)u + mσ₃u - zu
    residual = np.array([
        -1j * (d1[1] - 1j * d2[1]) + (m - z) * u[0],
        -1j * (d1[0] + 1j * d2[0]) - (m + z) * u[1]])
    return float(np.max(np.abs(residual)) / max(np.max(np.abs(u)), 1e-300))
