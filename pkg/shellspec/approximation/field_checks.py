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


"""field_checks

The field_checks module verifies the magnetic content of the approximating
potentials λ h_ε σ·t: the vector potential A_ε = λ h_ε(p) t(s) and its field

    B_ε = λ h_ε(p) κ(s)/(1 + pκ(s)) + λ h_ε'(p),

which converge to the single layer λ t δ_Σ and to the double layer
-λ ∂_n δ_Σ respectively.
"""


# IMPORT

import logging

import numpy as np

from shellspec.approximation.epsilon_potential import EpsilonPotential
from shellspec.couplings import Couplings


# CONSTANTS

DEFAULT_FIELD_EPSILONS = (0.2, 0.1, 0.05, 0.025)
"""Widths of the default convergence table."""

HEADER = ('epsilon', 'a_pairing_error', 'b_pairing_error', 'a_order',
          'b_order', 'curl_residual')
"""Columns of the convergence table."""

_CURL_OFFSETS = (-0.71, -0.37, 0.37, 0.71)
"""Normal offsets of the curl samples, in units of ε."""

_CURL_ARCS = 5

_CURL_STEP = 0.01
"""Difference step of the curl, in units of ε."""

_LOGGER = logging.getLogger('ShellSpec')


# CLASSES

class ProbeFunction(object):
    """Scalar test function with its gradient."""

    def __init__(self, name, value, gradient):
        """Constructor.

        Args:
            name (str): Name of the function.
            value (callable): Points of shape (..., 2) ↦ values of shape (...).
            gradient (callable): Points of shape (..., 2) ↦ gradients of
            shape (..., 2).
        """
        self._name = name
        self._value = value
        self._gradient = gradient

    def get_name(self):
        return self._name

    def value(self, x):
        return self._value(np.asarray(x, dtype=float))

    def gradient(self, x):
        return self._gradient(np.asarray(x, dtype=float))

    def __call__(self, x):
        return self.value(x)

    def __str__(self):
        return self._name


class MagneticLayer(object):
    """Vector potential and magnetic field of λ h_ε σ·t around a curve."""

    def __init__(self, curve, lam, profile, epsilon):
        """Constructor.

        Args:
            curve (:class:`shellspec.geometry.Curve`): The curve.
            lam (float): Magnetic strength λ.
            profile (:class:`shellspec.approximation.profile.Profile`):
            Transverse profile.
            epsilon (float): Width ε, with 0 < ε < β₀.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if ε is not in (0, β₀).
        """
        self._lam = float(lam)
        self._profile = profile
        self._epsilon = float(epsilon)
        self._potential = EpsilonPotential(curve, Couplings(0.0, 0.0, lam, 0.0),
                                           profile, epsilon)
        self._curve = curve

    def get_epsilon(self):
        return self._epsilon

    def vector_potential(self, x):
        """Evaluate A_ε, read off from V_ε = σ·A_ε.

        Args:
            x (:class:`numpy.ndarray`): Plane point.

        Returns:
            :class:`numpy.ndarray`: The real 2-vector A_ε(x).
        """
        V = self._potential.potential_at(x)
        return np.array([V[1, 0].real, V[1, 0].imag])

    def magnetic_field(self, x):
        """Evaluate the classical part of B_ε at a point of the tube.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidProfileException`
            if the profile has no derivative.
        """
        point = self._curve.cartesian_to_tubular(np.asarray(x, dtype=float))
        s, p = point.get_s(), point.get_p()
        kappa = self._curve.frame_at(s).get_curvature()
        h = float(self._profile.scaled(p, self._epsilon))
        dh = float(self._profile.scaled_derivative(p, self._epsilon))
        return self._lam * (h * kappa / (1.0 + p * kappa) + dh)

    def a_pairing(self, phi):
        """Integrate A_ε φ over the plane.

        Returns:
            :class:`numpy.ndarray`: The 2-vector ∫ A_ε φ dx.
        """
        s, w, x, t, n, kappa = self._potential.arc_grid()
        q, wq = self._potential.transverse_rule()
        p = self._epsilon * q
        points = x[:, None, :] + p[None, :, None] * n[:, None, :]
        jacobian = 1.0 + p[None, :] * kappa[:, None]
        radial = np.sum(self._profile.h(q)[None, :] * wq[None, :]
                        * phi(points) * jacobian, axis=1)
        return self._lam * np.sum((w * radial)[:, None] * t, axis=0)

    def b_pairing(self, phi):
        """Integrate B_ε φ over the plane, including the jumps of h.

        Returns:
            float: ∫ B_ε φ dx.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidProfileException`
            if the profile has no derivative.
        """
        s, w, x, t, n, kappa = self._potential.arc_grid()
        q, wq = self._potential.transverse_rule()
        eps = self._epsilon
        points = x[:, None, :] + eps * q[None, :, None] * n[:, None, :]
        stretch = 1.0 + eps * q[None, :] * kappa[:, None]
        integrand = (self._profile.h(q)[None, :] * kappa[:, None]
                     + self._profile.derivative(q)[None, :] / eps * stretch) \
            * phi(points)
        total = np.sum(w * np.sum(wq[None, :] * integrand, axis=1))
        for position, jump in self._profile.get_jumps():
            at_jump = x + eps * position * n
            total += np.sum(w * jump / eps * (1.0 + eps * position * kappa)
                            * phi(at_jump))
        return self._lam * total

    def a_limit(self, phi):
        """Get λ ∫_Σ t φ ds."""
        _, w, x, t, _, _ = self._potential.arc_grid()
        return self._lam * np.sum((w * phi(x))[:, None] * t, axis=0)

    def b_limit(self, test_function):
        """Get -λ ∫_Σ ∂_n φ ds."""
        _, w, x, _, n, _ = self._potential.arc_grid()
        normal_derivative = np.sum(test_function.gradient(x) * n, axis=-1)
        return -self._lam * np.sum(w * normal_derivative)

    def curl_residual(self):
        """Compare ∂₁A₂ - ∂₂A₁ by fourth-order differences with B_ε.

        Samples lie inside the tube away from p = 0 and the edges.

        Returns:
            float: Largest deviation relative to the largest |B_ε|.
        """
        length = self._curve.get_length()
        step = _CURL_STEP * self._epsilon
        stencil = ((-2, 1.0 / 12.0), (-1, -2.0 / 3.0), (1, 2.0 / 3.0),
                   (2, -1.0 / 12.0))
        deviations = []
        fields = []
        for s in np.arange(_CURL_ARCS) * length / _CURL_ARCS:
            for offset in _CURL_OFFSETS:
                x = self._curve.tubular_to_cartesian(s, offset * self._epsilon)
                d2A1 = sum(weight * self.vector_potential(x + (0.0, k * step))[0]
                           for k, weight in stencil) / step
                d1A2 = sum(weight * self.vector_potential(x + (k * step, 0.0))[1]
                           for k, weight in stencil) / step
                B = self.magnetic_field(x)
                deviations.append(abs(d1A2 - d2A1 - B))
                fields.append(abs(B))
        return max(deviations) / max(max(fields), 1e-300)


class FieldCheckRow(object):
    """Row of the convergence table of the magnetic layer."""

    def __init__(self, epsilon, a_error, b_error, a_order, b_order,
                 curl_residual):
        self._epsilon = float(epsilon)
        self._a_error = float(a_error)
        self._b_error = float(b_error)
        self._a_order = float(a_order)
        self._b_order = float(b_order)
        self._curl_residual = float(curl_residual)

    def get_epsilon(self):
        return self._epsilon

    def get_a_error(self):
        return self._a_error

    def get_b_error(self):
        return self._b_error

    def get_a_order(self):
        """Observed order of the A pairing, NaN on the first row."""
        return self._a_order

    def get_b_order(self):
        """Observed order of the B pairing, NaN on the first row."""
        return self._b_order

    def get_curl_residual(self):
        return self._curl_residual

    def as_tuple(self):
        return (self._epsilon, self._a_error, self._b_error, self._a_order,
                self._b_order, self._curl_residual)


# FUNCTIONS

def gaussian_test_function(center=(0.3, 0.2), width=1.0):
    """Get φ(x) = exp(-|x - x₀|²/w²)."""
    center = np.asarray(center, dtype=float)

    def value(x):
        return np.exp(-np.sum((x - center) ** 2, axis=-1) / width ** 2)

    def gradient(x):
        return -2.0 * (x - center) / width ** 2 * value(x)[..., None]

    return ProbeFunction('gaussian', value, gradient)


def constant_test_function(value=1.0):
    """Get the constant test function φ = value."""
    return ProbeFunction('constant',
                         lambda x: np.full(x.shape[:-1], float(value)),
                         lambda x: np.zeros(x.shape))


def field_checks(curve, lam, profile, epsilons=DEFAULT_FIELD_EPSILONS,
                 test_function=None, curl=True):
    """Tabulate the convergence of the magnetic layer along widths.

    Args:
        curve (:class:`shellspec.geometry.Curve`): The curve.
        lam (float): Magnetic strength λ.
        profile (:class:`shellspec.approximation.profile.Profile`):
        Differentiable transverse profile, possibly with jumps.
        epsilons (list): Decreasing widths below β₀.
        test_function (:class:`ProbeFunction`): Test function, the Gaussian
        centered at (0.3, 0.2) by default.
        curl (bool): Whether to compute the curl residual; NaN otherwise.

    Returns:
        list: :class:`FieldCheckRow` objects, one per width. Orders compare
        each row with the previous one.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidProfileException`
        if the profile has no derivative.
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
        if a width is not in (0, β₀).
    """
    phi = gaussian_test_function() if test_function is None else test_function
    rows = []
    previous = None
    for epsilon in epsilons:
        layer = MagneticLayer(curve, lam, profile, epsilon)
        a_error = float(np.linalg.norm(layer.a_pairing(phi)
                                       - layer.a_limit(phi)))
        b_error = abs(layer.b_pairing(phi) - layer.b_limit(phi))
        residual = layer.curl_residual() if curl else float('nan')
        if previous is None:
            a_order = b_order = float('nan')
        else:
            a_order = _observed_order(previous[1], a_error, previous[0],
                                      epsilon)
            b_order = _observed_order(previous[2], b_error, previous[0],
                                      epsilon)
        rows.append(FieldCheckRow(epsilon, a_error, b_error, a_order, b_order,
                                  residual))
        previous = (epsilon, a_error, b_error)
        _LOGGER.debug('Field check at width %.3g: errors %.3g, %.3g.'
                      % (epsilon, a_error, b_error))
    return rows


# UTILITY FUNCTIONS

def _observed_order(error_before, error_after, epsilon_before, epsilon_after):
    if error_before <= 0.0 or error_after <= 0.0:
        return float('nan')
    return float(np.log(error_before / error_after)
                 / np.log(epsilon_before / epsilon_after))
