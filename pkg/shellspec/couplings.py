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


"""couplings

The couplings module represents the coupling functions (η, τ, λ, ω) of a
δ-shell interaction and implements the transformations acting on them:
classification, gauge reduction of ω, the isospectral and charge-conjugation
maps, and the forward and backward renormalization maps relating regular
approximating potentials to their shell limits.
"""


# IMPORT

from enum import Enum
import logging

import numpy as np

from shellspec.spin_algebra import PointCouplings
from shellspec.spin_algebra import IDENTITY
from shellspec.spin_algebra import SIGMA_3
from shellspec.spin_algebra import gauge_identity_residual
from shellspec.spin_algebra import sigma_dot
from shellspec.utils.shellspec_exceptions import ShellSpecExceptionalCouplingsException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidOperationException


# CONSTANTS

CLASSIFICATION_SAMPLES = 1024
"""Number of arc-length samples used to inspect function-valued couplings."""

CONSTANCY_TOLERANCE = 1e-10
"""Oscillation below which a sampled function is treated as constant."""

EXCEPTIONAL_TOLERANCE = 1e-6
"""Distance of √d/2 from (k + ½)π under which d is exceptional."""

_LOGGER = logging.getLogger('ShellSpec')


# CLASSES

class BoundaryConditionKind(Enum):
    """Boundary conditions produced by confining couplings."""
    ZIGZAG = u'zigzag'
    INFINITE_MASS = u'infinite_mass'
    QUANTUM_DOT = u'quantum_dot'
    GENERAL_CONFINING = u'general_confining'


class Couplings(object):
    """Coupling functions (η, τ, λ, ω) on a closed curve.

    Each coupling is either a real constant or a real callable of the arc
    length s, periodic with the length of the curve. Callables must accept
    :class:`numpy.ndarray` arguments.
    """

    _NAMES = ('eta', 'tau', 'lambda', 'omega')

    _DERIVATIVE_STEP = 1e-5
    """Relative step of the centered differences in s."""

    def __init__(self, eta=0.0, tau=0.0, lam=0.0, omega=0.0, length=None):
        """Constructor.

        Args:
            eta (float or callable): Electrostatic coupling η.
            tau (float or callable): Lorentz-scalar coupling τ.
            lam (float or callable): Anomalous magnetic coupling λ.
            omega (float or callable): Coupling ω of the σ·n term.
            length (float): Period of the callables, the length of the curve;
            required when at least one coupling is a callable.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if a coupling is neither a real number nor a callable, or if a
            callable is given without the period.
        """
        self._values = []
        self._constant = True
        for name, value in zip(self._NAMES, (eta, tau, lam, omega)):
            if callable(value):
                self._constant = False
            else:
                try:
                    value = float(value)
                except (TypeError, ValueError):
                    raise ShellSpecInvalidDataException(
                        'Coupling %s must be a real number or a function of s.'
                        % name)
            self._values.append(value)
        if not self._constant and (length is None or not length > 0):
            raise ShellSpecInvalidDataException(
                'Function-valued couplings need the length of the curve.')
        self._length = None if length is None else float(length)

    @classmethod
    def from_config_values(cls, values, length=None):
        """Build couplings from a dictionary of configuration values.

        Args:
            values (dict): Maps 'eta', 'tau', 'lambda', 'omega' to numbers or
            callables; missing keys default to zero.
            length (float): Length of the curve.

        Returns:
            :class:`shellspec.couplings.Couplings`: The couplings.
        """
        return cls(values.get('eta', 0.0), values.get('tau', 0.0),
                   values.get('lambda', 0.0), values.get('omega', 0.0),
                   length)

    def is_constant(self):
        """Tell whether all four couplings are constants.

        Returns:
            bool: True if no coupling is a callable.
        """
        return self._constant

    def get_length(self):
        return self._length

    def get_constants(self):
        """Get the constant values (η, τ, λ, ω).

        Returns:
            tuple: The four constants.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidOperationException`
            if some coupling is function-valued.
        """
        if not self._constant:
            raise ShellSpecInvalidOperationException(
                'Couplings are not constant.')
        return tuple(self._values)

    def evaluate(self, s):
        """Evaluate the couplings at arc lengths.

        Args:
            s (:class:`numpy.ndarray`): Arc lengths.

        Returns:
            tuple: Arrays (η, τ, λ, ω) with the shape of s.
        """
        s = np.asarray(s, dtype=float)
        result = []
        for value in self._values:
            if callable(value):
                result.append(np.broadcast_to(
                    np.asarray(value(s), dtype=float), s.shape).copy())
            else:
                result.append(np.full(s.shape, value))
        return tuple(result)

    def derivatives(self, s):
        """Evaluate the s-derivatives of the couplings by centered differences.

        Args:
            s (:class:`numpy.ndarray`): Arc lengths.

        Returns:
            tuple: Arrays (η', τ', λ', ω') with the shape of s.
        """
        s = np.asarray(s, dtype=float)
        if self._constant:
            return tuple(np.zeros(s.shape) for _ in self._NAMES)
        h = self._DERIVATIVE_STEP * self._length
        forward = self.evaluate(s + h)
        backward = self.evaluate(s - h)
        return tuple((f - b) / (2.0 * h) for f, b in zip(forward, backward))

    def at(self, s):
        """Get the couplings at one boundary point.

        Args:
            s (float): Arc length.

        Returns:
            :class:`shellspec.spin_algebra.PointCouplings`: The values.
        """
        eta, tau, lam, omega = self.evaluate(np.array([float(s)]))
        return PointCouplings(eta[0], tau[0], lam[0], omega[0])

    def samples(self, count=CLASSIFICATION_SAMPLES):
        """Sample the couplings on an equispaced arc-length grid.

        Args:
            count (int): Number of samples.

        Returns:
            tuple: Arrays (η, τ, λ, ω); a single sample for constants.
        """
        if self._constant:
            return tuple(np.array([v]) for v in self._values)
        return self.evaluate(np.arange(count) * self._length / count)

    def d_samples(self, count=CLASSIFICATION_SAMPLES):
        """Sample the invariant d = η² - τ² - λ².

        Returns:
            :class:`numpy.ndarray`: The samples.
        """
        eta, tau, lam, _ = self.samples(count)
        return eta ** 2 - tau ** 2 - lam ** 2

    def omega_vanishes(self):
        """Tell whether ω is identically zero on the sampling grid."""
        return bool(np.all(np.abs(self.samples()[3]) < CONSTANCY_TOLERANCE))

    def map(self, transform):
        """Build new couplings by a pointwise transformation.

        Args:
            transform (callable): (η, τ, λ, ω) arrays ↦ (η', τ', λ', ω')
            arrays.

        Returns:
            :class:`shellspec.couplings.Couplings`: Constant couplings if these
            are constant, function-valued couplings otherwise.
        """
        if self._constant:
            values = transform(*[np.array([v]) for v in self._values])
            return Couplings(*[float(np.asarray(v).ravel()[0]) for v in values])

        def component(index):
            return lambda s: transform(*self.evaluate(s))[index]

        return Couplings(component(0), component(1), component(2),
                         component(3), self._length)

    def __str__(self):
        if self._constant:
            return 'Couplings(eta=%.15g, tau=%.15g, lambda=%.15g, ' \
                'omega=%.15g)' % tuple(self._values)
        return 'Couplings(function-valued, period=%.15g)' % self._length


class ClassificationReport(object):
    """Invariants and flags of a set of couplings."""

    def __init__(self, d, criticality, confining, critical, zigzag,
                 d_constant, theta):
        self._d = d
        """Samples of d = η² - τ² - λ²."""

        self._criticality = criticality
        """Samples of the criticality functional (d/4 - 1)² - λ²."""

        self._confining = confining
        self._critical = critical
        self._zigzag = zigzag
        self._d_constant = d_constant

        self._theta = theta
        """Quantum-dot angle samples, or None."""

    def get_d(self):
        """Get d, a number when constant, the array of samples otherwise."""
        return float(self._d[0]) if self._d_constant else self._d

    def get_d_samples(self):
        return self._d

    def get_criticality(self):
        """Get the criticality functional, a number when it is constant."""
        if np.ptp(self._criticality) < CONSTANCY_TOLERANCE:
            return float(self._criticality[0])
        return self._criticality

    def is_confining(self):
        return self._confining

    def is_critical(self):
        return self._critical

    def is_zigzag(self):
        return self._zigzag

    def is_d_constant(self):
        return self._d_constant

    def get_theta(self):
        """Get the quantum-dot angle θ, a number when it is constant.

        Returns:
            float: θ with sin θ = -λ/2 and cos θ = τ/2, or None when the
            couplings are not confining or η does not vanish.
        """
        if self._theta is None:
            return None
        if np.ptp(self._theta) < CONSTANCY_TOLERANCE:
            return float(self._theta[0])
        return self._theta

    def as_dict(self):
        """Get a JSON-friendly view of the report.

        Returns:
            dict: Scalars for constant quantities, ranges otherwise.
        """
        def scalar_or_range(values):
            if values is None:
                return None
            values = np.atleast_1d(values)
            if np.ptp(values) < CONSTANCY_TOLERANCE:
                return float(values[0])
            return [float(np.min(values)), float(np.max(values))]

        return {
            'd': scalar_or_range(self._d),
            'criticality': scalar_or_range(self._criticality),
            'confining': self._confining,
            'critical': self._critical,
            'zigzag': self._zigzag,
            'd_constant': self._d_constant,
            'theta': scalar_or_range(self._theta)
        }


class GaugeReduction(object):
    """Elimination of ω by the gauge transform of the boundary conditions.

    The couplings (η, τ, λ, ω) and (Xη, Xτ, Xλ, 0) define unitarily
    equivalent operators when X solves dX² - 4 + (4 + ω² - d)X = 0; the
    factor z = (dX² + 4) / (X(4 + d - ω² + 4ωi)) has modulus one.
    """

    def __init__(self, couplings, roots):
        """Constructor.

        Args:
            couplings (:class:`shellspec.couplings.Couplings`): Original
            couplings.
            roots (list): Pairs (X, z), the preferred one first.
        """
        self._couplings = couplings
        self._roots = roots

    def get_X(self):
        return self._roots[0][0]

    def get_z(self):
        return self._roots[0][1]

    def get_reduced(self):
        """Get the reduced couplings (Xη, Xτ, Xλ, 0) of the preferred root.

        Returns:
            :class:`shellspec.couplings.Couplings`: The reduced couplings.
        """
        return self.reduced_for(self.get_X())

    def get_roots(self):
        """Get all the roots.

        Returns:
            list: Pairs (X, z).
        """
        return list(self._roots)

    def reduced_for(self, X):
        return self._couplings.map(
            lambda eta, tau, lam, omega: (X * eta, X * tau, X * lam,
                                          np.zeros_like(omega)))

    def quadratic_residual(self, X):
        """Get the residual of the quadratic equation at a root."""
        d = float(self._couplings.d_samples()[0])
        omega = float(self._couplings.samples()[3][0])
        return abs(d * X ** 2 - 4.0 + (4.0 + omega ** 2 - d) * X)

    def identity_residual(self, frame, root_index=0):
        """Residual of (M⁺_ω)⁻¹ M⁻_ω (M⁻_X)⁻¹ M⁺_X = z̄𝕀 at a boundary point.

        Args:
            frame (:class:`shellspec.geometry.FramePoint`): Boundary point.
            root_index (int): Index of the root in
            :meth:`shellspec.couplings.GaugeReduction.get_roots`.

        Returns:
            float: Norm of the residual.
        """
        X, z = self._roots[root_index]
        pc = self._couplings.at(frame.get_s())
        reduced = PointCouplings(X * pc.eta, X * pc.tau, X * pc.lam, 0.0)
        return gauge_identity_residual(pc, reduced, z, frame)


class ConfinementSplit(object):
    """One-sided boundary conditions of confining couplings (d ≡ -4).

    The operator decouples into an interior and an exterior part; each side
    carries the condition P± f = 0 with P± = ±i(σ·n) + ½B.
    """

    def __init__(self, couplings, kind, theta, description):
        self._couplings = couplings
        self._kind = kind
        self._theta = theta
        self._description = description

    def get_kind(self):
        """Get the kind of boundary condition.

        Returns:
            :class:`shellspec.couplings.BoundaryConditionKind`: The kind.
        """
        return self._kind

    def get_theta(self):
        return self._theta

    def get_description(self):
        return self._description

    def matrices_at(self, frame):
        """Get the interior and exterior boundary-condition matrices.

        Args:
            frame (:class:`shellspec.geometry.FramePoint`): Boundary point.

        Returns:
            tuple: (P⁺, P⁻), the interior and exterior matrices.
        """
        pc = self._couplings.at(frame.get_s())
        sn = sigma_dot(frame.get_normal())
        half = 0.5 * (pc.eta * IDENTITY + pc.tau * SIGMA_3
                      + pc.lam * sigma_dot(frame.get_tangent()))
        return half + 1j * sn, half - 1j * sn


# FUNCTIONS

def criticality(eta, tau, lam):
    """Get the criticality functional (d/4 - 1)² - λ².

    Returns:
        :class:`numpy.ndarray`: The functional, shaped as the inputs.
    """
    d = np.asarray(eta) ** 2 - np.asarray(tau) ** 2 - np.asarray(lam) ** 2
    return (d / 4.0 - 1.0) ** 2 - np.asarray(lam) ** 2


def classify(c):
    """Classify couplings as non-critical, critical, or confining.

    Args:
        c (:class:`shellspec.couplings.Couplings`): Couplings.

    Returns:
        :class:`shellspec.couplings.ClassificationReport`: The report.
    """
    eta, tau, lam, _ = c.samples()
    d = eta ** 2 - tau ** 2 - lam ** 2
    crit = criticality(eta, tau, lam)
    confining = bool(np.all(np.abs(d + 4.0) < CONSTANCY_TOLERANCE))
    critical = bool(np.any(np.abs(crit) < CONSTANCY_TOLERANCE)
                    or np.min(crit) < 0.0 < np.max(crit))
    zigzag = bool(np.all(np.abs(eta) < CONSTANCY_TOLERANCE)
                  and np.all(np.abs(tau) < CONSTANCY_TOLERANCE)
                  and (np.all(np.abs(lam - 2.0) < CONSTANCY_TOLERANCE)
                       or np.all(np.abs(lam + 2.0) < CONSTANCY_TOLERANCE)))
    d_constant = bool(np.ptp(d) < CONSTANCY_TOLERANCE)
    theta = None
    if confining and np.all(np.abs(eta) < CONSTANCY_TOLERANCE):
        theta = np.arctan2(-lam / 2.0, tau / 2.0)
    return ClassificationReport(d, crit, confining, critical, zigzag,
                                d_constant, theta)


def gauge_reduce(c):
    """Eliminate ω by the gauge transform of the boundary conditions.

    Args:
        c (:class:`shellspec.couplings.Couplings`): Couplings with constant d
        and constant ω.

    Returns:
        :class:`shellspec.couplings.GaugeReduction`: The reduction, with every
        admissible root; when ω = 0 the root X = 1 comes first.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecExceptionalCouplingsException`
        if d or ω is not constant on the curve.
    """
    d_values = c.d_samples()
    omega_values = c.samples()[3]
    if np.ptp(d_values) >= CONSTANCY_TOLERANCE:
        raise ShellSpecExceptionalCouplingsException(
            'Gauge reduction needs d = eta^2 - tau^2 - lambda^2 constant.')
    if np.ptp(omega_values) >= CONSTANCY_TOLERANCE:
        raise ShellSpecExceptionalCouplingsException(
            'Gauge reduction needs a constant omega.')
    if not c.is_constant():
        _LOGGER.warning('Gauge reduction of non-constant couplings with '
                        'constant d is experimental.')
    d = float(d_values[0])
    omega = float(omega_values[0])

    if abs(omega) < CONSTANCY_TOLERANCE and abs(d + 4.0) < CONSTANCY_TOLERANCE:
        roots_x = [1.0]
    elif abs(d) < CONSTANCY_TOLERANCE:
        roots_x = [4.0 / (4.0 + omega ** 2)]
    else:
        b = 4.0 + omega ** 2 - d
        discriminant = max(b ** 2 + 16.0 * d, 0.0)
        root = np.sqrt(discriminant)
        # Stable pair: the product of the roots is -4/d.
        q = -0.5 * (b + np.copysign(root, b))
        roots_x = [q / d, -4.0 / q] if q != 0 else [1.0]
        roots_x = sorted(set(roots_x), key=lambda x: abs(x - 1.0))

    denominator = 4.0 + d - omega ** 2 + 4.0j * omega
    roots = []
    for X in roots_x:
        # Both numerator and denominator vanish at (d, omega) = (-4, 0).
        if abs(denominator) < CONSTANCY_TOLERANCE:
            z = 1.0
        else:
            z = (d * X ** 2 + 4.0) / (X * denominator)
        roots.append((float(X), complex(z)))
    _LOGGER.info('Gauge reduction with X = %.15g, z = %s.'
                 % (roots[0][0], roots[0][1]))
    return GaugeReduction(c, roots)


def isospectral_partner(c):
    """Get the couplings (-4/d)(η, τ, λ), isospectral to c.

    Args:
        c (:class:`shellspec.couplings.Couplings`): Couplings with ω = 0.

    Returns:
        :class:`shellspec.couplings.Couplings`: The partner couplings.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecExceptionalCouplingsException`
        if d takes the value 0 or -4.
    """
    _require_no_omega(c)
    d = c.d_samples()
    if np.any(np.abs(d) < CONSTANCY_TOLERANCE) \
        or np.any(np.abs(d + 4.0) < CONSTANCY_TOLERANCE):
        raise ShellSpecExceptionalCouplingsException(
            'Isospectral partner undefined when d hits 0 or -4.')

    def transform(eta, tau, lam, omega):
        factor = -4.0 / (eta ** 2 - tau ** 2 - lam ** 2)
        return factor * eta, factor * tau, factor * lam, omega

    return c.map(transform)


def charge_conjugate(c):
    """Get the couplings (-η, τ, -λ) of the charge-conjugated operator.

    The spectrum of the image is the mirror image z ↦ -z of the original one.

    Args:
        c (:class:`shellspec.couplings.Couplings`): Couplings with ω = 0.

    Returns:
        :class:`shellspec.couplings.Couplings`: The conjugated couplings.
    """
    _require_no_omega(c)
    return c.map(lambda eta, tau, lam, omega: (-eta, tau, -lam, omega))


def forward_factor(d, tolerance=EXCEPTIONAL_TOLERANCE):
    """Get the renormalization factor of the forward map.

    Args:
        d (:class:`numpy.ndarray`): Values of d.
        tolerance (float): Width of the exceptional set.

    Returns:
        :class:`numpy.ndarray`: tan(√d/2)/(√d/2), 1, or tanh(√-d/2)/(√-d/2).

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecExceptionalCouplingsException`
        if √d/2 is within tolerance of an odd multiple of π/2.
    """
    d = np.asarray(d, dtype=float)
    half = 0.5 * np.sqrt(np.abs(d))
    positive = d > 0
    offset = np.abs(np.mod(half, np.pi) - 0.5 * np.pi)
    if np.any(positive & (offset < tolerance)):
        raise ShellSpecExceptionalCouplingsException(
            'd = %s lies in the exceptional set of the renormalization map.'
            % np.atleast_1d(d)[np.argmax(positive & (offset < tolerance))])
    small = half < 1e-6
    safe = np.where(small, 1.0, half)
    series = 1.0 + d / 12.0
    return np.where(small, series,
                    np.where(positive, np.tan(safe) / safe,
                             np.tanh(safe) / safe))


def renormalize_forward(c, tolerance=EXCEPTIONAL_TOLERANCE):
    """Map couplings of regular approximating potentials to the couplings of
    their δ-shell limit.

    Args:
        c (:class:`shellspec.couplings.Couplings`): Couplings with ω = 0.
        tolerance (float): Width of the exceptional set.

    Returns:
        :class:`shellspec.couplings.Couplings`: (η̂, τ̂, λ̂) = f(d)(η, τ, λ).

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecExceptionalCouplingsException`
        if d hits the exceptional set {(2k + 1)²π²}.
    """
    _require_no_omega(c)
    forward_factor(c.d_samples(), tolerance)

    def transform(eta, tau, lam, omega):
        f = forward_factor(eta ** 2 - tau ** 2 - lam ** 2, tolerance)
        return f * eta, f * tau, f * lam, omega

    return c.map(transform)


def backward_factor(d_hat, k=0):
    """Get the factor of the backward renormalization map on branch k.

    Args:
        d_hat (:class:`numpy.ndarray`): Values of d̂, all nonzero or all
        handled on branch 0.
        k (int): Branch index.

    Returns:
        :class:`numpy.ndarray`: The factor.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecExceptionalCouplingsException`
        if d̂ ≤ -4 somewhere.
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidOperationException`
        if k ≠ 0 where d̂ ≤ 0.
    """
    d_hat = np.asarray(d_hat, dtype=float)
    if np.any(d_hat <= -4.0):
        raise ShellSpecExceptionalCouplingsException(
            'Backward renormalization needs d_hat > -4.')
    half = 0.5 * np.sqrt(np.abs(d_hat))
    small = half < 1e-6
    if k != 0 and np.any((d_hat < 0) | small):
        raise ShellSpecInvalidOperationException(
            'Branch k = %d exists only where d_hat > 0.' % k)
    safe = np.where(small, 1.0, half)
    series = 1.0 - d_hat / 12.0
    return np.where(small, series,
                    np.where(d_hat > 0, (np.arctan(safe) + k * np.pi) / safe,
                             np.arctanh(np.minimum(safe, 1.0 - 1e-16))
                             / safe))


def renormalize_backward(c_hat, k=0):
    """Map δ-shell couplings to couplings of approximating potentials whose
    shell limit they are.

    The map is the inverse of :func:`shellspec.couplings.renormalize_forward`
    on branch k. For ĉ = 0 and k ≠ 0 every constant triple with
    d = (2kπ)² is a preimage; the canonical one (2|k|π, 0, 0) is returned.

    Args:
        c_hat (:class:`shellspec.couplings.Couplings`): Couplings with ω = 0
        and d̂ > -4.
        k (int): Branch index; only d̂ > 0 admits k ≠ 0.

    Returns:
        :class:`shellspec.couplings.Couplings`: The preimage.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecExceptionalCouplingsException`
        if d̂ ≤ -4 somewhere.
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidOperationException`
        if the requested branch does not exist.
    """
    _require_no_omega(c_hat)
    k = int(k)
    eta, tau, lam, _ = c_hat.samples()
    if k != 0 and c_hat.is_constant() and np.all(np.abs(eta) < 1e-15) \
        and np.all(np.abs(tau) < 1e-15) and np.all(np.abs(lam) < 1e-15):
        return Couplings(2.0 * abs(k) * np.pi, 0.0, 0.0, 0.0)
    backward_factor(c_hat.d_samples(), k)

    def transform(eta, tau, lam, omega):
        g = backward_factor(eta ** 2 - tau ** 2 - lam ** 2, k)
        return g * eta, g * tau, g * lam, omega

    return c_hat.map(transform)


def confinement_split(c):
    """Describe the decoupled boundary conditions of confining couplings.

    Args:
        c (:class:`shellspec.couplings.Couplings`): Couplings with d ≡ -4 and
        ω = 0.

    Returns:
        :class:`shellspec.couplings.ConfinementSplit`: The one-sided
        conditions.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidOperationException`
        if the couplings are not confining.
    """
    _require_no_omega(c)
    report = classify(c)
    if not report.is_confining():
        raise ShellSpecInvalidOperationException(
            'Couplings are not confining (d is not identically -4).')
    theta = report.get_theta()
    eta, tau, lam, _ = c.samples()
    if report.is_zigzag():
        kind = BoundaryConditionKind.ZIGZAG
        if np.all(lam > 0):
            description = 'zig-zag: upper component vanishes from the ' \
                'interior, lower component from the exterior'
        else:
            description = 'zig-zag: lower component vanishes from the ' \
                'interior, upper component from the exterior'
    elif theta is not None and np.all(np.abs(lam) < CONSTANCY_TOLERANCE):
        kind = BoundaryConditionKind.INFINITE_MASS
        description = 'infinite mass, sign %+d' % int(np.sign(tau[0]))
    elif theta is not None:
        kind = BoundaryConditionKind.QUANTUM_DOT
        description = 'quantum dot, angle %s' % (
            '%.15g' % theta if np.isscalar(theta) else 'varying')
    else:
        kind = BoundaryConditionKind.GENERAL_CONFINING
        description = 'general confining boundary condition'
    return ConfinementSplit(c, kind, theta, description)


# UTILITY FUNCTIONS

def _require_no_omega(c):
    if not c.omega_vanishes():
        raise ShellSpecInvalidOperationException(
            'Operation needs omega = 0; apply gauge_reduce first.')
