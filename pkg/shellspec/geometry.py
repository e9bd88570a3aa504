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


"""geometry

The geometry module represents smooth closed planar curves parametrized by arc
length, together with their Frenet frame, their signed curvature, and the
tubular-coordinate chart of a neighborhood of the curve.

Conventions: curves are positively oriented, the tangent is t = γ'(s), the
normal n = (t₂, -t₁) points out of the enclosed region, and the signed
curvature κ is defined by t'(s) = -κ(s) n(s), so that κ ≥ 0 on convex curves.
"""


# IMPORT

from abc import ABCMeta
from abc import abstractmethod
from enum import Enum
import logging

import numpy as np
from scipy.interpolate import CubicSpline

from shellspec.utils.python_utils import lock
from shellspec.utils.shellspec_exceptions import ShellSpecInvalidDataException
from shellspec.utils.shellspec_exceptions import ShellSpecOutOfTubeException


# CLASSES

class CurveKind(Enum):
    """Shape tag of a curve."""
    CIRCLE = u'circle'
    ELLIPSE = u'ellipse'
    STAR = u'star'
    PARAMETRIC = u'parametric'


class FramePoint(object):
    """Point of a curve with its Frenet frame and signed curvature."""

    def __init__(self, s, x, t, n, kappa, weight=None):
        """Constructor.

        Args:
            s (float): Arc length of the point.
            x (:class:`numpy.ndarray`): Plane point.
            t (:class:`numpy.ndarray`): Unit tangent.
            n (:class:`numpy.ndarray`): Unit outward normal.
            kappa (float): Signed curvature.
            weight (float): Quadrature weight, when the point is a node of a
            quadrature rule, None otherwise.
        """
        self._s = float(s)
        self._x = np.asarray(x, dtype=float)
        self._t = np.asarray(t, dtype=float)
        self._n = np.asarray(n, dtype=float)
        self._kappa = float(kappa)
        self._weight = weight

    def get_s(self):
        """Get the arc length of the point.

        Returns:
            float: The arc length.
        """
        return self._s

    def get_position(self):
        """Get the plane point.

        Returns:
            :class:`numpy.ndarray`: The point, shape (2,).
        """
        return self._x

    def get_tangent(self):
        """Get the unit tangent.

        Returns:
            :class:`numpy.ndarray`: The tangent, shape (2,).
        """
        return self._t

    def get_normal(self):
        """Get the unit outward normal.

        Returns:
            :class:`numpy.ndarray`: The normal, shape (2,).
        """
        return self._n

    def get_curvature(self):
        """Get the signed curvature.

        Returns:
            float: The signed curvature, in 1/length units.
        """
        return self._kappa

    def get_weight(self):
        """Get the quadrature weight.

        Returns:
            float: The weight, or None if the point is not a quadrature node.
        """
        return self._weight

    def __str__(self):
        return 'FramePoint(s=%.6g, x=(%.6g, %.6g), kappa=%.6g)' % \
            (self._s, self._x[0], self._x[1], self._kappa)


class TubularPoint(object):
    """Tubular coordinates (s, p) of a point close to a curve."""

    def __init__(self, s, p, kappa):
        """Constructor.

        Args:
            s (float): Arc length of the foot point on the curve.
            p (float): Signed normal offset, positive outside.
            kappa (float): Signed curvature at the foot point.
        """
        self._s = float(s)
        self._p = float(p)
        self._weight = 1.0 + self._p * float(kappa)
        """Jacobian 1 + pκ(s) of the chart."""

    def get_s(self):
        return self._s

    def get_p(self):
        return self._p

    def get_weight(self):
        return self._weight


class Curve(object):
    """Smooth closed positively oriented curve parametrized by arc length.

    Subclasses implement :meth:`shellspec.geometry.Curve.evaluate`, which maps
    an array of arc lengths to positions, tangents, and curvatures. All the
    other operations are built on top of it. A curve is immutable after
    construction and can be shared among threads.
    """
    __metaclass__ = ABCMeta

    _DENSE_SAMPLES = 4096
    """Number of samples used for curvature bounds and nearest-point seeds."""

    _TUBE_SAFETY_FACTOR = 0.9
    """Fraction of the curvature bound used as tube half-width."""

    _NEWTON_MAX_ITERATIONS = 50
    """Iteration cap of the projection onto the curve."""

    _NEWTON_TOLERANCE = 1e-14
    """Relative step tolerance of the projection onto the curve."""

    def __init__(self, kind, length):
        """Constructor.

        Args:
            kind (:class:`shellspec.geometry.CurveKind`): Shape tag.
            length (float): Arc length of the curve.
        """
        self._kind = kind
        """Shape tag."""

        self._length = float(length)
        """Arc length."""

        self._dense = None
        """Dense samples (s, positions) used as Newton seeds."""

        self._beta = None
        """Admissible tube half-width, computed on first request."""

        self._logger = logging.getLogger('ShellSpec')

    @abstractmethod
    def evaluate(self, s):
        """Evaluate the curve and its frame at arc lengths.

        Args:
            s (:class:`numpy.ndarray`): Arc lengths, any shape; reduced modulo
            the length.

        Returns:
            tuple: Positions (shape (..., 2)), unit tangents (shape (..., 2)),
            and signed curvatures (shape (...)).

        Raises:
            :exc:`NotImplementedError` if the method has not been implemented.
        """
        raise NotImplementedError('You must define \"evaluate()\" to use '
            'the \"Curve\" class.')

    def get_kind(self):
        """Get the shape tag.

        Returns:
            :class:`shellspec.geometry.CurveKind`: The shape tag.
        """
        return self._kind

    def get_length(self):
        """Get the arc length ℓ of the curve.

        Returns:
            float: The length.
        """
        return self._length

    def frame_at(self, s):
        """Get the frame of the curve at an arc length.

        Args:
            s (float): Arc length, reduced modulo the length.

        Returns:
            :class:`shellspec.geometry.FramePoint`: Position, tangent, outward
            normal and signed curvature.
        """
        s = float(s) % self._length
        x, t, kappa = self.evaluate(np.array([s]))
        return FramePoint(s, x[0], t[0], normal_from_tangent(t[0]), kappa[0])

    def equispaced_nodes(self, N):
        """Get the nodes of the periodic trapezoidal rule on the curve.

        Args:
            N (int): Number of nodes, even and at least 4.

        Returns:
            list: N :class:`shellspec.geometry.FramePoint` objects at
            s_j = jℓ/N, each with weight ℓ/N.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if N is not an even integer not lower than 4.
        """
        if int(N) != N or N < 4 or N % 2 != 0:
            raise ShellSpecInvalidDataException(
                'Number of nodes must be an even integer >= 4, got %r.' % (N,))
        N = int(N)
        s = np.arange(N) * self._length / N
        x, t, kappa = self.evaluate(s)
        n = normal_from_tangent(t)
        weight = self._length / N
        return [FramePoint(s[j], x[j], t[j], n[j], kappa[j], weight)
                for j in range(N)]

    def max_tube_halfwidth(self):
        """Get the half-width β₀ of an admissible tubular neighborhood.

        β₀ is 0.9 times the inverse of the sampled curvature maximum, reduced
        further when sampling shows that normal segments of that length issued
        from distant parts of the curve intersect.

        Returns:
            float: The half-width β₀.
        """
        with lock(self):
            if self._beta is None:
                self._beta = self._compute_tube_halfwidth()
            return self._beta

    def tubular_to_cartesian(self, s, p):
        """Map tubular coordinates to the plane.

        Args:
            s (float): Arc length.
            p (float): Signed normal offset, |p| < β₀.

        Returns:
            :class:`numpy.ndarray`: The point γ(s) + p n(s).

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecOutOfTubeException`
            if |p| is not lower than β₀.
        """
        p_array = np.asarray(p, dtype=float)
        beta = self.max_tube_halfwidth()
        if np.any(np.abs(p_array) >= beta):
            raise ShellSpecOutOfTubeException(
                'Normal offset %r is outside the tube of half-width %.6g.'
                % (p, beta))
        x, t, _ = self.evaluate(np.asarray(s, dtype=float))
        return x + p_array[..., None] * normal_from_tangent(t)

    def cartesian_to_tubular(self, x):
        """Map a point of the tube to tubular coordinates.

        The foot point is found by Newton iterations on the orthogonality
        condition (x - γ(s))·t(s) = 0, seeded with the nearest dense sample.

        Args:
            x (:class:`numpy.ndarray`): Plane point.

        Returns:
            :class:`shellspec.geometry.TubularPoint`: The coordinates (s, p).

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecOutOfTubeException`
            if the distance of x from the curve is not lower than β₀.
        """
        x = np.asarray(x, dtype=float)
        beta = self.max_tube_halfwidth()
        s, p, kappa = self._project(x)
        if abs(p) >= beta:
            raise ShellSpecOutOfTubeException(
                'Point (%.6g, %.6g) is outside the tube of half-width %.6g.'
                % (x[0], x[1], beta))
        return TubularPoint(s, p, kappa)

    def distance_to(self, x):
        """Get the distance of a plane point from the curve.

        Args:
            x (:class:`numpy.ndarray`): Plane point.

        Returns:
            float: The distance.
        """
        x = np.asarray(x, dtype=float)
        s_dense, x_dense = self._dense_samples()
        distances = np.hypot(x_dense[:, 0] - x[0], x_dense[:, 1] - x[1])
        j = int(np.argmin(distances))
        if distances[j] < self.max_tube_halfwidth():
            _, p, _ = self._project(x)
            return abs(p)
        return float(distances[j])

    def contains(self, x):
        """Tell whether a plane point lies in the region enclosed by the curve.

        Args:
            x (:class:`numpy.ndarray`): Plane point, not on the curve.

        Returns:
            bool: True if the winding number of the curve around x is 1.
        """
        _, x_dense = self._dense_samples()
        z = (x_dense[:, 0] - x[0]) + 1j * (x_dense[:, 1] - x[1])
        winding = np.sum(np.angle(np.roll(z, -1) / z)) / (2.0 * np.pi)
        return bool(round(winding) == 1)

    def _dense_samples(self):
        with lock(self):
            if self._dense is None:
                s = np.arange(self._DENSE_SAMPLES) * self._length \
                    / self._DENSE_SAMPLES
                x, _, _ = self.evaluate(s)
                self._dense = (s, x)
            return self._dense

    def _project(self, x):
        s_dense, x_dense = self._dense_samples()
        j = int(np.argmin(np.hypot(x_dense[:, 0] - x[0],
                                   x_dense[:, 1] - x[1])))
        s = s_dense[j]
        for _ in range(self._NEWTON_MAX_ITERATIONS):
            position, tangent, kappa = self.evaluate(np.array([s]))
            d = x - position[0]
            p = np.dot(d, normal_from_tangent(tangent[0]))
            step = np.dot(d, tangent[0]) / (1.0 + kappa[0] * p)
            s = s + step
            if abs(step) <= self._NEWTON_TOLERANCE * self._length:
                break
        s = s % self._length
        position, tangent, kappa = self.evaluate(np.array([s]))
        p = np.dot(x - position[0], normal_from_tangent(tangent[0]))
        return s, float(p), float(kappa[0])

    def _compute_tube_halfwidth(self):
        s_dense, x_dense = self._dense_samples()
        _, t_dense, kappa = self.evaluate(s_dense)
        kappa_max = np.max(np.abs(kappa))
        beta = self._TUBE_SAFETY_FACTOR / kappa_max if kappa_max > 0 \
            else self._TUBE_SAFETY_FACTOR * self._length
        # Normal segments issued from sampled points must not come closer to
        # another part of the curve than to their own foot point.
        n_dense = normal_from_tangent(t_dense)
        stride = max(1, self._DENSE_SAMPLES // 512)
        feet = x_dense[::stride]
        normals = n_dense[::stride]
        for _ in range(50):
            injective = True
            for sign in (-1.0, 1.0):
                probes = feet + sign * beta * normals
                distances = np.hypot(
                    probes[:, None, 0] - x_dense[None, :, 0],
                    probes[:, None, 1] - x_dense[None, :, 1]).min(axis=1)
                if np.any(distances < beta * (1.0 - 1e-3)):
                    injective = False
                    break
            if injective:
                return float(beta)
            beta *= self._TUBE_SAFETY_FACTOR
            self._logger.info('Tube half-width reduced to %.6g to keep the '
                              'chart injective.' % beta)
        return float(beta)


class CircleCurve(Curve):
    """Circle of given radius and center."""

    def __init__(self, radius, center=(0.0, 0.0)):
        """Constructor.

        Args:
            radius (float): Radius, positive.
            center (tuple): Center of the circle.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if the radius is not positive.
        """
        if not radius > 0:
            raise ShellSpecInvalidDataException(
                'Circle radius must be positive, got %r.' % (radius,))
        super(CircleCurve, self).__init__(CurveKind.CIRCLE,
                                          2.0 * np.pi * radius)
        self._radius = float(radius)
        self._center = np.asarray(center, dtype=float)

    def get_radius(self):
        return self._radius

    def get_center(self):
        return self._center

    def evaluate(self, s):
        theta = np.asarray(s, dtype=float) / self._radius
        cos_theta = np.cos(theta)
        sin_theta = np.sin(theta)
        x = self._center + self._radius * np.stack([cos_theta, sin_theta],
                                                   axis=-1)
        t = np.stack([-sin_theta, cos_theta], axis=-1)
        kappa = np.full(theta.shape, 1.0 / self._radius)
        return x, t, kappa


class ParametricCurve(Curve):
    """Curve given by a 2π-periodic analytic parametrization θ ↦ γ(θ),
    reparametrized by arc length.

    The arc-length function s(θ) is integrated spectrally from the speed
    |γ'(θ)| sampled on a 4096-point grid. Its inverse is seeded by a periodic
    cubic interpolant and polished by Newton iterations, so that the
    reparametrized curve has unit speed to machine precision.
    """

    _GRID_POINTS = 4096
    """Grid used for the arc-length integration."""

    _INVERSION_ITERATIONS = 8
    """Newton iterations polishing the cubic seed of θ(s)."""

    def __init__(self, position, first_derivative, second_derivative,
                 kind=CurveKind.PARAMETRIC):
        """Constructor.

        Args:
            position (callable): θ ↦ γ(θ), vectorized, returning shape
            (..., 2).
            first_derivative (callable): θ ↦ γ'(θ), same conventions.
            second_derivative (callable): θ ↦ γ''(θ), same conventions.
            kind (:class:`shellspec.geometry.CurveKind`): Shape tag.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if the parametrization is singular or negatively oriented.
        """
        self._position = position
        self._first_derivative = first_derivative
        self._second_derivative = second_derivative

        theta = 2.0 * np.pi * np.arange(self._GRID_POINTS) / self._GRID_POINTS
        speed = np.linalg.norm(first_derivative(theta), axis=-1)
        if np.min(speed) <= 0:
            raise ShellSpecInvalidDataException(
                'Parametrization has vanishing speed.')
        coefficients = np.fft.fft(speed) / self._GRID_POINTS
        frequencies = np.fft.fftfreq(self._GRID_POINTS, 1.0 / self._GRID_POINTS)
        keep = np.abs(coefficients) > 1e-17 * abs(coefficients[0])
        keep[0] = False
        self._mean_speed = coefficients[0].real
        self._frequencies = frequencies[keep]
        self._coefficients = coefficients[keep]
        super(ParametricCurve, self).__init__(kind,
                                              2.0 * np.pi * self._mean_speed)

        s_grid = self._arc_length(theta)
        s_nodes = np.append(s_grid, self._length)
        offsets = np.append(theta - 2.0 * np.pi * s_grid / self._length, 0.0)
        self._theta_seed = CubicSpline(s_nodes, offsets, bc_type='periodic')

        area = 0.5 * np.mean(
            np.cross(position(theta), first_derivative(theta))) * 2.0 * np.pi
        if area <= 0:
            raise ShellSpecInvalidDataException(
                'Parametrization must be positively oriented.')

    def _arc_length(self, theta):
        theta = np.asarray(theta, dtype=float)
        phase = np.exp(1j * np.multiply.outer(theta, self._frequencies))
        series = np.sum(self._coefficients * (phase - 1.0)
                        / (1j * self._frequencies), axis=-1)
        return self._mean_speed * theta + series.real

    def theta_of_s(self, s):
        """Invert the arc-length function.

        Args:
            s (:class:`numpy.ndarray`): Arc lengths.

        Returns:
            :class:`numpy.ndarray`: Parameters θ with s(θ) = s.
        """
        s = np.mod(np.asarray(s, dtype=float), self._length)
        theta = 2.0 * np.pi * s / self._length + self._theta_seed(s)
        for _ in range(self._INVERSION_ITERATIONS):
            speed = np.linalg.norm(self._first_derivative(theta), axis=-1)
            step = (self._arc_length(theta) - s) / speed
            theta = theta - step
            if np.max(np.abs(step)) < 1e-15:
                break
        return theta

    def evaluate(self, s):
        theta = self.theta_of_s(s)
        x = self._position(theta)
        d1 = self._first_derivative(theta)
        d2 = self._second_derivative(theta)
        speed = np.linalg.norm(d1, axis=-1)
        t = d1 / speed[..., None]
        kappa = (d1[..., 0] * d2[..., 1] - d1[..., 1] * d2[..., 0]) / speed ** 3
        return x, t, kappa


class EllipseCurve(ParametricCurve):
    """Ellipse with semi-axes a (along x) and b (along y)."""

    def __init__(self, a, b):
        if not (a > 0 and b > 0):
            raise ShellSpecInvalidDataException(
                'Ellipse semi-axes must be positive, got %r, %r.' % (a, b))
        self._a = float(a)
        self._b = float(b)
        super(EllipseCurve, self).__init__(
            lambda th: np.stack([a * np.cos(th), b * np.sin(th)], axis=-1),
            lambda th: np.stack([-a * np.sin(th), b * np.cos(th)], axis=-1),
            lambda th: np.stack([-a * np.cos(th), -b * np.sin(th)], axis=-1),
            CurveKind.ELLIPSE)

    def get_semi_axes(self):
        return self._a, self._b


class StarCurve(ParametricCurve):
    """Star-shaped curve r(θ) = R(1 + a cos kθ)."""

    def __init__(self, radius, amplitude, lobes):
        """Constructor.

        Args:
            radius (float): Mean radius R.
            amplitude (float): Relative amplitude a, with |a| < 1.
            lobes (int): Number of lobes k.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidDataException`
            if the parameters do not describe a simple smooth curve.
        """
        if not radius > 0 or not abs(amplitude) < 1 or int(lobes) != lobes \
            or lobes < 0:
            raise ShellSpecInvalidDataException(
                'Invalid star curve (radius=%r, amplitude=%r, lobes=%r).'
                % (radius, amplitude, lobes))
        R, a, k = float(radius), float(amplitude), int(lobes)
        self._parameters = (R, a, k)

        def r(th):
            return R * (1.0 + a * np.cos(k * th))

        def dr(th):
            return -R * a * k * np.sin(k * th)

        def ddr(th):
            return -R * a * k * k * np.cos(k * th)

        def position(th):
            return np.stack([r(th) * np.cos(th), r(th) * np.sin(th)], axis=-1)

        def first(th):
            return np.stack([dr(th) * np.cos(th) - r(th) * np.sin(th),
                             dr(th) * np.sin(th) + r(th) * np.cos(th)], axis=-1)

        def second(th):
            return np.stack(
                [ddr(th) * np.cos(th) - 2.0 * dr(th) * np.sin(th)
                 - r(th) * np.cos(th),
                 ddr(th) * np.sin(th) + 2.0 * dr(th) * np.cos(th)
                 - r(th) * np.sin(th)], axis=-1)

        super(StarCurve, self).__init__(position, first, second,
                                        CurveKind.STAR)

    def get_parameters(self):
        """Get the star parameters.

        Returns:
            tuple: (R, a, k).
        """
        return self._parameters


# FUNCTIONS

def normal_from_tangent(t):
    """Get the outward normal n = (t₂, -t₁) of a positively oriented curve.

    Args:
        t (:class:`numpy.ndarray`): Tangents, shape (..., 2).

    Returns:
        :class:`numpy.ndarray`: Normals, same shape.
    """
    t = np.asarray(t, dtype=float)
    return np.stack([t[..., 1], -t[..., 0]], axis=-1)
