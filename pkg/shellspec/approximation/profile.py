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


"""profile

The profile module defines the transverse profiles h of the regular potentials
squeezing onto a curve: bounded functions supported in [-1, 1] with unit
integral, rescaled as h_ε(p) = h(p/ε)/ε.
"""


# IMPORT

import numpy as np
from scipy.integrate import quad

from shellspec.utils.shellspec_exceptions import ShellSpecInvalidProfileException


# CONSTANTS

NORMALIZATION_TOLERANCE = 1e-12
"""Admissible error of ∫ h = 1."""


# CLASSES

class Profile(object):
    """Transverse profile h supported in [-1, 1].

    Besides h the profile carries its classical derivative, its primitive
    F(t) = ∫₋₁ᵗ h, and the jumps of h, which make up the singular part of the
    distributional derivative.
    """

    def __init__(self, name, function, derivative=None, primitive=None,
                 jumps=(), breakpoints=(0.0,)):
        """Constructor.

        Args:
            name (str): Name of the profile.
            function (callable): h on (-1, 1), vectorized.
            derivative (callable): Classical derivative h' on the open
            intervals where h is smooth, or None when not available.
            primitive (callable): F(t) = ∫₋₁ᵗ h, computed by quadrature when
            None.
            jumps (tuple): Pairs (position, jump of h).
            breakpoints (tuple): Points of (-1, 1) where h or h' are not
            smooth.

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidProfileException`
            if ∫ h differs from 1.
        """
        self._name = name
        self._function = function
        self._derivative = derivative
        self._primitive = primitive
        self._jumps = tuple(jumps)
        self._breakpoints = tuple(breakpoints)
        total, _ = quad(lambda t: float(self._function(np.array(t))), -1.0,
                        1.0, points=self._breakpoints or None, epsabs=1e-14,
                        epsrel=1e-14, limit=200)
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
            raise ShellSpecInvalidProfileException(
                'Profile %s has integral %.15g instead of 1.' % (name, total))
        self._mass_below = float(self.primitive(0.0))

    def get_name(self):
        return self._name

    def get_jumps(self):
        """Get the jumps of h as pairs (position, jump)."""
        return self._jumps

    def get_breakpoints(self):
        return self._breakpoints

    def is_differentiable(self):
        """Tell whether the classical derivative is available."""
        return self._derivative is not None

    def mass_below(self):
        """Get ∫₋₁⁰ h."""
        return self._mass_below

    def mass_above(self):
        """Get ∫₀¹ h."""
        return 1.0 - self._mass_below

    def h(self, t):
        """Evaluate h, zero outside (-1, 1).

        Args:
            t (:class:`numpy.ndarray`): Points.

        Returns:
            :class:`numpy.ndarray`: Values of h.
        """
        t = np.asarray(t, dtype=float)
        inside = np.abs(t) < 1.0
        return np.where(inside, self._function(np.where(inside, t, 0.0)), 0.0)

    def derivative(self, t):
        """Evaluate the classical derivative h', zero outside (-1, 1).

        Raises:
            :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidProfileException`
            if the profile has no derivative.
        """
        if self._derivative is None:
            raise ShellSpecInvalidProfileException(
                'Profile %s is not differentiable.' % self._name)
        t = np.asarray(t, dtype=float)
        inside = np.abs(t) < 1.0
        return np.where(inside, self._derivative(np.where(inside, t, 0.0)),
                        0.0)

    def primitive(self, t):
        """Evaluate F(t) = ∫₋₁ᵗ h, clipped to [0, 1] outside (-1, 1)."""
        t = np.clip(np.asarray(t, dtype=float), -1.0, 1.0)
        if self._primitive is not None:
            return self._primitive(t)
        return np.vectorize(
            lambda u: quad(lambda v: float(self._function(np.array(v))),
                           -1.0, u, epsabs=1e-14, epsrel=1e-14)[0])(t)

    def scaled(self, p, epsilon):
        """Evaluate h_ε(p) = h(p/ε)/ε."""
        return self.h(np.asarray(p) / epsilon) / epsilon

    def scaled_derivative(self, p, epsilon):
        """Evaluate the classical part of h_ε'(p) = h'(p/ε)/ε²."""
        return self.derivative(np.asarray(p) / epsilon) / epsilon ** 2

    def H(self, p, epsilon):
        """Evaluate H_ε(p) = ∫ₚ^ε h_ε for p ≥ 0 and -∫₋ε^p h_ε for p < 0.

        H_ε vanishes outside (-ε, ε), satisfies H_ε' = -h_ε away from 0, and
        jumps by -1 across p = 0.

        Args:
            p (:class:`numpy.ndarray`): Normal offsets.
            epsilon (float): Width ε.

        Returns:
            :class:`numpy.ndarray`: Values of H_ε.
        """
        p = np.asarray(p, dtype=float)
        F = self.primitive(p / epsilon)
        return np.where(np.abs(p) >= epsilon, 0.0,
                        np.where(p >= 0.0, 1.0 - F, -F))

    def __str__(self):
        return self._name


# FUNCTIONS

def box_profile():
    """Get the box profile h = ½ on (-1, 1)."""
    return Profile('box',
                   lambda t: np.full(np.shape(t), 0.5),
                   lambda t: np.zeros(np.shape(t)),
                   lambda t: 0.5 * (t + 1.0),
                   jumps=((-1.0, 0.5), (1.0, -0.5)),
                   breakpoints=())


def triangle_profile():
    """Get the triangle profile h = 1 - |t|."""
    return Profile('triangle',
                   lambda t: 1.0 - np.abs(t),
                   lambda t: -np.sign(t),
                   lambda t: np.where(t < 0.0, 0.5 * (1.0 + t) ** 2,
                                      1.0 - 0.5 * (1.0 - t) ** 2))


def raised_cosine_profile():
    """Get the raised-cosine profile h = ½(1 + cos πt)."""
    return Profile('raised_cosine',
                   lambda t: 0.5 * (1.0 + np.cos(np.pi * t)),
                   lambda t: -0.5 * np.pi * np.sin(np.pi * t),
                   lambda t: 0.5 * (t + 1.0)
                   + np.sin(np.pi * t) / (2.0 * np.pi))


def bump_profile():
    """Get the standard mollifier h = C exp(-1/(1 - t²))."""
    def raw(t):
        return np.exp(-1.0 / (1.0 - np.asarray(t) ** 2))

    constant = 1.0 / quad(lambda t: float(raw(t)), -1.0, 1.0,
                          epsabs=1e-15, epsrel=1e-15)[0]
    return Profile('bump',
                   lambda t: constant * raw(t),
                   lambda t: constant * raw(t) * (-2.0 * t)
                   / (1.0 - t ** 2) ** 2)


PROFILES = {
    'box': box_profile,
    'triangle': triangle_profile,
    'raised_cosine': raised_cosine_profile,
    'bump': bump_profile
}
"""Built-in profiles by name."""


def profile_by_name(name):
    """Get a built-in profile.

    Args:
        name (str): One of 'box', 'triangle', 'raised_cosine', 'bump'.

    Returns:
        :class:`shellspec.approximation.profile.Profile`: The profile.

    Raises:
        :exc:`shellspec.utils.shellspec_exceptions.ShellSpecInvalidProfileException`
        if the name is unknown.
    """
    name = name.replace('-', '_')
    if name not in PROFILES:
        raise ShellSpecInvalidProfileException(
            'Unknown profile %r; available: %s.'
            % (name, ', '.join(sorted(PROFILES))))
    return PROFILES[name]()
